#include "kring/catalog.hpp"

#include <string>

namespace kring {

namespace {

void require_one_object(const FiniteRingoid& r, const char* what) {
  if (r.object_count() != 1 || !r.unital())
    throw StructuralError(std::string(what) + ": expected a one-object unital ring");
}

}  // namespace

FiniteRingoid cyclic_ring(std::int64_t n) {
  if (n < 1) throw StructuralError("cyclic_ring: modulus must be >= 1");
  FiniteRingoid r(n == 1 ? "zero" : "Z/" + std::to_string(n), {"*"});
  r.set_hom(0, 0, FinAbGroup({n}));
  r.set_constant(0, 0, 0, 0, 0, {1 % n});
  r.set_identities({{1 % n}});
  return r;
}

FiniteRingoid zero_ring() {
  FiniteRingoid r("zero", {"*"});
  r.set_identities({Elem{}});
  return r;
}

FiniteRingoid self_scalar(const FiniteRingoid& ring) {
  require_one_object(ring, "self_scalar");
  FiniteRingoid base = ring;
  base.clear_scalar_ring();
  FiniteRingoid m = base;
  m.set_scalar_ring(std::make_shared<const FiniteRingoid>(base));
  const std::size_t g = base.hom(0, 0).generator_count();
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t x = 0; x < g; ++x) m.set_action(0, 0, r, x, base.constant(0, 0, 0, x, r));
  return m;
}

FiniteRingoid matrix_ring(const FiniteRingoid& ring, std::size_t k) {
  require_one_object(ring, "matrix_ring");
  const FinAbGroup& h = ring.hom(0, 0);
  const std::size_t g = h.generator_count();
  std::vector<std::int64_t> moduli;
  for (std::size_t e = 0; e < k * k; ++e)
    moduli.insert(moduli.end(), h.moduli().begin(), h.moduli().end());
  FiniteRingoid m("M" + std::to_string(k) + "(" + ring.name() + ")", {"*"});
  const FinAbGroup big(moduli);
  m.set_hom(0, 0, big);
  auto index = [&](std::size_t i, std::size_t j, std::size_t s) { return (i * k + j) * g + s; };
  // y o x is the matrix product Y X. For x = s E_ij the product is nonzero
  // only when y = t E_{j'i}, and then equals (t s) E_{j'j}.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t s = 0; s < g; ++s)
        for (std::size_t jj = 0; jj < k; ++jj)
          for (std::size_t t = 0; t < g; ++t) {
            Elem prod = ring.constant(0, 0, 0, s, t);
            Elem value = big.zero();
            for (std::size_t u = 0; u < g; ++u) value[index(jj, j, u)] = prod[u];
            m.set_constant(0, 0, 0, index(i, j, s), index(jj, i, t), value);
          }
  Elem one = big.zero();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t u = 0; u < g; ++u) one[index(i, i, u)] = ring.identity(0)[u];
  m.set_identities({one});
  return m;
}

FiniteRingoid product_ring(const FiniteRingoid& a, const FiniteRingoid& b) {
  require_one_object(a, "product_ring");
  require_one_object(b, "product_ring");
  const FinAbGroup& ha = a.hom(0, 0);
  const FinAbGroup& hb = b.hom(0, 0);
  const std::size_t na = ha.generator_count(), nb = hb.generator_count();
  std::vector<std::int64_t> moduli = ha.moduli();
  moduli.insert(moduli.end(), hb.moduli().begin(), hb.moduli().end());
  FiniteRingoid r(a.name() + "x" + b.name(), {"*"});
  const FinAbGroup big(moduli);
  r.set_hom(0, 0, big);
  for (std::size_t p = 0; p < na; ++p)
    for (std::size_t q = 0; q < na; ++q) {
      Elem v = a.constant(0, 0, 0, p, q);
      v.resize(na + nb, 0);
      r.set_constant(0, 0, 0, p, q, v);
    }
  for (std::size_t p = 0; p < nb; ++p)
    for (std::size_t q = 0; q < nb; ++q) {
      Elem v(na, 0);
      Elem w = b.constant(0, 0, 0, p, q);
      v.insert(v.end(), w.begin(), w.end());
      r.set_constant(0, 0, 0, na + p, na + q, v);
    }
  Elem one = a.identity(0);
  one.insert(one.end(), b.identity(0).begin(), b.identity(0).end());
  r.set_identities({one});
  return r;
}

}  // namespace kring
