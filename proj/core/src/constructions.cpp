#include "kring/constructions.hpp"

#include <functional>
#include <numeric>

namespace kring {

namespace {

Elem padded(Elem x, std::size_t extra) {
  x.resize(x.size() + extra, 0);
  return x;
}

Elem shifted(const Elem& x, std::size_t offset, std::size_t total) {
  Elem y(total, 0);
  std::copy(x.begin(), x.end(), y.begin() + static_cast<std::ptrdiff_t>(offset));
  return y;
}

const FiniteRingoid& require_scalars(const FiniteRingoid& m, const char* what) {
  if (!m.scalar_ring()) throw StructuralError(std::string(what) + ": moduloid has no scalar ring");
  return *m.scalar_ring();
}

}  // namespace

FiniteRingoid scalar_ringoid(const std::vector<std::string>& objects, RingoidPtr ring) {
  if (!ring || ring->object_count() != 1 || !ring->unital())
    throw StructuralError("scalar_ringoid: expected a one-object unital ring");
  FiniteRingoid base = *ring;
  base.clear_scalar_ring();
  auto scalars = std::make_shared<const FiniteRingoid>(base);
  const FinAbGroup& h = base.hom(0, 0);
  const std::size_t k = h.generator_count();
  FiniteRingoid r("R_M", objects);
  for (std::size_t a = 0; a < objects.size(); ++a) r.set_hom(a, a, h);
  for (std::size_t a = 0; a < objects.size(); ++a)
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) r.set_constant(a, a, a, p, q, base.constant(0, 0, 0, p, q));
  r.set_identities(std::vector<Elem>(objects.size(), base.identity(0)));
  r.set_scalar_ring(scalars);
  for (std::size_t a = 0; a < objects.size(); ++a)
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t g = 0; g < k; ++g) r.set_action(a, a, s, g, base.constant(0, 0, 0, g, s));
  return r;
}

FiniteRingoid unitize(const FiniteRingoid& m) {
  const FiniteRingoid& ring = require_scalars(m, "unitize");
  const FinAbGroup& rg = ring.hom(0, 0);
  const std::size_t kr = rg.generator_count();
  const std::size_t n = m.object_count();
  FiniteRingoid plus(m.name() + "+", m.objects());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) {
        plus.set_hom(a, b, m.hom(a, b));
        continue;
      }
      auto moduli = m.hom(a, a).moduli();
      moduli.insert(moduli.end(), rg.moduli().begin(), rg.moduli().end());
      plus.set_hom(a, a, FinAbGroup(moduli));
    }
  auto base_count = [&](std::size_t a, std::size_t b) { return m.hom(a, b).generator_count(); };
  auto extra = [&](std::size_t a, std::size_t c) { return a == c ? kr : std::size_t{0}; };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t gab = base_count(a, b), gbc = base_count(b, c);
        const std::size_t pcount = plus.hom(a, b).generator_count();
        const std::size_t qcount = plus.hom(b, c).generator_count();
        for (std::size_t p = 0; p < pcount; ++p)
          for (std::size_t q = 0; q < qcount; ++q) {
            const bool pm = p < gab, qm = q < gbc;
            Elem v;
            if (pm && qm) {
              v = padded(m.constant(a, b, c, p, q), extra(a, c));
            } else if (!pm && qm) {
              // x = lambda (a == b): y o lambda = lambda . y
              v = padded(m.action_constant(b, c, p - gab, q), extra(a, c));
            } else if (pm && !qm) {
              // y = mu (b == c): mu o x = mu . x
              v = padded(m.action_constant(a, b, q - gbc, p), extra(a, c));
            } else {
              v = shifted(ring.constant(0, 0, 0, p - gab, q - gbc), base_count(a, c),
                          base_count(a, c) + kr);
            }
            plus.set_constant(a, b, c, p, q, std::move(v));
          }
      }
  std::vector<Elem> ids;
  for (std::size_t a = 0; a < n; ++a)
    ids.push_back(shifted(ring.identity(0), base_count(a, a), base_count(a, a) + kr));
  plus.set_identities(std::move(ids));

  plus.set_scalar_ring(m.scalar_ring());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t g = base_count(a, b);
      for (std::size_t r = 0; r < kr; ++r) {
        for (std::size_t x = 0; x < g; ++x)
          plus.set_action(a, b, r, x, padded(m.action_constant(a, b, r, x), extra(a, b)));
        if (a == b)
          for (std::size_t s = 0; s < kr; ++s)
            plus.set_action(a, a, r, g + s, shifted(ring.constant(0, 0, 0, s, r), g, g + kr));
      }
    }
  return plus;
}

RingoidHom unitization_projection(RingoidPtr plus, RingoidPtr target) {
  const std::size_t n = plus->object_count();
  std::vector<std::size_t> objs(n);
  std::iota(objs.begin(), objs.end(), 0);
  RingoidHom pi(plus, target, objs);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t kr = target->hom(a, a).generator_count();
    const std::size_t g = plus->hom(a, a).generator_count() - kr;
    for (std::size_t s = 0; s < kr; ++s) pi.set_image(a, a, g + s, target->hom(a, a).generator(s));
  }
  return pi;
}

FiniteRingoid direct_sum(const FiniteRingoid& m, const FiniteRingoid& n) {
  if (m.objects() != n.objects())
    throw StructuralError("direct_sum: ringoids have different objects");
  const std::size_t k = m.object_count();
  FiniteRingoid s(m.name() + "+" + n.name(), m.objects());
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto moduli = m.hom(a, b).moduli();
      const auto& more = n.hom(a, b).moduli();
      moduli.insert(moduli.end(), more.begin(), more.end());
      s.set_hom(a, b, FinAbGroup(moduli));
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        const std::size_t mab = m.hom(a, b).generator_count(), mbc = m.hom(b, c).generator_count();
        const std::size_t mac = m.hom(a, c).generator_count(), nac = n.hom(a, c).generator_count();
        for (std::size_t p = 0; p < mab; ++p)
          for (std::size_t q = 0; q < mbc; ++q)
            s.set_constant(a, b, c, p, q, padded(m.constant(a, b, c, p, q), nac));
        for (std::size_t p = 0; p < n.hom(a, b).generator_count(); ++p)
          for (std::size_t q = 0; q < n.hom(b, c).generator_count(); ++q)
            s.set_constant(a, b, c, mab + p, mbc + q,
                           shifted(n.constant(a, b, c, p, q), mac, mac + nac));
      }
  if (m.unital() && n.unital()) {
    std::vector<Elem> ids;
    for (std::size_t a = 0; a < k; ++a) {
      Elem e = m.identity(a);
      e.insert(e.end(), n.identity(a).begin(), n.identity(a).end());
      ids.push_back(e);
    }
    s.set_identities(std::move(ids));
  }
  if (m.scalar_ring() && n.scalar_ring() &&
      m.scalar_ring()->same_structure(*n.scalar_ring(), false)) {
    s.set_scalar_ring(m.scalar_ring());
    const std::size_t kr = m.scalar_ring()->hom(0, 0).generator_count();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        const std::size_t mg = m.hom(a, b).generator_count(), ng = n.hom(a, b).generator_count();
        for (std::size_t r = 0; r < kr; ++r) {
          for (std::size_t g = 0; g < mg; ++g)
            s.set_action(a, b, r, g, padded(m.action_constant(a, b, r, g), ng));
          for (std::size_t g = 0; g < ng; ++g)
            s.set_action(a, b, r, mg + g, shifted(n.action_constant(a, b, r, g), mg, mg + ng));
        }
      }
  }
  return s;
}

UnitizationSplitting unitization_splitting(RingoidPtr m) {
  if (!m->unital()) throw StructuralError("unitization_splitting: moduloid is not unital");
  require_scalars(*m, "unitization_splitting");
  auto rm = std::make_shared<const FiniteRingoid>(scalar_ringoid(m->objects(), m->scalar_ring()));
  auto sum = std::make_shared<const FiniteRingoid>(direct_sum(*m, *rm));
  auto plus = std::make_shared<const FiniteRingoid>(unitize(*m));
  const std::size_t n = m->object_count();
  std::vector<std::size_t> objs(n);
  std::iota(objs.begin(), objs.end(), 0);
  const FinAbGroup& rg = m->scalar_ring()->hom(0, 0);
  const std::size_t kr = rg.generator_count();

  RingoidHom alpha(sum, plus, objs), inverse(plus, sum, objs);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t g = m->hom(a, b).generator_count();
      const std::size_t total = plus->hom(a, b).generator_count();
      for (std::size_t x = 0; x < g; ++x) {
        alpha.set_image(a, b, x, shifted(m->hom(a, b).generator(x), 0, total));
        inverse.set_image(a, b, x, shifted(m->hom(a, b).generator(x), 0, total));
      }
      if (a != b) continue;
      for (std::size_t s = 0; s < kr; ++s) {
        Elem le = m->act(a, a, rg.generator(s), m->identity(a));
        Elem lam = rg.generator(s);
        Elem fwd = padded(m->hom(a, a).negate(le), kr);
        Elem back = padded(le, kr);
        for (std::size_t t = 0; t < kr; ++t) fwd[g + t] = back[g + t] = lam[t];
        alpha.set_image(a, a, g + s, fwd);
        inverse.set_image(a, a, g + s, back);
      }
    }
  RingoidHom pi = unitization_projection(plus, rm);
  RingoidHom pi_sum = unitization_projection(sum, rm);
  return {sum, plus, rm, std::move(alpha), std::move(inverse), std::move(pi), std::move(pi_sum)};
}

// ---------------------------------------------------------------------------

Ideal zero_ideal(RingoidPtr parent) {
  const std::size_t n = parent->object_count();
  return Ideal{parent, std::vector<std::vector<Elem>>(n * n)};
}

Ideal improper_ideal(RingoidPtr parent) {
  const std::size_t n = parent->object_count();
  Ideal j{parent, std::vector<std::vector<Elem>>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t g = 0; g < parent->hom(a, b).generator_count(); ++g)
        j.generators[a * n + b].push_back(parent->hom(a, b).generator(g));
  return j;
}

namespace {

std::vector<SubgroupEmbedding> embeddings(const Ideal& j) {
  const FiniteRingoid& m = *j.parent;
  const std::size_t n = m.object_count();
  if (j.generators.size() != n * n) throw StructuralError("ideal: wrong number of hom-pairs");
  std::vector<SubgroupEmbedding> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (const Elem& x : j.gens(a, b))
        if (!m.hom(a, b).is_reduced(x))
          throw StructuralError("ideal generator does not lie in Hom(" + m.object_name(a) + "," +
                                m.object_name(b) + ")");
      out.emplace_back(m.hom(a, b), j.gens(a, b));
    }
  return out;
}

}  // namespace

ValidationReport validate_ideal(const Ideal& j) {
  ValidationReport report;
  const FiniteRingoid& m = *j.parent;
  const std::size_t n = m.object_count();
  auto sub = embeddings(j);
  auto in = [&](std::size_t a, std::size_t b, const Elem& x) { return sub[a * n + b].contains(x); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        // J(a,b) followed by Hom(b,c), and Hom(a,b) followed by J(b,c).
        for (std::size_t i = 0; i < j.gens(a, b).size(); ++i)
          for (std::size_t q = 0; q < m.hom(b, c).generator_count(); ++q)
            if (!in(a, c, m.compose(a, b, c, m.hom(b, c).generator(q), j.gens(a, b)[i])))
              report.violations.push_back({Axiom::kIdeal, {a, b, c}, {i, q},
                                           "m j leaves the ideal at (" + m.object_name(a) + "," +
                                               m.object_name(c) + ")"});
        for (std::size_t p = 0; p < m.hom(a, b).generator_count(); ++p)
          for (std::size_t i = 0; i < j.gens(b, c).size(); ++i)
            if (!in(a, c, m.compose(a, b, c, j.gens(b, c)[i], m.hom(a, b).generator(p))))
              report.violations.push_back({Axiom::kIdeal, {a, b, c}, {p, i},
                                           "j m leaves the ideal at (" + m.object_name(a) + "," +
                                               m.object_name(c) + ")"});
      }
  if (m.scalar_ring()) {
    const FinAbGroup& rg = m.scalar_ring()->hom(0, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t i = 0; i < j.gens(a, b).size(); ++i)
          for (std::size_t r = 0; r < rg.generator_count(); ++r)
            if (!in(a, b, m.act(a, b, rg.generator(r), j.gens(a, b)[i])))
              report.violations.push_back({Axiom::kIdeal, {a, b}, {r, i},
                                           "scalar multiple leaves the ideal at (" +
                                               m.object_name(a) + "," + m.object_name(b) + ")"});
  }
  return report;
}

SubModuloid ideal_moduloid(const Ideal& j) {
  const FiniteRingoid& m = *j.parent;
  const std::size_t n = m.object_count();
  auto sub = embeddings(j);
  FiniteRingoid r("J", m.objects());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) r.set_hom(a, b, sub[a * n + b].group());
  auto restrict_to = [&](std::size_t a, std::size_t b, const Elem& y) {
    auto x = sub[a * n + b].restrict(y);
    if (!x) throw AxiomError("ideal is not closed", validate_ideal(j));
    return *x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t p = 0; p < r.hom(a, b).generator_count(); ++p)
          for (std::size_t q = 0; q < r.hom(b, c).generator_count(); ++q) {
            Elem x = sub[a * n + b].include(r.hom(a, b).generator(p));
            Elem y = sub[b * n + c].include(r.hom(b, c).generator(q));
            r.set_constant(a, b, c, p, q, restrict_to(a, c, m.compose(a, b, c, y, x)));
          }
  if (m.scalar_ring()) {
    r.set_scalar_ring(m.scalar_ring());
    const FinAbGroup& rg = m.scalar_ring()->hom(0, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t s = 0; s < rg.generator_count(); ++s)
          for (std::size_t g = 0; g < r.hom(a, b).generator_count(); ++g) {
            Elem x = sub[a * n + b].include(r.hom(a, b).generator(g));
            r.set_action(a, b, s, g, restrict_to(a, b, m.act(a, b, rg.generator(s), x)));
          }
  }
  auto ptr = std::make_shared<const FiniteRingoid>(std::move(r));
  std::vector<std::size_t> objs(n);
  std::iota(objs.begin(), objs.end(), 0);
  RingoidHom inc(ptr, j.parent, objs);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t g = 0; g < ptr->hom(a, b).generator_count(); ++g)
        inc.set_image(a, b, g, sub[a * n + b].include(ptr->hom(a, b).generator(g)));
  return {ptr, std::move(inc)};
}

QuotientResult quotient(const Ideal& j) {
  ValidationReport rep = validate_ideal(j);
  if (!rep.clean()) throw AxiomError("not an ideal: " + rep.violations.front().detail, rep);
  const FiniteRingoid& m = *j.parent;
  const std::size_t n = m.object_count();
  std::vector<FiniteQuotient> qs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const FinAbGroup& h = m.hom(a, b);
      IntMatrix rel = h.relation_matrix();
      for (const Elem& x : j.gens(a, b)) rel.append_row(to_integers(x));
      qs.emplace_back(h.generator_count(), rel);
    }
  auto proj = [&](std::size_t a, std::size_t b, const Elem& x) {
    return qs[a * n + b].project(std::span<const std::int64_t>(x));
  };
  auto lift = [&](std::size_t a, std::size_t b, std::size_t i) {
    return m.hom(a, b).reduce(std::span<const Integer>(qs[a * n + b].lift(i)));
  };
  FiniteRingoid r(m.name() + "/J", m.objects());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) r.set_hom(a, b, qs[a * n + b].group());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t p = 0; p < r.hom(a, b).generator_count(); ++p)
          for (std::size_t q = 0; q < r.hom(b, c).generator_count(); ++q)
            r.set_constant(a, b, c, p, q, proj(a, c, m.compose(a, b, c, lift(b, c, q), lift(a, b, p))));
  if (m.unital()) {
    std::vector<Elem> ids;
    for (std::size_t a = 0; a < n; ++a) ids.push_back(proj(a, a, m.identity(a)));
    r.set_identities(std::move(ids));
  }
  if (m.scalar_ring()) {
    r.set_scalar_ring(m.scalar_ring());
    const FinAbGroup& rg = m.scalar_ring()->hom(0, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t s = 0; s < rg.generator_count(); ++s)
          for (std::size_t g = 0; g < r.hom(a, b).generator_count(); ++g)
            r.set_action(a, b, s, g, proj(a, b, m.act(a, b, rg.generator(s), lift(a, b, g))));
  }
  auto ptr = std::make_shared<const FiniteRingoid>(std::move(r));
  std::vector<std::size_t> objs(n);
  std::iota(objs.begin(), objs.end(), 0);
  RingoidHom map(j.parent, ptr, objs);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t g = 0; g < m.hom(a, b).generator_count(); ++g)
        map.set_image(a, b, g, proj(a, b, m.hom(a, b).generator(g)));
  return {ptr, std::move(map)};
}

// ---------------------------------------------------------------------------

namespace {

using Vec = std::vector<Integer>;

/// Ringoid-shaped data whose hom-groups may have free factors (modulus 0).
struct Factor {
  std::vector<std::string> objects;
  std::function<std::vector<std::int64_t>(std::size_t, std::size_t)> moduli;
  std::function<Vec(std::size_t, std::size_t, std::size_t, std::size_t, std::size_t)> constant;
  std::function<Vec(std::size_t)> identity;  // empty when not unital
  std::function<Vec(std::size_t, std::size_t, std::size_t, std::size_t)> action;  // a b r g
};

Factor ringoid_factor(const FiniteRingoid& m) {
  Factor f;
  f.objects = m.objects();
  f.moduli = [&m](std::size_t a, std::size_t b) { return m.hom(a, b).moduli(); };
  f.constant = [&m](std::size_t a, std::size_t b, std::size_t c, std::size_t p, std::size_t q) {
    return to_integers(m.constant(a, b, c, p, q));
  };
  if (m.unital()) f.identity = [&m](std::size_t a) { return to_integers(m.identity(a)); };
  if (m.scalar_ring())
    f.action = [&m](std::size_t a, std::size_t b, std::size_t r, std::size_t g) {
      return to_integers(m.action_constant(a, b, r, g));
    };
  return f;
}

std::size_t position(const std::vector<std::size_t>& list, std::size_t x) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), x) - list.begin());
}

/// Z pi: free abelian hom-groups on the morphism sets.
Factor integral_group_ring(const FinGroupoid& pi) {
  Factor f;
  f.objects = pi.objects();
  f.moduli = [&pi](std::size_t a, std::size_t b) {
    return std::vector<std::int64_t>(pi.hom(a, b).size(), 0);
  };
  f.constant = [&pi](std::size_t a, std::size_t b, std::size_t c, std::size_t p, std::size_t q) {
    Vec v(pi.hom(a, c).size(), 0);
    v[position(pi.hom(a, c), *pi.then(pi.hom(a, b)[p], pi.hom(b, c)[q]))] = 1;
    return v;
  };
  f.identity = [&pi](std::size_t a) {
    Vec v(pi.hom(a, a).size(), 0);
    v[position(pi.hom(a, a), *pi.identity(a))] = 1;
    return v;
  };
  return f;
}

FiniteRingoid tensor_core(const Factor& A, const Factor& B, const RingoidPtr& scalars,
                          const std::string& name) {
  const std::size_t na = A.objects.size(), nb = B.objects.size(), n = na * nb;
  std::vector<std::string> objs;
  for (const auto& a : A.objects)
    for (const auto& b : B.objects) objs.push_back(a + "*" + b);
  FiniteRingoid t(name, objs);

  struct PairHom {
    std::size_t ka = 0, kb = 0;
    FiniteQuotient q;
  };
  std::vector<PairHom> homs(n * n);
  const std::size_t kr = scalars ? scalars->hom(0, 0).generator_count() : 0;
  for (std::size_t P = 0; P < n; ++P)
    for (std::size_t Q = 0; Q < n; ++Q) {
      const std::size_t a = P / nb, b = P % nb, a2 = Q / nb, b2 = Q % nb;
      auto da = A.moduli(a, a2), db = B.moduli(b, b2);
      const std::size_t ka = da.size(), kb = db.size();
      IntMatrix rel(0, ka * kb);
      for (std::size_t u = 0; u < ka; ++u)
        for (std::size_t v = 0; v < kb; ++v) {
          const std::int64_t g = std::gcd(da[u], db[v]);
          if (g == 0) throw StructuralError("tensor: hom-group would be infinite");
          Vec row(ka * kb, 0);
          row[u * kb + v] = g;
          rel.append_row(row);
        }
      for (std::size_t r = 0; r < kr; ++r)
        for (std::size_t u = 0; u < ka; ++u)
          for (std::size_t v = 0; v < kb; ++v) {
            // (r x_u) (x) y_v - x_u (x) (r y_v)
            Vec row(ka * kb, 0);
            Vec ra = A.action(a, a2, r, u), rb = B.action(b, b2, r, v);
            for (std::size_t w = 0; w < ka; ++w) row[w * kb + v] += ra[w];
            for (std::size_t w = 0; w < kb; ++w) row[u * kb + w] -= rb[w];
            rel.append_row(row);
          }
      homs[P * n + Q] = PairHom{ka, kb, FiniteQuotient(ka * kb, rel)};
      t.set_hom(P, Q, homs[P * n + Q].q.group());
    }

  auto project = [&](std::size_t P, std::size_t Q, const Vec& x) {
    return homs[P * n + Q].q.project(std::span<const Integer>(x));
  };

  for (std::size_t P = 0; P < n; ++P)
    for (std::size_t Q = 0; Q < n; ++Q)
      for (std::size_t S = 0; S < n; ++S) {
        const std::size_t a = P / nb, b = P % nb, a2 = Q / nb, b2 = Q % nb, a3 = S / nb,
                          b3 = S % nb;
        const PairHom& pq = homs[P * n + Q];
        const PairHom& qs = homs[Q * n + S];
        const PairHom& ps = homs[P * n + S];
        for (std::size_t i = 0; i < pq.q.group().generator_count(); ++i)
          for (std::size_t j = 0; j < qs.q.group().generator_count(); ++j) {
            const Vec& li = pq.q.lift(i);
            const Vec& lj = qs.q.lift(j);
            Vec out(ps.ka * ps.kb, 0);
            for (std::size_t uv = 0; uv < li.size(); ++uv) {
              if (li[uv] == 0) continue;
              for (std::size_t uv2 = 0; uv2 < lj.size(); ++uv2) {
                if (lj[uv2] == 0) continue;
                Vec ca = A.constant(a, a2, a3, uv / pq.kb, uv2 / qs.kb);
                Vec cb = B.constant(b, b2, b3, uv % pq.kb, uv2 % qs.kb);
                const Integer f = li[uv] * lj[uv2];
                for (std::size_t s = 0; s < ca.size(); ++s) {
                  if (ca[s] == 0) continue;
                  for (std::size_t u = 0; u < cb.size(); ++u)
                    if (cb[u] != 0) out[s * ps.kb + u] += f * ca[s] * cb[u];
                }
              }
            }
            t.set_constant(P, Q, S, i, j, project(P, S, out));
          }
      }

  if (A.identity && B.identity) {
    std::vector<Elem> ids;
    for (std::size_t P = 0; P < n; ++P) {
      Vec ea = A.identity(P / nb), eb = B.identity(P % nb);
      Vec out(ea.size() * eb.size(), 0);
      for (std::size_t s = 0; s < ea.size(); ++s)
        for (std::size_t u = 0; u < eb.size(); ++u) out[s * eb.size() + u] = ea[s] * eb[u];
      ids.push_back(project(P, P, out));
    }
    t.set_identities(std::move(ids));
  }

  if (scalars) {
    t.set_scalar_ring(scalars);
    for (std::size_t P = 0; P < n; ++P)
      for (std::size_t Q = 0; Q < n; ++Q) {
        const std::size_t a = P / nb, a2 = Q / nb;
        const PairHom& pq = homs[P * n + Q];
        for (std::size_t r = 0; r < kr; ++r)
          for (std::size_t i = 0; i < pq.q.group().generator_count(); ++i) {
            const Vec& li = pq.q.lift(i);
            Vec out(li.size(), 0);
            for (std::size_t uv = 0; uv < li.size(); ++uv) {
              if (li[uv] == 0) continue;
              Vec ra = A.action(a, a2, r, uv / pq.kb);
              for (std::size_t w = 0; w < ra.size(); ++w) out[w * pq.kb + uv % pq.kb] += li[uv] * ra[w];
            }
            t.set_action(P, Q, r, i, project(P, Q, out));
          }
      }
  }
  return t;
}

}  // namespace

FiniteRingoid tensor(const FiniteRingoid& m, const FiniteRingoid& n) {
  RingoidPtr scalars;
  if (m.scalar_ring() || n.scalar_ring()) {
    if (!m.scalar_ring() || !n.scalar_ring() ||
        !m.scalar_ring()->same_structure(*n.scalar_ring(), false))
      throw StructuralError("tensor: the moduloids have different scalar rings");
    scalars = m.scalar_ring();
  }
  return tensor_core(ringoid_factor(m), ringoid_factor(n), scalars, m.name() + "(x)" + n.name());
}

FiniteRingoid group_ringoid(const FinGroupoid& pi, RingoidPtr ring) {
  if (!is_commutative_ring(*ring))
    throw StructuralError("group_ringoid: coefficients must form a commutative unital ring");
  FiniteRingoid base = *ring;
  base.clear_scalar_ring();
  const FinAbGroup& rg = base.hom(0, 0);
  const std::size_t k = rg.generator_count();
  const std::size_t n = pi.object_count();
  FiniteRingoid r(base.name() + "[" + pi.name() + "]", pi.objects());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::int64_t> moduli;
      for (std::size_t i = 0; i < pi.hom(a, b).size(); ++i)
        moduli.insert(moduli.end(), rg.moduli().begin(), rg.moduli().end());
      r.set_hom(a, b, FinAbGroup(moduli));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& gab = pi.hom(a, b);
        const auto& gbc = pi.hom(b, c);
        const std::size_t total = pi.hom(a, c).size() * k;
        for (std::size_t i = 0; i < gab.size(); ++i)
          for (std::size_t j = 0; j < gbc.size(); ++j) {
            const std::size_t at = position(pi.hom(a, c), *pi.then(gab[i], gbc[j]));
            for (std::size_t s = 0; s < k; ++s)
              for (std::size_t t = 0; t < k; ++t)
                r.set_constant(a, b, c, i * k + s, j * k + t,
                               shifted(base.constant(0, 0, 0, s, t), at * k, total));
          }
      }
  std::vector<Elem> ids;
  for (std::size_t a = 0; a < n; ++a)
    ids.push_back(shifted(base.identity(0), position(pi.hom(a, a), *pi.identity(a)) * k,
                          pi.hom(a, a).size() * k));
  r.set_identities(std::move(ids));
  r.set_scalar_ring(std::make_shared<const FiniteRingoid>(base));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t total = pi.hom(a, b).size() * k;
      for (std::size_t i = 0; i < pi.hom(a, b).size(); ++i)
        for (std::size_t s = 0; s < k; ++s)
          for (std::size_t u = 0; u < k; ++u)
            r.set_action(a, b, s, i * k + u, shifted(base.constant(0, 0, 0, u, s), i * k, total));
    }
  return r;
}

GroupRingTensorIso group_ringoid_tensor_iso(const FinGroupoid& pi, RingoidPtr ring) {
  auto rpi = std::make_shared<const FiniteRingoid>(group_ringoid(pi, ring));
  FiniteRingoid base = *ring;
  base.clear_scalar_ring();
  auto t = std::make_shared<const FiniteRingoid>(
      tensor_core(integral_group_ring(pi), ringoid_factor(base), nullptr, "Z" + pi.name() + "(x)" + base.name()));
  const std::size_t n = pi.object_count();
  const std::size_t k = base.hom(0, 0).generator_count();
  std::vector<std::size_t> objs(n);
  std::iota(objs.begin(), objs.end(), 0);
  RingoidHom theta(rpi, t, objs);
  // theta(x g) = g (x) x. The tensor generators of Hom(a*,b*) are quotient
  // generators of Z^{|Hom(a,b)| k}; the pure tensor g_i (x) r_s sits at i*k+s.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t m = pi.hom(a, b).size();
      // Rebuild the same relation lattice to project pure tensors.
      IntMatrix rel(0, m * k);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t s = 0; s < k; ++s) {
          Vec row(m * k, 0);
          row[i * k + s] = base.hom(0, 0).modulus(s);
          rel.append_row(row);
        }
      FiniteQuotient q(m * k, rel);
      if (!(q.group() == t->hom(a, b)))
        throw StructuralError("group_ringoid_tensor_iso: tensor hom-group mismatch");
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t s = 0; s < k; ++s) {
          Vec e(m * k, 0);
          e[i * k + s] = 1;
          theta.set_image(a, b, i * k + s, q.project(std::span<const Integer>(e)));
        }
    }
  return {rpi, t, std::move(theta)};
}

PiRing constant_pi_ring(const FinGroupoid& pi, RingoidPtr ring) {
  PiRing r;
  r.rings.assign(pi.object_count(), ring);
  for (std::size_t f = 0; f < pi.morphism_count(); ++f) r.actions.push_back(identity_hom(ring));
  return r;
}

ValidationReport validate_pi_ring(const FinGroupoid& pi, const PiRing& r) {
  ValidationReport rep;
  if (r.rings.size() != pi.object_count() || r.actions.size() != pi.morphism_count())
    throw StructuralError("pi-ring: wrong number of rings or actions");
  for (std::size_t a = 0; a < pi.object_count(); ++a)
    if (!is_commutative_ring(*r.rings[a]))
      rep.violations.push_back({Axiom::kScalarRing, {a}, {}, "ring at " + pi.object_name(a) +
                                                                 " is not commutative and unital"});
  if (!rep.clean()) return rep;
  auto same_map = [](const RingoidHom& f, const RingoidHom& g) {
    const FinAbGroup& h = f.source().hom(0, 0);
    for (std::size_t s = 0; s < h.generator_count(); ++s)
      if (f.image(0, 0, s) != g.image(0, 0, s)) return false;
    return true;
  };
  for (std::size_t f = 0; f < pi.morphism_count(); ++f) {
    const auto& mor = pi.morphism(f);
    const RingoidHom& phi = r.actions[f];
    if (&phi.source() != r.rings[mor.source].get() && !phi.source().same_structure(*r.rings[mor.source], false))
      rep.violations.push_back({Axiom::kMultiplicativity, {mor.source, mor.target}, {f},
                                "action of " + mor.name + " has the wrong source ring"});
    else if (&phi.target() != r.rings[mor.target].get() && !phi.target().same_structure(*r.rings[mor.target], false))
      rep.violations.push_back({Axiom::kMultiplicativity, {mor.source, mor.target}, {f},
                                "action of " + mor.name + " has the wrong target ring"});
    else if (!validate_hom(phi).clean())
      rep.violations.push_back({Axiom::kMultiplicativity, {mor.source, mor.target}, {f},
                                "action of " + mor.name + " is not a ring homomorphism"});
  }
  if (!rep.clean()) return rep;
  for (std::size_t a = 0; a < pi.object_count(); ++a)
    if (!same_map(r.actions[*pi.identity(a)], identity_hom(r.rings[a])))
      rep.violations.push_back({Axiom::kIdentity, {a}, {*pi.identity(a)},
                                "identity of " + pi.object_name(a) + " acts nontrivially"});
  for (std::size_t f = 0; f < pi.morphism_count(); ++f)
    for (std::size_t g = 0; g < pi.morphism_count(); ++g) {
      auto h = pi.then(f, g);
      if (!h) continue;
      if (!same_map(r.actions[*h], compose(r.actions[g], r.actions[f])))
        rep.violations.push_back({Axiom::kMultiplicativity, {}, {f, g, *h},
                                  "action is not functorial on " + pi.morphism(f).name +
                                      " then " + pi.morphism(g).name});
    }
  return rep;
}

FiniteRingoid twisted_group_ringoid(const FinGroupoid& pi, const PiRing& pr) {
  ValidationReport rep = validate_pi_ring(pi, pr);
  if (!rep.clean()) throw AxiomError("invalid pi-ring: " + rep.violations.front().detail, rep);
  const std::size_t n = pi.object_count();
  FiniteRingoid r("R[" + pi.name() + "]", pi.objects());
  auto k = [&](std::size_t a) { return pr.rings[a]->hom(0, 0).generator_count(); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::int64_t> moduli;
      const auto& mb = pr.rings[b]->hom(0, 0).moduli();
      for (std::size_t i = 0; i < pi.hom(a, b).size(); ++i)
        moduli.insert(moduli.end(), mb.begin(), mb.end());
      r.set_hom(a, b, FinAbGroup(moduli));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& gab = pi.hom(a, b);
        const auto& gbc = pi.hom(b, c);
        const FiniteRingoid& rc = *pr.rings[c];
        const std::size_t kb = k(b), kc = k(c);
        const std::size_t total = pi.hom(a, c).size() * kc;
        for (std::size_t i = 0; i < gab.size(); ++i)
          for (std::size_t j = 0; j < gbc.size(); ++j) {
            const std::size_t at = position(pi.hom(a, c), *pi.then(gab[i], gbc[j]));
            const RingoidHom& phi = pr.actions[gbc[j]];
            for (std::size_t s = 0; s < kb; ++s)
              for (std::size_t t = 0; t < kc; ++t) {
                Elem coeff = rc.compose(0, 0, 0, rc.hom(0, 0).generator(t), phi.image(0, 0, s));
                r.set_constant(a, b, c, i * kb + s, j * kc + t, shifted(coeff, at * kc, total));
              }
          }
      }
  std::vector<Elem> ids;
  for (std::size_t a = 0; a < n; ++a)
    ids.push_back(shifted(pr.rings[a]->identity(0), position(pi.hom(a, a), *pi.identity(a)) * k(a),
                          pi.hom(a, a).size() * k(a)));
  r.set_identities(std::move(ids));
  return r;
}

}  // namespace kring
