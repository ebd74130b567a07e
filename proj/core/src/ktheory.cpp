#include "kring/ktheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kring {

namespace {

IntMatrix identity_rows(std::size_t n) { return IntMatrix::identity(n); }

// One relation vec(s) - vec(rep) per sorted member of length <= limit.
IntMatrix relations_within(const IsoClassTable& table, std::size_t objects, std::size_t limit) {
  IntMatrix rows(0, objects);
  for (const auto& [s, c] : table.class_of) {
    if (s.size() > limit || !std::is_sorted(s.begin(), s.end())) continue;
    const ObjSum& rep = table.representatives[c];
    if (rep == s) continue;
    auto v = object_vector(s, objects);
    auto w = object_vector(rep, objects);
    for (std::size_t i = 0; i < objects; ++i) v[i] -= w[i];
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; }))
      rows.append_row(v);
  }
  return rows;
}

RingoidPtr one_object(RingoidPtr r, const char* what) {
  if (!r || r->object_count() != 1)
    throw StructuralError(std::string(what) + ": expected a one-object ringoid");
  if (!r->unital()) throw StructuralError(std::string(what) + ": ring has no identity");
  return r;
}

std::vector<Integer> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Integer> v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

std::vector<Integer> object_vector(const ObjSum& s, std::size_t objects) {
  std::vector<Integer> v(objects, 0);
  for (auto a : s) v.at(a) += 1;
  return v;
}

KZeroResult k0_bounded(RingoidPtr r, std::size_t bound, const Limits& limits) {
  if (!r) throw StructuralError("k0: null ringoid");
  if (!r->unital()) throw StructuralError("k0: ringoid has no identities");
  AdditiveView view(r);
  KZeroResult out;
  out.ringoid = r;
  out.bound = bound;
  const std::size_t n = r->object_count();
  for (std::size_t a = 0; a < n; ++a) out.generators.push_back({a});
  out.table = iso_class_table(view, bound, limits);
  out.relations = relations_within(out.table, n, bound);
  out.group = AbPresentation(n, out.relations);
  if (bound >= 1) {
    AbPresentation previous(n, relations_within(out.table, n, bound - 1));
    out.stabilized = true;
    for (std::size_t i = 0; i < out.relations.rows() && out.stabilized; ++i)
      out.stabilized = previous.is_zero(out.relations.row(i));
  }
  return out;
}

InducedMap k0_induced(const RingoidHom& f, const KZeroResult& source, const KZeroResult& target) {
  const std::size_t n = source.generators.size();
  const std::size_t m = target.generators.size();
  if (f.source().object_count() != n || f.target().object_count() != m)
    throw StructuralError("k0_induced: object counts do not match the K0 results");
  InducedMap out;
  out.map.source = source.group;
  out.map.target = target.group;
  out.map.matrix = IntMatrix(n, m);
  for (std::size_t a = 0; a < n; ++a) out.map.matrix(a, f.map_object(a)) = 1;
  out.consistent = is_well_defined(out.map);
  if (!out.consistent)
    out.diagnostic = "inconsistent at bound " + std::to_string(target.bound) +
                     ": a source relation does not hold in the target";
  return out;
}

RelativeKZero k0_relative(const FiniteRingoid& m, std::size_t bound, const Limits& limits) {
  if (!m.scalar_ring()) throw StructuralError("k0_relative: moduloid has no scalar ring");
  auto plus = std::make_shared<const FiniteRingoid>(unitize(m));
  auto scalars = std::make_shared<const FiniteRingoid>(scalar_ringoid(m.objects(), m.scalar_ring()));
  RelativeKZero out;
  out.plus = k0_bounded(plus, bound, limits);
  out.scalars = k0_bounded(scalars, bound, limits);
  out.projection = AbHom{out.plus.group, out.scalars.group, identity_rows(m.object_count())};
  out.kernel = kernel(out.projection);
  return out;
}

CofinalityReport cofinality_check(RingoidPtr r, std::size_t bound, const Limits& limits) {
  CofinalityReport out;
  out.full = k0_bounded(r, bound, limits);
  const std::size_t n = r->object_count();
  const IsoClassTable& table = out.full.table;
  auto in_sub = [](const ObjSum& s) { return s.empty() || s.size() >= 2; };

  // Shortlex-least member of each class that lies in the subcategory.
  std::map<std::size_t, std::size_t> sub_index;  // table class -> generator
  for (const ObjSum& s : sums_up_to(n, bound)) {
    if (!in_sub(s)) continue;
    std::size_t c = table.class_of.at(s);
    if (sub_index.count(c)) continue;
    sub_index[c] = out.sub_generators.size();
    out.sub_generators.push_back(s);
  }
  const std::size_t classes = out.sub_generators.size();

  out.cofinal = true;
  if (n > 0) {
    const ObjSum pad{0, 0};
    for (const ObjSum& b : sums_up_to(n, bound >= 2 ? bound - 2 : 0)) {
      if (b.size() + 2 > bound) break;
      auto it = table.class_of.find(concat(b, pad));
      out.cofinal = out.cofinal && it != table.class_of.end() && sub_index.count(it->second);
    }
  }

  // Binary sums of representatives: within the bound they are actual
  // objects; beyond it they are formal, identified only up to permutation.
  std::vector<std::vector<Integer>> rows;
  std::map<ObjSum, std::size_t> formal;
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  std::vector<std::size_t> pending_formal;
  for (std::size_t i = 0; i < classes; ++i)
    for (std::size_t j = i; j < classes; ++j) {
      ObjSum s = concat(out.sub_generators[i], out.sub_generators[j]);
      if (s.size() <= bound) {
        std::vector<Integer> row(classes, 0);
        row[i] += 1;
        row[j] += 1;
        row[sub_index.at(table.class_of.at(s))] -= 1;
        rows.push_back(std::move(row));
        continue;
      }
      std::sort(s.begin(), s.end());
      auto [it, fresh] = formal.emplace(s, formal.size());
      if (fresh) out.sub_generators.push_back(s);
      pending.emplace_back(i, j);
      pending_formal.push_back(it->second);
    }
  const std::size_t total = classes + formal.size();
  for (auto& row : rows) row.resize(total, 0);
  for (std::size_t k = 0; k < pending.size(); ++k) {
    std::vector<Integer> row(total, 0);
    row[pending[k].first] += 1;
    row[pending[k].second] += 1;
    row[classes + pending_formal[k]] -= 1;
    rows.push_back(std::move(row));
  }
  out.sub = AbPresentation(total, IntMatrix::from_rows(total, rows));

  std::vector<std::vector<Integer>> images;
  for (const ObjSum& s : out.sub_generators) images.push_back(object_vector(s, n));
  out.map = AbHom{out.sub, out.full.group, IntMatrix::from_rows(n, images)};
  out.well_defined = is_well_defined(out.map);
  out.isomorphism = out.well_defined && out.sub == out.full.group && is_isomorphism(out.map);
  return out;
}

FibrationReport fibration_check(const Ideal& j, std::size_t bound, const Limits& limits) {
  RingoidPtr m = j.parent;
  if (!m->unital()) throw StructuralError("fibration_check: the ambient ringoid must be unital");
  if (!m->scalar_ring()) throw StructuralError("fibration_check: the ambient ringoid needs scalars");
  const std::size_t n = m->object_count();
  SubModuloid sub = ideal_moduloid(j);
  QuotientResult q = quotient(j);

  FibrationReport out;
  out.ideal = k0_relative(*sub.ringoid, bound, limits);
  out.middle = k0_bounded(m, bound, limits);
  out.quotient = k0_bounded(q.ringoid, bound, limits);

  // J+ -> M: x + l goes to x + l e.
  const FiniteRingoid& plus = *out.ideal.plus.ringoid;
  std::vector<std::size_t> objs(n);
  std::iota(objs.begin(), objs.end(), 0);
  RingoidHom into(out.ideal.plus.ringoid, m, objs);
  const FinAbGroup& rg = m->scalar_ring()->hom(0, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t kj = sub.ringoid->hom(a, b).generator_count();
      for (std::size_t g = 0; g < plus.hom(a, b).generator_count(); ++g) {
        if (g < kj)
          into.set_image(a, b, g, sub.inclusion.image(a, b, g));
        else
          into.set_image(a, b, g, m->act(a, a, rg.generator(g - kj), m->identity(a)));
      }
    }
  out.homs_valid = validate_hom(into).clean() && validate_hom(q.map).clean();

  out.left = AbHom{out.ideal.group(), out.middle.group, out.ideal.kernel.generators};
  out.right = AbHom{out.middle.group, out.quotient.group, identity_rows(n)};
  out.composite_zero = is_zero_map(compose(out.right, out.left));
  IntMatrix image = image_generators(out.left);
  IntMatrix ker = kernel(out.right).generators;
  out.exact = out.composite_zero && subgroup_contains(out.middle.group, image, ker) &&
              subgroup_contains(out.middle.group, ker, image);
  return out;
}

std::optional<std::size_t> GLGroup::index_of(const MatMorphism& m) const {
  Elem x;
  for (const auto& e : m.entries) x.insert(x.end(), e.begin(), e.end());
  if (x.size() != hom.generator_count()) return std::nullopt;
  auto it = std::lower_bound(hom_index.begin(), hom_index.end(), hom.index_of(x));
  if (it == hom_index.end() || *it != hom.index_of(x)) return std::nullopt;
  return static_cast<std::size_t>(it - hom_index.begin());
}

GLGroup gl(const AdditiveView& view, const ObjSum& a, const Limits& limits) {
  GLGroup out;
  out.object = a;
  out.hom = view.hom(a, a);
  const std::uint64_t size = out.hom.order();
  if (size > limits.ceiling)
    throw std::length_error("GL(" + to_string(a, view.base()) + "): " + std::to_string(size) +
                            " endomorphisms exceed the ceiling");
  for (std::uint64_t i = 0; i < size; ++i) {
    MatMorphism u = view.from_elem(a, a, out.hom.element_at(i));
    if (!view.inverse(u)) continue;
    if (out.elements.size() == kMaxGLOrder)
      throw std::length_error("GL(" + to_string(a, view.base()) + ") is too large to tabulate");
    out.elements.push_back(std::move(u));
    out.hom_index.push_back(i);
  }
  const std::size_t k = out.elements.size();
  std::vector<std::size_t> table(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      table[x * k + y] = *out.index_of(view.compose(out.elements[x], out.elements[y]));
  std::vector<std::string> names;
  for (std::uint64_t i : out.hom_index) names.push_back("m" + std::to_string(i));
  out.group = FinGroup(k, std::move(table), *out.index_of(view.identity(a)), std::move(names));
  return out;
}

KOneResult k1_bounded(RingoidPtr r, std::size_t n_max, const Limits& limits) {
  one_object(r, "k1");
  AdditiveView view(r);
  KOneResult out;
  std::vector<GLGroup> groups;
  std::vector<Abelianization> abs;
  for (std::size_t n = 1; n <= n_max; ++n) {
    try {
      groups.push_back(gl(view, ObjSum(n, 0), limits));
    } catch (const std::length_error&) {
      break;
    }
    abs.push_back(abelianize(groups.back().group));
    out.abelianizations.push_back(abs.back().group);
    out.orders.push_back(groups.back().group.order());
    out.reached = n;
  }
  for (std::size_t i = 0; i + 1 < groups.size(); ++i) {
    const GLGroup& small = groups[i];
    const GLGroup& big = groups[i + 1];
    const std::size_t n = small.object.size();
    std::vector<std::size_t> j(small.group.order());
    for (std::size_t x = 0; x < j.size(); ++x) {
      MatMorphism e = view.identity(big.object);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) e.at(p, q) = small.elements[x].at(p, q);
      auto pos = big.index_of(e);
      if (!pos) throw std::logic_error("k1: stabilized matrix is not invertible");
      j[x] = *pos;
    }
    std::set<std::size_t> distinct(j.begin(), j.end());
    bool valid = distinct.size() == j.size();
    for (std::size_t x = 0; x < j.size() && valid; ++x)
      for (std::size_t y = 0; y < j.size() && valid; ++y)
        valid = j[small.group.multiply(x, y)] == big.group.multiply(j[x], j[y]);
    out.embeddings_valid = out.embeddings_valid && valid;

    IntMatrix rows(0, abs[i + 1].group.generator_count());
    for (std::size_t g : abs[i].generators) rows.append_row(abs[i + 1].coordinates[j[g]]);
    out.stabilization.push_back(AbHom{abs[i].group, abs[i + 1].group, rows});
  }
  out.stabilized = !out.stabilization.empty() && is_isomorphism(out.stabilization.back());
  return out;
}

bool determinant_surjective(RingoidPtr r, std::size_t n, const Limits& limits) {
  one_object(r, "determinant");
  if (!is_commutative_ring(*r)) throw StructuralError("determinant: ring is not commutative");
  AdditiveView view(r);
  const FinAbGroup& hom = r->hom(0, 0);
  auto mul = [&](const Elem& x, const Elem& y) { return r->compose(0, 0, 0, y, x); };
  std::set<Elem> units;
  for (const auto& u : gl(view, {0}, limits).elements) units.insert(u.entries[0]);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<std::size_t>, bool>> terms;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k) inversions += perm[i] > perm[k];
    terms.emplace_back(perm, inversions % 2 == 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<Elem> dets;
  for (const auto& u : gl(view, ObjSum(n, 0), limits).elements) {
    Elem det = hom.zero();
    for (const auto& [p, odd] : terms) {
      Elem t = r->identity(0);
      for (std::size_t i = 0; i < n; ++i) t = mul(t, u.at(i, p[i]));
      det = odd ? hom.subtract(det, t) : hom.add(det, t);
    }
    if (!units.count(det)) return false;
    dets.insert(det);
  }
  return dets == units;
}

std::vector<Integer> ExteriorProduct::evaluate(const std::vector<Integer>& x,
                                               const std::vector<Integer>& y) const {
  std::vector<Integer> out(target.generator_count(), 0);
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = 0; b < images[a].size(); ++b) {
      if (x[a] == 0 || y[b] == 0) continue;
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[a] * y[b] * images[a][b][k];
    }
  return out;
}

ExteriorProduct exterior_product(const KZeroResult& m, const KZeroResult& n,
                                 const KZeroResult& tensor) {
  const std::size_t nm = m.generators.size();
  const std::size_t nn = n.generators.size();
  const std::size_t nt = tensor.generators.size();
  if (nt != nm * nn) throw StructuralError("exterior_product: tensor has the wrong object count");
  ExteriorProduct out;
  out.target = tensor.group;
  out.images.assign(nm, std::vector<std::vector<Integer>>(nn));
  for (std::size_t a = 0; a < nm; ++a)
    for (std::size_t b = 0; b < nn; ++b) out.images[a][b] = unit_vector(nt, a * nn + b);

  out.well_defined = true;
  const IntMatrix& rm = m.group.relations();
  const IntMatrix& rn = n.group.relations();
  for (std::size_t i = 0; i < rm.rows() && out.well_defined; ++i)
    for (std::size_t b = 0; b < nn && out.well_defined; ++b)
      out.well_defined = tensor.group.is_zero(out.evaluate(rm.row_vector(i), unit_vector(nn, b)));
  for (std::size_t i = 0; i < rn.rows() && out.well_defined; ++i)
    for (std::size_t a = 0; a < nm && out.well_defined; ++a)
      out.well_defined = tensor.group.is_zero(out.evaluate(unit_vector(nm, a), rn.row_vector(i)));
  return out;
}

}  // namespace kring
