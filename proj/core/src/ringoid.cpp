#include "kring/ringoid.hpp"

#include <algorithm>
#include <sstream>

namespace kring {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kBilinearity: return "bilinearity";
    case Axiom::kAssociativity: return "associativity";
    case Axiom::kIdentity: return "identity";
    case Axiom::kScalarRing: return "scalar-ring";
    case Axiom::kModule: return "module";
    case Axiom::kScalarCompatibility: return "scalar-compatibility";
    case Axiom::kAdditivity: return "additivity";
    case Axiom::kMultiplicativity: return "multiplicativity";
    case Axiom::kUnitPreservation: return "unit-preservation";
    case Axiom::kIdeal: return "ideal";
  }
  return "unknown";
}

bool ValidationReport::has(Axiom a) const { return first(a) != nullptr; }

const Violation* ValidationReport::first(Axiom a) const {
  for (const auto& v : violations)
    if (v.axiom == a) return &v;
  return nullptr;
}

FiniteRingoid::FiniteRingoid(std::string name, std::vector<std::string> objects)
    : name_(std::move(name)), objects_(std::move(objects)) {
  const std::size_t n = objects_.size();
  homs_.assign(n * n, FinAbGroup{});
  constants_.assign(n * n * n, {});
  action_.assign(n * n, {});
}

std::optional<std::size_t> FiniteRingoid::find_object(std::string_view id) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == id) return i;
  return std::nullopt;
}

void FiniteRingoid::check_object(std::size_t a) const {
  if (a >= objects_.size())
    throw StructuralError("object index " + std::to_string(a) + " out of range in " + name_);
}

const FinAbGroup& FiniteRingoid::hom(std::size_t a, std::size_t b) const {
  check_object(a);
  check_object(b);
  return homs_[pair(a, b)];
}

void FiniteRingoid::set_hom(std::size_t a, std::size_t b, FinAbGroup group) {
  check_object(a);
  check_object(b);
  homs_[pair(a, b)] = std::move(group);
  const std::size_t n = objects_.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if ((x == a && y == b) || (y == a && z == b) || (x == a && z == b))
          constants_[triple(x, y, z)].clear();
  action_[pair(a, b)].clear();
  if (a == b && unital()) identities_[a] = homs_[pair(a, a)].zero();
}

Elem FiniteRingoid::constant(std::size_t a, std::size_t b, std::size_t c, std::size_t p,
                             std::size_t q) const {
  const FinAbGroup& ab = hom(a, b);
  const FinAbGroup& bc = hom(b, c);
  const FinAbGroup& ac = hom(a, c);
  if (p >= ab.generator_count() || q >= bc.generator_count())
    throw StructuralError("generator index out of range in constant()");
  const auto& table = constants_[triple(a, b, c)];
  if (table.empty()) return ac.zero();
  return table[p * bc.generator_count() + q];
}

void FiniteRingoid::set_constant(std::size_t a, std::size_t b, std::size_t c, std::size_t p,
                                 std::size_t q, Elem value) {
  const FinAbGroup& ab = hom(a, b);
  const FinAbGroup& bc = hom(b, c);
  const FinAbGroup& ac = hom(a, c);
  if (p >= ab.generator_count() || q >= bc.generator_count())
    throw StructuralError("structure constant generator index out of range (" + objects_[a] +
                          "," + objects_[b] + "," + objects_[c] + ")");
  if (!ac.is_reduced(value))
    throw StructuralError("structure constant coordinates do not lie in Hom(" + objects_[a] +
                          "," + objects_[c] + ")");
  auto& table = constants_[triple(a, b, c)];
  if (table.empty()) table.assign(ab.generator_count() * bc.generator_count(), ac.zero());
  table[p * bc.generator_count() + q] = std::move(value);
}

Elem FiniteRingoid::compose(std::size_t a, std::size_t b, std::size_t c, const Elem& y,
                            const Elem& x) const {
  const FinAbGroup& ac = hom(a, c);
  Elem out = ac.zero();
  const auto& table = constants_[triple(a, b, c)];
  if (table.empty()) return out;
  const std::size_t nq = y.size();
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p] == 0) continue;
    for (std::size_t q = 0; q < nq; ++q) {
      if (y[q] == 0) continue;
      ac.accumulate(out, table[p * nq + q], x[p] * y[q]);
    }
  }
  return out;
}

const Elem& FiniteRingoid::identity(std::size_t a) const {
  check_object(a);
  if (!unital()) throw StructuralError("ringoid " + name_ + " has no identities");
  return identities_[a];
}

void FiniteRingoid::set_identities(std::vector<Elem> identities) {
  if (identities.size() != objects_.size())
    throw StructuralError("identity count does not match object count");
  for (std::size_t a = 0; a < identities.size(); ++a)
    if (!hom(a, a).is_reduced(identities[a]))
      throw StructuralError("identity coordinates do not lie in Hom(" + objects_[a] + "," +
                            objects_[a] + ")");
  identities_ = std::move(identities);
}

void FiniteRingoid::set_scalar_ring(std::shared_ptr<const FiniteRingoid> ring) {
  if (ring && ring->object_count() != 1)
    throw StructuralError("scalar ring must have exactly one object");
  scalar_ = std::move(ring);
  for (auto& t : action_) t.clear();
}

void FiniteRingoid::clear_scalar_ring() {
  scalar_.reset();
  for (auto& t : action_) t.clear();
}

Elem FiniteRingoid::action_constant(std::size_t a, std::size_t b, std::size_t r,
                                    std::size_t g) const {
  if (!scalar_) throw StructuralError("ringoid " + name_ + " has no scalar ring");
  const FinAbGroup& h = hom(a, b);
  const std::size_t nr = scalar_->hom(0, 0).generator_count();
  if (r >= nr || g >= h.generator_count())
    throw StructuralError("action generator index out of range");
  const auto& table = action_[pair(a, b)];
  if (table.empty()) return h.zero();
  return table[r * h.generator_count() + g];
}

void FiniteRingoid::set_action(std::size_t a, std::size_t b, std::size_t r, std::size_t g,
                               Elem value) {
  if (!scalar_) throw StructuralError("ringoid " + name_ + " has no scalar ring");
  const FinAbGroup& h = hom(a, b);
  const std::size_t nr = scalar_->hom(0, 0).generator_count();
  if (r >= nr || g >= h.generator_count())
    throw StructuralError("action generator index out of range (" + objects_[a] + "," +
                          objects_[b] + ")");
  if (!h.is_reduced(value))
    throw StructuralError("action coordinates do not lie in Hom(" + objects_[a] + "," +
                          objects_[b] + ")");
  auto& table = action_[pair(a, b)];
  if (table.empty()) table.assign(nr * h.generator_count(), h.zero());
  table[r * h.generator_count() + g] = std::move(value);
}

Elem FiniteRingoid::act(std::size_t a, std::size_t b, const Elem& r, const Elem& x) const {
  const FinAbGroup& h = hom(a, b);
  Elem out = h.zero();
  const auto& table = action_[pair(a, b)];
  if (table.empty()) return out;
  const std::size_t ng = x.size();
  for (std::size_t s = 0; s < r.size(); ++s) {
    if (r[s] == 0) continue;
    for (std::size_t g = 0; g < ng; ++g) {
      if (x[g] == 0) continue;
      h.accumulate(out, table[s * ng + g], r[s] * x[g]);
    }
  }
  return out;
}

bool FiniteRingoid::same_structure(const FiniteRingoid& o, bool compare_scalars) const {
  if (objects_.size() != o.objects_.size() || homs_ != o.homs_) return false;
  const std::size_t n = objects_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t p = 0; p < hom(a, b).generator_count(); ++p)
          for (std::size_t q = 0; q < hom(b, c).generator_count(); ++q)
            if (constant(a, b, c, p, q) != o.constant(a, b, c, p, q)) return false;
  if (unital() != o.unital()) return false;
  if (unital() && identities_ != o.identities_) return false;
  if (!compare_scalars) return true;
  if (bool(scalar_) != bool(o.scalar_)) return false;
  if (!scalar_) return true;
  if (!scalar_->same_structure(*o.scalar_, false)) return false;
  const std::size_t nr = scalar_->hom(0, 0).generator_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t g = 0; g < hom(a, b).generator_count(); ++g)
          if (action_constant(a, b, r, g) != o.action_constant(a, b, r, g)) return false;
  return true;
}

// ---------------------------------------------------------------------------

RingoidHom::RingoidHom(std::shared_ptr<const FiniteRingoid> source,
                       std::shared_ptr<const FiniteRingoid> target,
                       std::vector<std::size_t> object_map)
    : source_(std::move(source)), target_(std::move(target)), object_map_(std::move(object_map)) {
  if (!source_ || !target_) throw StructuralError("RingoidHom: null ringoid");
  if (object_map_.size() != source_->object_count())
    throw StructuralError("RingoidHom: object map has wrong length");
  for (auto b : object_map_)
    if (b >= target_->object_count())
      throw StructuralError("RingoidHom: object map hits a non-object");
  const std::size_t n = source_->object_count();
  images_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const FinAbGroup& tgt = target_->hom(object_map_[a], object_map_[b]);
      images_[a * n + b].assign(source_->hom(a, b).generator_count(), tgt.zero());
    }
}

const Elem& RingoidHom::image(std::size_t a, std::size_t b, std::size_t g) const {
  const std::size_t n = source_->object_count();
  return images_.at(a * n + b).at(g);
}

void RingoidHom::set_image(std::size_t a, std::size_t b, std::size_t g, Elem value) {
  const std::size_t n = source_->object_count();
  if (a >= n || b >= n) throw StructuralError("RingoidHom: object index out of range");
  auto& imgs = images_[a * n + b];
  if (g >= imgs.size()) throw StructuralError("RingoidHom: generator index out of range");
  if (!target_->hom(object_map_[a], object_map_[b]).is_reduced(value))
    throw StructuralError("RingoidHom: image coordinates do not lie in the target hom-group");
  imgs[g] = std::move(value);
}

Elem RingoidHom::apply(std::size_t a, std::size_t b, const Elem& x) const {
  const FinAbGroup& tgt = target_->hom(object_map_[a], object_map_[b]);
  Elem out = tgt.zero();
  const std::size_t n = source_->object_count();
  const auto& imgs = images_[a * n + b];
  for (std::size_t g = 0; g < x.size(); ++g)
    if (x[g] != 0) tgt.accumulate(out, imgs[g], x[g]);
  return out;
}

RingoidHom compose(const RingoidHom& g, const RingoidHom& f) {
  if (&f.target() != &g.source() && !f.target().same_structure(g.source()))
    throw StructuralError("compose: target of f is not the source of g");
  std::vector<std::size_t> objs;
  for (auto a : f.object_map()) objs.push_back(g.map_object(a));
  RingoidHom h(f.source_ptr(), g.target_ptr(), objs);
  const std::size_t n = f.source().object_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < f.source().hom(a, b).generator_count(); ++k)
        h.set_image(a, b, k, g.apply(f.map_object(a), f.map_object(b), f.image(a, b, k)));
  return h;
}

RingoidHom identity_hom(std::shared_ptr<const FiniteRingoid> r) {
  std::vector<std::size_t> objs(r->object_count());
  for (std::size_t a = 0; a < objs.size(); ++a) objs[a] = a;
  RingoidHom h(r, r, objs);
  for (std::size_t a = 0; a < objs.size(); ++a)
    for (std::size_t b = 0; b < objs.size(); ++b)
      for (std::size_t k = 0; k < r->hom(a, b).generator_count(); ++k)
        h.set_image(a, b, k, r->hom(a, b).generator(k));
  return h;
}

// ---------------------------------------------------------------------------

namespace {

std::string describe(const FiniteRingoid& r, const std::vector<std::size_t>& objs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < objs.size(); ++i) os << (i ? "," : "") << r.object_name(objs[i]);
  os << ')';
  return os.str();
}

std::string show(const Elem& x) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << x[i];
  os << ']';
  return os.str();
}

void check_ring_axioms(const FiniteRingoid& r, ValidationReport& report) {
  const std::size_t n = r.object_count();
  // Bilinearity: the constants must respect the orders of both generators,
  // otherwise the bilinear extension is not well defined.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const FinAbGroup& ab = r.hom(a, b);
        const FinAbGroup& bc = r.hom(b, c);
        const FinAbGroup& ac = r.hom(a, c);
        for (std::size_t p = 0; p < ab.generator_count(); ++p)
          for (std::size_t q = 0; q < bc.generator_count(); ++q) {
            Elem k = r.constant(a, b, c, p, q);
            if (!ac.is_zero(ac.scale(k, ab.modulus(p))) || !ac.is_zero(ac.scale(k, bc.modulus(q))))
              report.violations.push_back(
                  {Axiom::kBilinearity, {a, b, c}, {p, q},
                   "composite of generators " + std::to_string(p) + " of Hom" +
                       describe(r, {a, b}) + " and " + std::to_string(q) + " of Hom" +
                       describe(r, {b, c}) + " is " + show(k) +
                       ", incompatible with the generator orders"});
          }
      }
  // Associativity on generator triples.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const FinAbGroup& ab = r.hom(a, b);
          const FinAbGroup& bc = r.hom(b, c);
          const FinAbGroup& cd = r.hom(c, d);
          for (std::size_t p = 0; p < ab.generator_count(); ++p)
            for (std::size_t q = 0; q < bc.generator_count(); ++q)
              for (std::size_t s = 0; s < cd.generator_count(); ++s) {
                Elem x = ab.generator(p), y = bc.generator(q), z = cd.generator(s);
                Elem left = r.compose(a, c, d, r.compose(b, c, d, z, y), x);
                Elem right = r.compose(a, b, d, z, r.compose(a, b, c, y, x));
                if (left != right)
                  report.violations.push_back(
                      {Axiom::kAssociativity, {a, b, c, d}, {p, q, s},
                       "(zy)x = " + show(left) + " but z(yx) = " + show(right) + " on " +
                           describe(r, {a, b, c, d})});
              }
        }
  if (!r.unital()) return;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const FinAbGroup& ab = r.hom(a, b);
      for (std::size_t p = 0; p < ab.generator_count(); ++p) {
        Elem x = ab.generator(p);
        Elem left = r.compose(a, b, b, r.identity(b), x);
        Elem right = r.compose(a, a, b, x, r.identity(a));
        if (left != x || right != x)
          report.violations.push_back({Axiom::kIdentity, {a, b}, {p},
                                       "identity fails on generator " + std::to_string(p) +
                                           " of Hom" + describe(r, {a, b}) + ": e x = " +
                                           show(left) + ", x e = " + show(right)});
      }
    }
}

}  // namespace

bool is_commutative_ring(const FiniteRingoid& r) {
  if (r.object_count() != 1 || !r.unital()) return false;
  ValidationReport rep;
  check_ring_axioms(r, rep);
  if (!rep.clean()) return false;
  const FinAbGroup& h = r.hom(0, 0);
  for (std::size_t p = 0; p < h.generator_count(); ++p)
    for (std::size_t q = p + 1; q < h.generator_count(); ++q)
      if (r.constant(0, 0, 0, p, q) != r.constant(0, 0, 0, q, p)) return false;
  return true;
}

ValidationReport validate(const FiniteRingoid& r) {
  ValidationReport report;
  check_ring_axioms(r, report);
  const auto& scalars = r.scalar_ring();
  if (!scalars) return report;
  if (!is_commutative_ring(*scalars)) {
    report.violations.push_back(
        {Axiom::kScalarRing, {}, {}, "scalar ring is not a valid commutative unital ring"});
    return report;
  }
  const std::size_t n = r.object_count();
  const FinAbGroup& rg = scalars->hom(0, 0);
  const Elem& one = scalars->identity(0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const FinAbGroup& h = r.hom(a, b);
      for (std::size_t g = 0; g < h.generator_count(); ++g) {
        Elem x = h.generator(g);
        for (std::size_t s = 0; s < rg.generator_count(); ++s) {
          Elem k = r.action_constant(a, b, s, g);
          if (!h.is_zero(h.scale(k, rg.modulus(s))) || !h.is_zero(h.scale(k, h.modulus(g))))
            report.violations.push_back({Axiom::kModule, {a, b}, {s, g},
                                         "action constant incompatible with generator orders"});
          for (std::size_t t = 0; t < rg.generator_count(); ++t) {
            Elem st = scalars->compose(0, 0, 0, rg.generator(s), rg.generator(t));
            Elem lhs = r.act(a, b, st, x);
            Elem rhs = r.act(a, b, rg.generator(s), r.act(a, b, rg.generator(t), x));
            if (lhs != rhs)
              report.violations.push_back({Axiom::kModule, {a, b}, {s, t, g},
                                           "(rs)x != r(sx) on Hom" + describe(r, {a, b})});
          }
        }
        if (r.act(a, b, one, x) != x)
          report.violations.push_back(
              {Axiom::kModule, {a, b}, {g}, "1x != x on Hom" + describe(r, {a, b})});
      }
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const FinAbGroup& ab = r.hom(a, b);
        const FinAbGroup& bc = r.hom(b, c);
        for (std::size_t s = 0; s < rg.generator_count(); ++s) {
          Elem rs = rg.generator(s);
          for (std::size_t p = 0; p < ab.generator_count(); ++p)
            for (std::size_t q = 0; q < bc.generator_count(); ++q) {
              Elem x = ab.generator(p), y = bc.generator(q);
              Elem base = r.act(a, c, rs, r.compose(a, b, c, y, x));
              Elem outer = r.compose(a, b, c, r.act(b, c, rs, y), x);
              Elem inner = r.compose(a, b, c, y, r.act(a, b, rs, x));
              if (base != outer || base != inner)
                report.violations.push_back(
                    {Axiom::kScalarCompatibility, {a, b, c}, {s, p, q},
                     "r(yx), (ry)x, y(rx) = " + show(base) + ", " + show(outer) + ", " +
                         show(inner) + " on " + describe(r, {a, b, c})});
            }
        }
      }
  return report;
}

ValidationReport validate_hom(const RingoidHom& f) {
  ValidationReport report;
  const FiniteRingoid& s = f.source();
  const FiniteRingoid& t = f.target();
  const std::size_t n = s.object_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const FinAbGroup& ab = s.hom(a, b);
      const FinAbGroup& tab = t.hom(f.map_object(a), f.map_object(b));
      for (std::size_t g = 0; g < ab.generator_count(); ++g)
        if (!tab.is_zero(tab.scale(f.image(a, b, g), ab.modulus(g))))
          report.violations.push_back(
              {Axiom::kAdditivity, {a, b}, {g},
               "image of generator " + std::to_string(g) + " of Hom" + describe(s, {a, b}) +
                   " has order not dividing the generator's"});
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const FinAbGroup& ab = s.hom(a, b);
        const FinAbGroup& bc = s.hom(b, c);
        for (std::size_t p = 0; p < ab.generator_count(); ++p)
          for (std::size_t q = 0; q < bc.generator_count(); ++q) {
            Elem x = ab.generator(p), y = bc.generator(q);
            Elem lhs = f.apply(a, c, s.compose(a, b, c, y, x));
            Elem rhs = t.compose(f.map_object(a), f.map_object(b), f.map_object(c),
                                 f.apply(b, c, y), f.apply(a, b, x));
            if (lhs != rhs)
              report.violations.push_back(
                  {Axiom::kMultiplicativity, {a, b, c}, {p, q},
                   "F(yx) = " + show(lhs) + " but F(y)F(x) = " + show(rhs) + " on " +
                       describe(s, {a, b, c})});
          }
      }
  if (s.unital() && t.unital())
    for (std::size_t a = 0; a < n; ++a) {
      Elem img = f.apply(a, a, s.identity(a));
      if (img != t.identity(f.map_object(a)))
        report.violations.push_back({Axiom::kUnitPreservation, {a}, {},
                                     "F(e) = " + show(img) + " is not the identity of " +
                                         t.object_name(f.map_object(a))});
    }
  return report;
}

bool is_bijective(const RingoidHom& f) {
  const FiniteRingoid& s = f.source();
  const FiniteRingoid& t = f.target();
  const std::size_t n = s.object_count();
  if (t.object_count() != n) return false;
  std::vector<char> hit(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (hit[f.map_object(a)]) return false;
    hit[f.map_object(a)] = 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const FinAbGroup& src = s.hom(a, b);
      const FinAbGroup& tgt = t.hom(f.map_object(a), f.map_object(b));
      if (src.order() != tgt.order()) return false;
      std::vector<char> seen(tgt.order(), 0);
      for (const Elem& x : src.elements()) {
        const std::uint64_t i = tgt.index_of(f.apply(a, b, x));
        if (seen[i]) return false;
        seen[i] = 1;
      }
    }
  return true;
}

FiniteRingoid zero_moduloid(const std::vector<std::string>& objects,
                            std::shared_ptr<const FiniteRingoid> scalars) {
  FiniteRingoid m("zero", objects);
  m.set_scalar_ring(std::move(scalars));
  return m;
}

}  // namespace kring
