#include "kring/groupoid.hpp"

#include <numeric>
#include <stdexcept>

namespace kring {

FinGroupoid::FinGroupoid(std::string name, std::vector<std::string> objects,
                         std::vector<GroupoidMorphism> morphisms)
    : name_(std::move(name)), objects_(std::move(objects)), morphisms_(std::move(morphisms)) {
  const std::size_t n = objects_.size(), m = morphisms_.size();
  homs_.resize(n * n);
  for (std::size_t f = 0; f < m; ++f) {
    const auto& mor = morphisms_[f];
    if (mor.source >= n || mor.target >= n)
      throw std::invalid_argument("morphism " + mor.name + " has an unknown endpoint");
    homs_[mor.source * n + mor.target].push_back(f);
  }
  then_.assign(m * m, std::nullopt);
  identities_.assign(n, std::nullopt);
  inverses_.assign(m, std::nullopt);
}

std::optional<std::size_t> FinGroupoid::find_object(const std::string& id) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> FinGroupoid::find_morphism(const std::string& id) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].name == id) return i;
  return std::nullopt;
}

void FinGroupoid::set_then(std::size_t f, std::size_t g, std::size_t h) {
  const auto& mf = morphisms_.at(f);
  const auto& mg = morphisms_.at(g);
  const auto& mh = morphisms_.at(h);
  if (mf.target != mg.source)
    throw std::invalid_argument("compose " + mf.name + " " + mg.name + ": not composable");
  if (mh.source != mf.source || mh.target != mg.target)
    throw std::invalid_argument("compose " + mf.name + " " + mg.name + " -> " + mh.name +
                                ": composite has the wrong endpoints");
  then_[f * morphisms_.size() + g] = h;
}

void FinGroupoid::set_identity(std::size_t a, std::size_t f) {
  const auto& m = morphisms_.at(f);
  if (m.source != a || m.target != a)
    throw std::invalid_argument("identity " + m.name + " is not an endomorphism of " +
                                objects_.at(a));
  identities_[a] = f;
}

void FinGroupoid::set_inverse(std::size_t f, std::size_t g) {
  const auto& mf = morphisms_.at(f);
  const auto& mg = morphisms_.at(g);
  if (mf.source != mg.target || mf.target != mg.source)
    throw std::invalid_argument("inverse " + mf.name + " " + mg.name + ": wrong endpoints");
  inverses_[f] = g;
  inverses_[g] = f;
}

std::optional<std::size_t> FinGroupoid::then(std::size_t f, std::size_t g) const {
  return then_.at(f * morphisms_.size() + g);
}

void FinGroupoid::infer_units() {
  const std::size_t n = objects_.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (identities_[a]) continue;
    for (auto f : hom(a, a)) {
      bool unit = true;
      for (std::size_t g = 0; g < morphisms_.size() && unit; ++g) {
        if (morphisms_[g].source == a && then(f, g) != g) unit = false;
        if (morphisms_[g].target == a && then(g, f) != g) unit = false;
      }
      if (unit) {
        identities_[a] = f;
        break;
      }
    }
  }
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    if (inverses_[f]) continue;
    const auto& mf = morphisms_[f];
    if (!identities_[mf.source] || !identities_[mf.target]) continue;
    for (auto g : hom(mf.target, mf.source))
      if (then(f, g) == identities_[mf.source] && then(g, f) == identities_[mf.target]) {
        inverses_[f] = g;
        break;
      }
  }
}

std::optional<std::string> FinGroupoid::check() const {
  const std::size_t m = morphisms_.size();
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      if (morphisms_[f].target != morphisms_[g].source) continue;
      auto h = then(f, g);
      if (!h) return "no composite for " + morphisms_[f].name + " then " + morphisms_[g].name;
    }
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      if (morphisms_[f].target != morphisms_[g].source) continue;
      const std::size_t fg = *then(f, g);
      for (std::size_t h = 0; h < m; ++h) {
        if (morphisms_[g].target != morphisms_[h].source) continue;
        if (then(fg, h) != then(f, *then(g, h)))
          return "associativity fails on " + morphisms_[f].name + ", " + morphisms_[g].name +
                 ", " + morphisms_[h].name;
      }
    }
  for (std::size_t a = 0; a < objects_.size(); ++a) {
    if (!identities_[a]) return "object " + objects_[a] + " has no identity";
    const std::size_t e = *identities_[a];
    for (std::size_t f = 0; f < m; ++f) {
      if (morphisms_[f].source == a && then(e, f) != f)
        return "identity of " + objects_[a] + " fails on " + morphisms_[f].name;
      if (morphisms_[f].target == a && then(f, e) != f)
        return "identity of " + objects_[a] + " fails on " + morphisms_[f].name;
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    auto g = inverses_[f];
    if (!g) return "morphism " + morphisms_[f].name + " has no inverse";
    if (then(f, *g) != identities_[morphisms_[f].source] ||
        then(*g, f) != identities_[morphisms_[f].target])
      return "inverse of " + morphisms_[f].name + " is not two-sided";
  }
  return std::nullopt;
}

FinGroupoid FinGroupoid::from_group(const FinGroup& g, std::string name) {
  std::vector<GroupoidMorphism> mors;
  for (std::size_t i = 0; i < g.order(); ++i) mors.push_back({0, 0, g.name(i)});
  FinGroupoid out(std::move(name), {"*"}, std::move(mors));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) out.set_then(a, b, g.multiply(b, a));
  out.set_identity(0, g.identity());
  for (std::size_t a = 0; a < g.order(); ++a) out.inverses_[a] = g.inverse(a);
  return out;
}

FinGroupoid FinGroupoid::discrete(std::vector<std::string> objects) {
  std::vector<GroupoidMorphism> mors;
  for (std::size_t a = 0; a < objects.size(); ++a) mors.push_back({a, a, "1" + objects[a]});
  FinGroupoid out("discrete", std::move(objects), std::move(mors));
  for (std::size_t a = 0; a < out.object_count(); ++a) {
    out.set_then(a, a, a);
    out.set_identity(a, a);
    out.set_inverse(a, a);
  }
  return out;
}

// ---------------------------------------------------------------------------

GSet::GSet(std::string name, FinGroup group, std::vector<std::string> points)
    : name_(std::move(name)), group_(std::move(group)), points_(std::move(points)) {
  action_.assign(points_.size() * group_.order(), points_.size());
}

void GSet::set_act(std::size_t x, std::size_t g, std::size_t y) {
  if (x >= points_.size() || y >= points_.size() || g >= group_.order())
    throw std::invalid_argument("act: index out of range");
  action_[x * group_.order() + g] = y;
}

std::size_t GSet::act(std::size_t x, std::size_t g) const {
  std::size_t y = action_.at(x * group_.order() + g);
  if (y == points_.size()) throw std::invalid_argument("act: action undefined at " + points_[x]);
  return y;
}

std::optional<std::string> GSet::check() const {
  for (std::size_t i = 0; i < action_.size(); ++i)
    if (action_[i] == points_.size())
      return "action of " + group_.name(i % group_.order()) + " on " +
             points_[i / group_.order()] + " is undefined";
  for (std::size_t x = 0; x < points_.size(); ++x) {
    if (act(x, group_.identity()) != x) return "identity moves " + points_[x];
    for (std::size_t g = 0; g < group_.order(); ++g)
      for (std::size_t h = 0; h < group_.order(); ++h)
        if (act(act(x, g), h) != act(x, group_.multiply(g, h)))
          return "(x.g).h != x.(gh) at x=" + points_[x] + ", g=" + group_.name(g) +
                 ", h=" + group_.name(h);
  }
  return std::nullopt;
}

GSet GSet::point(const FinGroup& g) {
  GSet x("G/G", g, {"pt"});
  for (std::size_t a = 0; a < g.order(); ++a) x.set_act(0, a, 0);
  return x;
}

GSet GSet::regular(const FinGroup& g) {
  GSet x("G/e", g, g.names());
  for (std::size_t p = 0; p < g.order(); ++p)
    for (std::size_t a = 0; a < g.order(); ++a) x.set_act(p, a, g.multiply(p, a));
  return x;
}

GSet GSet::disjoint_union(const GSet& a, const GSet& b) {
  if (a.group_.order() != b.group_.order())
    throw std::invalid_argument("disjoint_union: different groups");
  std::vector<std::string> pts;
  for (const auto& p : a.points_) pts.push_back(p);
  for (const auto& p : b.points_) pts.push_back(p + "'");
  GSet u(a.name_ + "+" + b.name_, a.group_, pts);
  const std::size_t n = a.points_.size();
  for (std::size_t g = 0; g < a.group_.order(); ++g) {
    for (std::size_t x = 0; x < n; ++x) u.set_act(x, g, a.act(x, g));
    for (std::size_t x = 0; x < b.points_.size(); ++x) u.set_act(n + x, g, n + b.act(x, g));
  }
  return u;
}

bool is_equivariant(const GMap& f) {
  const FinGroup& g = f.source->group();
  for (std::size_t x = 0; x < f.source->point_count(); ++x)
    for (std::size_t a = 0; a < g.order(); ++a)
      if (f.image.at(f.source->act(x, a)) != f.target->act(f.image.at(x), a)) return false;
  return true;
}

FinGroupoid transport_groupoid(const GSet& xs) {
  const FinGroup& g = xs.group();
  const std::size_t n = xs.point_count(), order = g.order();
  std::vector<GroupoidMorphism> mors;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < order; ++a)
      mors.push_back({x, xs.act(x, a), xs.point_name(x) + ":" + g.name(a)});
  FinGroupoid out("transport(" + xs.name() + ")", xs.points(), std::move(mors));
  auto id = [&](std::size_t x, std::size_t a) { return x * order + a; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        out.set_then(id(x, a), id(xs.act(x, a), b), id(x, g.multiply(a, b)));
    out.set_identity(x, id(x, g.identity()));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < order; ++a)
      out.set_inverse(id(x, a), id(xs.act(x, a), g.inverse(a)));
  return out;
}

std::vector<Component> orbit_skeleton(const FinGroupoid& g) {
  const std::size_t n = g.object_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t f = 0; f < g.morphism_count(); ++f) {
    std::size_t a = find(g.morphism(f).source), b = find(g.morphism(f).target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Component> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t r = find(a);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back(Component{{}, a, {}, {}});
    }
    out[slot[r]].objects.push_back(a);
  }
  for (auto& c : out) {
    c.vertex_morphisms = g.hom(c.chosen, c.chosen);
    const std::size_t k = c.vertex_morphisms.size();
    std::vector<std::size_t> pos(g.morphism_count(), k);
    for (std::size_t i = 0; i < k; ++i) pos[c.vertex_morphisms[i]] = i;
    std::vector<std::size_t> table(k * k);
    std::vector<std::string> names;
    for (std::size_t h = 0; h < k; ++h) {
      names.push_back(g.morphism(c.vertex_morphisms[h]).name);
      for (std::size_t i = 0; i < k; ++i)
        table[h * k + i] = pos[*g.then(c.vertex_morphisms[i], c.vertex_morphisms[h])];
    }
    c.vertex_group = FinGroup(k, std::move(table), pos[*g.identity(c.chosen)], std::move(names));
  }
  return out;
}

FinGroupoid vertex_groupoid(const FinGroupoid& g, const Component& c) {
  FinGroupoid out = FinGroupoid::from_group(c.vertex_group, g.name() + "@" + g.object_name(c.chosen));
  return out;
}

}  // namespace kring
