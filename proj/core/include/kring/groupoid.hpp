#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kring/fin_group.hpp"

namespace kring {

struct GroupoidMorphism {
  std::size_t source;
  std::size_t target;
  std::string name;
};

/// Finite groupoid with morphisms indexed globally. then(f, g) is f followed
/// by g, defined when target(f) == source(g).
class FinGroupoid {
 public:
  FinGroupoid() = default;
  FinGroupoid(std::string name, std::vector<std::string> objects,
              std::vector<GroupoidMorphism> morphisms);

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object_name(std::size_t a) const { return objects_.at(a); }
  std::optional<std::size_t> find_object(const std::string& id) const;

  std::size_t morphism_count() const { return morphisms_.size(); }
  const GroupoidMorphism& morphism(std::size_t f) const { return morphisms_.at(f); }
  std::optional<std::size_t> find_morphism(const std::string& id) const;
  /// Morphisms a -> b in index order.
  const std::vector<std::size_t>& hom(std::size_t a, std::size_t b) const {
    return homs_.at(a * objects_.size() + b);
  }

  void set_then(std::size_t f, std::size_t g, std::size_t h);
  void set_identity(std::size_t a, std::size_t f);
  void set_inverse(std::size_t f, std::size_t g);

  /// Composite, or nullopt when undefined.
  std::optional<std::size_t> then(std::size_t f, std::size_t g) const;
  std::optional<std::size_t> identity(std::size_t a) const { return identities_.at(a); }
  std::optional<std::size_t> inverse(std::size_t f) const { return inverses_.at(f); }

  /// Fills unset identities (the unique f: a -> a with f;f = f that acts as a
  /// unit) and inverses from the composition table.
  void infer_units();

  /// Every composable pair has a composite of the right type, composition is
  /// associative, identities act as identities and every morphism has a
  /// two-sided inverse. Returns the first problem found.
  std::optional<std::string> check() const;

  static FinGroupoid from_group(const FinGroup& g, std::string name = "G");
  static FinGroupoid discrete(std::vector<std::string> objects);

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<GroupoidMorphism> morphisms_;
  std::vector<std::vector<std::size_t>> homs_;
  std::vector<std::optional<std::size_t>> then_;  // f * count + g
  std::vector<std::optional<std::size_t>> identities_;
  std::vector<std::optional<std::size_t>> inverses_;
};

/// Finite set with a right action of a finite group.
class GSet {
 public:
  GSet(std::string name, FinGroup group, std::vector<std::string> points);

  const std::string& name() const { return name_; }
  const FinGroup& group() const { return group_; }
  std::size_t point_count() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point_name(std::size_t x) const { return points_.at(x); }

  void set_act(std::size_t x, std::size_t g, std::size_t y);
  /// x . g
  std::size_t act(std::size_t x, std::size_t g) const;

  /// x.e = x and (x.g).h = x.(gh) for all points and group elements.
  std::optional<std::string> check() const;

  /// The trivial action on a single point (G/G).
  static GSet point(const FinGroup& g);
  /// G acting on itself by right multiplication (G/e).
  static GSet regular(const FinGroup& g);
  static GSet disjoint_union(const GSet& a, const GSet& b);

 private:
  std::string name_;
  FinGroup group_;
  std::vector<std::string> points_;
  std::vector<std::size_t> action_;  // x * |G| + g, |X| = unset
};

/// Equivariant map of G-sets, as the image of each point.
struct GMap {
  const GSet* source;
  const GSet* target;
  std::vector<std::size_t> image;
};
bool is_equivariant(const GMap& f);

/// Objects are the points; the morphisms x -> y are the g with x.g = y, and
/// g followed by h is gh.
FinGroupoid transport_groupoid(const GSet& x);

struct Component {
  std::vector<std::size_t> objects;
  std::size_t chosen;
  /// Endomorphisms of the chosen object in index order; group element i of
  /// vertex_group is vertex_morphisms[i], with product h*g = g then h.
  std::vector<std::size_t> vertex_morphisms;
  FinGroup vertex_group;
};

/// Connected components, each with its least object and vertex group.
std::vector<Component> orbit_skeleton(const FinGroupoid& g);

/// The full subgroupoid on one object of a component, as a groupoid whose
/// morphism i is vertex_morphisms[i].
FinGroupoid vertex_groupoid(const FinGroupoid& g, const Component& c);

}  // namespace kring
