#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kring/fin_ab_group.hpp"

namespace kring {

/// Malformed structure (index out of range, wrong coordinate count). Distinct
/// from an axiom failure, which is reported through ValidationReport.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Axiom {
  kBilinearity,
  kAssociativity,
  kIdentity,
  kScalarRing,
  kModule,
  kScalarCompatibility,
  kAdditivity,
  kMultiplicativity,
  kUnitPreservation,
  kIdeal,
};

std::string_view axiom_name(Axiom a);

/// One failed axiom, with the objects and generator indices that witness it.
struct Violation {
  Axiom axiom;
  std::vector<std::size_t> objects;
  std::vector<std::size_t> generators;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
  bool has(Axiom a) const;
  const Violation* first(Axiom a) const;
};

/// A finite ringoid: objects, a finite abelian hom-group for every ordered
/// pair, and bilinear composition given by structure constants on generator
/// pairs. Identities and an action of a commutative one-object scalar ring
/// are optional; without identities the record describes a non-unital
/// moduloid.
///
/// Composition is written compose(a, b, c, y, x) = y o x for x in Hom(a,b)
/// and y in Hom(b,c). The structure constant constant(a, b, c, p, q) is the
/// image of generator p of Hom(a,b) followed by generator q of Hom(b,c).
class FiniteRingoid {
 public:
  FiniteRingoid() = default;
  FiniteRingoid(std::string name, std::vector<std::string> objects);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t object_count() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object_name(std::size_t a) const { return objects_.at(a); }
  std::optional<std::size_t> find_object(std::string_view id) const;

  const FinAbGroup& hom(std::size_t a, std::size_t b) const;
  /// Replaces Hom(a,b); constants, identity and action data that mention the
  /// pair are reset to zero.
  void set_hom(std::size_t a, std::size_t b, FinAbGroup group);

  Elem constant(std::size_t a, std::size_t b, std::size_t c, std::size_t p, std::size_t q) const;
  void set_constant(std::size_t a, std::size_t b, std::size_t c, std::size_t p, std::size_t q,
                    Elem value);
  Elem compose(std::size_t a, std::size_t b, std::size_t c, const Elem& y, const Elem& x) const;

  bool unital() const { return !identities_.empty(); }
  const Elem& identity(std::size_t a) const;
  void set_identities(std::vector<Elem> identities);
  void clear_identities() { identities_.clear(); }

  const std::shared_ptr<const FiniteRingoid>& scalar_ring() const { return scalar_; }
  /// Installs a scalar ring with the zero action; fill with set_action.
  void set_scalar_ring(std::shared_ptr<const FiniteRingoid> ring);
  void clear_scalar_ring();
  /// Action of generator r of the scalar ring on generator g of Hom(a,b).
  Elem action_constant(std::size_t a, std::size_t b, std::size_t r, std::size_t g) const;
  void set_action(std::size_t a, std::size_t b, std::size_t r, std::size_t g, Elem value);
  Elem act(std::size_t a, std::size_t b, const Elem& r, const Elem& x) const;

  /// Same object count, hom-groups, constants, identities (and scalar data when
  /// requested), with absent constants read as zero.
  bool same_structure(const FiniteRingoid& other, bool compare_scalars = true) const;

 private:
  std::size_t pair(std::size_t a, std::size_t b) const { return a * objects_.size() + b; }
  std::size_t triple(std::size_t a, std::size_t b, std::size_t c) const {
    return (a * objects_.size() + b) * objects_.size() + c;
  }
  void check_object(std::size_t a) const;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<FinAbGroup> homs_;
  // Per triple, p-major table of images; empty means all zero.
  std::vector<std::vector<Elem>> constants_;
  std::vector<Elem> identities_;
  std::shared_ptr<const FiniteRingoid> scalar_;
  // Per pair, r-major table of images; empty means all zero.
  std::vector<std::vector<Elem>> action_;
};

/// Raised by constructions whose input fails an axiom check.
class AxiomError : public std::runtime_error {
 public:
  AxiomError(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Homomorphism of finite ringoids, given on hom-group generators.
class RingoidHom {
 public:
  RingoidHom(std::shared_ptr<const FiniteRingoid> source,
             std::shared_ptr<const FiniteRingoid> target, std::vector<std::size_t> object_map);

  const FiniteRingoid& source() const { return *source_; }
  const FiniteRingoid& target() const { return *target_; }
  const std::shared_ptr<const FiniteRingoid>& source_ptr() const { return source_; }
  const std::shared_ptr<const FiniteRingoid>& target_ptr() const { return target_; }
  std::size_t map_object(std::size_t a) const { return object_map_.at(a); }
  const std::vector<std::size_t>& object_map() const { return object_map_; }

  /// Image of generator g of Hom(a,b) in Hom(F a, F b).
  const Elem& image(std::size_t a, std::size_t b, std::size_t g) const;
  void set_image(std::size_t a, std::size_t b, std::size_t g, Elem value);
  Elem apply(std::size_t a, std::size_t b, const Elem& x) const;

 private:
  std::shared_ptr<const FiniteRingoid> source_;
  std::shared_ptr<const FiniteRingoid> target_;
  std::vector<std::size_t> object_map_;
  std::vector<std::vector<Elem>> images_;  // per source pair
};

/// g after f.
RingoidHom compose(const RingoidHom& g, const RingoidHom& f);
RingoidHom identity_hom(std::shared_ptr<const FiniteRingoid> r);

/// Checks every ringoid axiom on generators: well-defined bilinear
/// composition, associativity, identities when unital, and the moduloid
/// axioms r(xy) = (rx)y = x(ry) plus the module axioms when a scalar ring is
/// present.
ValidationReport validate(const FiniteRingoid& r);
ValidationReport validate_hom(const RingoidHom& f);

/// Bijective on objects and on every hom-group (checked by enumeration).
bool is_bijective(const RingoidHom& f);

/// Commutative, unital, one object and itself valid.
bool is_commutative_ring(const FiniteRingoid& r);

/// Non-unital moduloid on the given objects with every hom-group trivial.
FiniteRingoid zero_moduloid(const std::vector<std::string>& objects,
                            std::shared_ptr<const FiniteRingoid> scalars);

}  // namespace kring
