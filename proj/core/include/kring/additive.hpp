#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kring/ringoid.hpp"

namespace kring {

/// Formal direct sum of base objects, by index. Empty is the zero object.
using ObjSum = std::vector<std::size_t>;

std::string to_string(const ObjSum& s, const FiniteRingoid& base);
ObjSum concat(const ObjSum& a, const ObjSum& b);

/// Matrix morphism source -> target; entry (i, j) lies in
/// Hom(source[j], target[i]). Entries are stored row-major.
struct MatMorphism {
  ObjSum source;
  ObjSum target;
  std::vector<Elem> entries;

  const Elem& at(std::size_t i, std::size_t j) const { return entries[i * source.size() + j]; }
  Elem& at(std::size_t i, std::size_t j) { return entries[i * source.size() + j]; }
  friend bool operator==(const MatMorphism&, const MatMorphism&) = default;
};

/// Search limits, passed explicitly.
struct Limits {
  std::uint64_t ceiling = std::uint64_t{1} << 20;
  unsigned threads = 1;
};

enum class IsoStatus { kFound, kNone, kUndecided };

struct IsoSearch {
  IsoStatus status = IsoStatus::kNone;
  std::optional<MatMorphism> forward;  // a -> b
  std::optional<MatMorphism> inverse;  // b -> a
  /// Set when the witness is a permutation found without enumerating.
  bool by_permutation = false;
};

struct Biproduct {
  ObjSum sum;
  MatMorphism ia, ib, pa, pb;
};

/// The additive completion of a ringoid: formal sums and matrices, computed
/// on demand.
class AdditiveView {
 public:
  explicit AdditiveView(std::shared_ptr<const FiniteRingoid> base);

  const FiniteRingoid& base() const { return *base_; }
  const std::shared_ptr<const FiniteRingoid>& base_ptr() const { return base_; }
  bool unital() const { return base_->unital(); }

  /// Hom(a, b) as one finite abelian group: the entry groups in row-major
  /// order. Its element order is the search order.
  FinAbGroup hom(const ObjSum& a, const ObjSum& b) const;
  Integer hom_size(const ObjSum& a, const ObjSum& b) const;
  MatMorphism from_elem(const ObjSum& a, const ObjSum& b, const Elem& x) const;
  Elem to_elem(const MatMorphism& m) const;

  MatMorphism zero(const ObjSum& a, const ObjSum& b) const;
  /// Throws StructuralError when the base has no identities.
  MatMorphism identity(const ObjSum& a) const;
  MatMorphism add(const MatMorphism& x, const MatMorphism& y) const;
  MatMorphism negate(const MatMorphism& x) const;
  /// y o x.
  MatMorphism compose(const MatMorphism& y, const MatMorphism& x) const;
  bool is_valid(const MatMorphism& m) const;

  /// Canonical biproduct of a and b on the concatenation.
  Biproduct biproduct(const ObjSum& a, const ObjSum& b) const;
  bool check_biproduct(const Biproduct& b) const;

  /// Permutation matrix a -> b carrying a[i] to b[perm[i]].
  MatMorphism permutation(const ObjSum& a, const ObjSum& b,
                          const std::vector<std::size_t>& perm) const;

  /// A v with u v = 1 and v u = 1, searched column by column.
  std::optional<MatMorphism> inverse(const MatMorphism& u) const;

  /// Lexicographically least isomorphism a -> b with a certified inverse.
  IsoSearch find_isomorphism(const ObjSum& a, const ObjSum& b, const Limits& limits = {}) const;

  /// Cardinalities |Hom(c, s)| and |Hom(s, c)| over base objects c.
  std::vector<Integer> signature(const ObjSum& s) const;

 private:
  std::optional<MatMorphism> right_inverse(const MatMorphism& u) const;

  std::shared_ptr<const FiniteRingoid> base_;
};

/// Ringoid homomorphism applied entrywise to matrices.
class CompletedFunctor {
 public:
  explicit CompletedFunctor(RingoidHom f) : f_(std::move(f)) {}
  const RingoidHom& hom() const { return f_; }
  ObjSum map_object(const ObjSum& s) const;
  MatMorphism apply(const MatMorphism& m) const;

 private:
  RingoidHom f_;
};

CompletedFunctor map_completion(const RingoidHom& f);

/// Every ObjSum of length <= bound in shortlex order.
std::vector<ObjSum> sums_up_to(std::size_t objects, std::size_t bound);

/// Isomorphism classes of sums of length <= bound.
struct IsoClassTable {
  std::size_t bound = 0;
  std::vector<ObjSum> representatives;  // shortlex-least member of each class
  std::map<ObjSum, std::size_t> class_of;
  /// oplus[i][j]: class of rep_i + rep_j when that sum is within the bound.
  std::vector<std::vector<std::optional<std::size_t>>> oplus;
  /// Pairs whose isomorphism test exceeded the ceiling.
  std::vector<std::pair<ObjSum, ObjSum>> undecided;

  bool decided() const { return undecided.empty(); }
  std::size_t size() const { return representatives.size(); }
};

IsoClassTable iso_class_table(const AdditiveView& view, std::size_t bound,
                              const Limits& limits = {});

}  // namespace kring
