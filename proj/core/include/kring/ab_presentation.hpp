#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kring/int_matrix.hpp"
#include "kring/smith.hpp"

namespace kring {

/// Finitely presented abelian group Z^g / (row span of the relations).
///
/// The relation matrix is stored as its Hermite row basis; the normal form
/// (free rank plus torsion chain t1 | t2 | ..., every ti >= 2) is derived from
/// its Smith form. Equality compares normal forms only.
class AbPresentation {
 public:
  AbPresentation() = default;
  explicit AbPresentation(std::size_t generators);
  AbPresentation(std::size_t generators, const IntMatrix& relations);

  std::size_t generator_count() const { return lattice_.dimension(); }
  const IntMatrix& relations() const { return lattice_.basis(); }
  const Lattice& relation_lattice() const { return lattice_; }

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  /// Group order, or 0 when the group is infinite.
  Integer order() const;

  /// True when the vector (in generator coordinates) is zero in the group.
  bool is_zero(std::span<const Integer> v) const { return lattice_.contains(v); }
  bool equal_elements(std::span<const Integer> a, std::span<const Integer> b) const;

  /// "0", "Z", "Z^2 + Z/2 + Z/6", ...
  std::string to_string() const;

  friend bool operator==(const AbPresentation& a, const AbPresentation& b) {
    return a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
  }

 private:
  Lattice lattice_;
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Presentation of Z^cols / row-span(m).
AbPresentation cokernel(const IntMatrix& m);
AbPresentation cokernel(std::size_t generators, const IntMatrix& m);

/// Homomorphism of presented groups; generator i of the source goes to row i
/// of `matrix` (expressed in target generators).
struct AbHom {
  AbPresentation source;
  AbPresentation target;
  IntMatrix matrix;
};

/// Every source relation maps into the target relation lattice.
bool is_well_defined(const AbHom& f);
bool is_zero_map(const AbHom& f);
bool is_surjective(const AbHom& f);
bool is_injective(const AbHom& f);
bool is_isomorphism(const AbHom& f);

struct Kernel {
  AbPresentation group;
  /// Kernel generators as rows in source generator coordinates.
  IntMatrix generators;
};
Kernel kernel(const AbHom& f);

/// g after f.
AbHom compose(const AbHom& g, const AbHom& f);

/// Rows of `matrix` span the image inside f.target.
IntMatrix image_generators(const AbHom& f);

/// Subgroup generated by `small` is contained in the one generated by `big`,
/// inside the ambient group.
bool subgroup_contains(const AbPresentation& ambient, const IntMatrix& big,
                       const IntMatrix& small);

/// Two maps agree modulo the target relations.
bool maps_agree(const AbHom& f, const AbHom& g);

/// Block-diagonal direct sum of presentations.
AbPresentation direct_sum(const std::vector<AbPresentation>& parts);

}  // namespace kring
