#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kring/ab_presentation.hpp"
#include "kring/additive.hpp"
#include "kring/constructions.hpp"
#include "kring/fin_group.hpp"

namespace kring {

/// Bounded K0: the free abelian group on base objects modulo the relations
/// found among sums of length <= bound. The true K0 is a quotient of this.
struct KZeroResult {
  RingoidPtr ringoid;
  std::size_t bound = 0;
  AbPresentation group;
  /// Generator i is the class of the one-object sum (i).
  std::vector<ObjSum> generators;
  IntMatrix relations;
  /// Same relation lattice as at bound - 1.
  bool stabilized = false;
  IsoClassTable table;

  bool decided() const { return table.decided(); }
};

/// Multiplicity vector of a sum over the base objects.
std::vector<Integer> object_vector(const ObjSum& s, std::size_t objects);

KZeroResult k0_bounded(RingoidPtr r, std::size_t bound, const Limits& limits = {});

/// Induced map on generators [a] -> [F a].
struct InducedMap {
  AbHom map;
  /// Every source relation maps into the target relations.
  bool consistent = false;
  std::string diagnostic;
};
InducedMap k0_induced(const RingoidHom& f, const KZeroResult& source, const KZeroResult& target);

/// K0 of a non-unital moduloid: the kernel of K0(M+) -> K0(R_M).
struct RelativeKZero {
  KZeroResult plus;
  KZeroResult scalars;
  AbHom projection;
  Kernel kernel;
  const AbPresentation& group() const { return kernel.group; }
  bool decided() const { return plus.decided() && scalars.decided(); }
};
RelativeKZero k0_relative(const FiniteRingoid& m, std::size_t bound, const Limits& limits = {});

/// Compares K0 of the strictly cofinal subcategory of 0 and the sums of
/// length >= 2 with K0 of the whole completion.
struct CofinalityReport {
  KZeroResult full;
  AbPresentation sub;
  std::vector<ObjSum> sub_generators;  // A-class representatives, then formal sums
  AbHom map;
  bool cofinal = false;
  bool well_defined = false;
  bool isomorphism = false;
  bool decided() const { return full.decided(); }
};
CofinalityReport cofinality_check(RingoidPtr r, std::size_t bound, const Limits& limits = {});

/// Degree-zero shadow of K(J) -> K(M) -> K(M/J).
struct FibrationReport {
  RelativeKZero ideal;
  KZeroResult middle;
  KZeroResult quotient;
  AbHom left;   // K0(J) -> K0(M)
  AbHom right;  // K0(M) -> K0(M/J)
  bool homs_valid = false;  // J+ -> M and M -> M/J are ringoid homomorphisms
  bool composite_zero = false;
  bool exact = false;
  bool decided() const { return ideal.decided() && middle.decided() && quotient.decided(); }
};
FibrationReport fibration_check(const Ideal& j, std::size_t bound, const Limits& limits = {});

/// Invertible endomorphisms of a, with group product x*y = x o y.
struct GLGroup {
  ObjSum object;
  FinGroup group;
  std::vector<MatMorphism> elements;
  FinAbGroup hom;
  std::vector<std::uint64_t> hom_index;  // increasing, one per element
  /// Position of an invertible endomorphism, or nullopt.
  std::optional<std::size_t> index_of(const MatMorphism& m) const;
};
/// Largest GL table we build (the product table is quadratic).
inline constexpr std::size_t kMaxGLOrder = 6000;
/// Throws std::length_error when |Hom(a,a)| exceeds the ceiling or there are
/// more than kMaxGLOrder invertible elements.
GLGroup gl(const AdditiveView& view, const ObjSum& a, const Limits& limits = {});

struct KOneResult {
  /// Abelianizations of GL_n for n = 1..n_max (index n - 1).
  std::vector<AbPresentation> abelianizations;
  std::vector<std::size_t> orders;
  /// GL_n^ab -> GL_{n+1}^ab induced by x -> diag(x, 1).
  std::vector<AbHom> stabilization;
  /// The stabilization embedding is an injective homomorphism at every step.
  bool embeddings_valid = true;
  bool stabilized = false;
  /// Ranks above this were not enumerable within the ceiling.
  std::size_t reached = 0;
};
KOneResult k1_bounded(RingoidPtr r, std::size_t n_max, const Limits& limits = {});

/// For a commutative one-object ring: det maps GL_n onto the units.
bool determinant_surjective(RingoidPtr r, std::size_t n, const Limits& limits = {});

/// [a] . [b] = [a*b] into K0 of the tensor ringoid (object a*|N| + b).
struct ExteriorProduct {
  /// images[a][b] in the generators of K0(M (x) N).
  std::vector<std::vector<std::vector<Integer>>> images;
  bool well_defined = false;
  AbPresentation target;
  std::vector<Integer> evaluate(const std::vector<Integer>& x, const std::vector<Integer>& y) const;
};
ExteriorProduct exterior_product(const KZeroResult& m, const KZeroResult& n,
                                 const KZeroResult& tensor);

}  // namespace kring
