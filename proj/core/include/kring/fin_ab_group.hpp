#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kring/ab_presentation.hpp"
#include "kring/int_matrix.hpp"
#include "kring/smith.hpp"

namespace kring {

/// Element of a FinAbGroup: one reduced residue per cyclic factor.
using Elem = std::vector<std::int64_t>;

/// Moduli above this are rejected so residue products fit in 64 bits.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 30;

/// Finite abelian group Z/d1 x ... x Z/dk. The empty product is the trivial
/// group; factors with d = 1 are allowed and contribute nothing.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t generator_count() const { return moduli_.size(); }
  std::int64_t modulus(std::size_t i) const { return moduli_[i]; }

  /// Group order, saturating at UINT64_MAX.
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  Elem zero() const { return Elem(moduli_.size(), 0); }
  Elem generator(std::size_t i) const;
  bool is_reduced(const Elem& x) const;
  bool is_zero(const Elem& x) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem subtract(const Elem& a, const Elem& b) const;
  Elem negate(const Elem& a) const;
  Elem scale(const Elem& a, std::int64_t k) const;
  /// a += k * b, in place.
  void accumulate(Elem& a, const Elem& b, std::int64_t k) const;
  Elem reduce(std::span<const Integer> coords) const;
  Elem reduce(std::span<const std::int64_t> coords) const;

  /// Mixed-radix index, first coordinate most significant (lexicographic).
  std::uint64_t index_of(const Elem& x) const;
  Elem element_at(std::uint64_t index) const;
  std::vector<Elem> elements() const;

  /// Z^k modulo the diagonal moduli.
  AbPresentation presentation() const;
  IntMatrix relation_matrix() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<std::int64_t> moduli_;
};

std::vector<Integer> to_integers(const Elem& x);

/// Reduction of Z^k onto a finite cokernel Z^k / L, with explicit coordinates.
class FiniteQuotient {
 public:
  FiniteQuotient() = default;
  /// Throws std::invalid_argument if Z^k / L is infinite.
  FiniteQuotient(std::size_t k, const IntMatrix& relations);

  const FinAbGroup& group() const { return group_; }
  std::size_t source_dimension() const { return k_; }
  /// Image in the quotient of an integer vector of Z^k.
  Elem project(std::span<const Integer> x) const;
  Elem project(std::span<const std::int64_t> x) const;
  /// A preimage in Z^k of quotient generator i.
  const std::vector<Integer>& lift(std::size_t i) const { return lifts_[i]; }

 private:
  std::size_t k_ = 0;
  FinAbGroup group_;
  std::vector<std::size_t> kept_;  // Smith coordinates with d > 1
  IntMatrix v_;
  std::vector<std::vector<Integer>> lifts_;
};

/// Subgroup of a FinAbGroup generated by given elements, presented as a
/// FinAbGroup of its own, with the inclusion and its partial inverse.
class SubgroupEmbedding {
 public:
  SubgroupEmbedding(const FinAbGroup& parent, const std::vector<Elem>& generators);

  const FinAbGroup& parent() const { return parent_; }
  const FinAbGroup& group() const { return quotient_.group(); }
  Elem include(const Elem& x) const;
  /// Subgroup coordinates of a parent element, or nullopt when outside.
  std::optional<Elem> restrict(const Elem& y) const;
  bool contains(const Elem& y) const { return restrict(y).has_value(); }

 private:
  FinAbGroup parent_;
  IntMatrix gens_;  // s x k
  FiniteQuotient quotient_;
  LeftSolver solver_;
  std::vector<Elem> images_;  // subgroup generator -> parent element
};

}  // namespace kring
