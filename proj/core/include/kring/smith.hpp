#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kring/int_matrix.hpp"

namespace kring {

/// Result of a Smith normal form computation: u * m * v == d, with u and v
/// unimodular and d diagonal with d(0,0) | d(1,1) | ... (zeros last).
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Same diagonal and column transform as smith_normal_form, without tracking
/// the row transform. Cheap for tall matrices.
struct SmithColumnForm {
  std::vector<Integer> diagonal;  // length == rank, all positive
  IntMatrix v;
};
SmithColumnForm smith_column_form(const IntMatrix& m);

/// Hermite normal form row basis of the row lattice of m: the nonzero rows of
/// the reduced echelon form. Canonical for the lattice.
IntMatrix row_basis(const IntMatrix& m);

/// Basis (as rows) of {z : z * m == 0}.
IntMatrix left_kernel(const IntMatrix& m);

/// Inverse of a unimodular matrix (throws if the input is not unimodular).
IntMatrix unimodular_inverse(const IntMatrix& v);

/// Solves x * m == v over the integers for a fixed m.
class LeftSolver {
 public:
  explicit LeftSolver(const IntMatrix& m);
  std::optional<std::vector<Integer>> solve(std::span<const Integer> v) const;

 private:
  SmithDecomposition smith_;
};

/// The integer row lattice spanned by a set of vectors, with a membership
/// oracle.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t dimension, const IntMatrix& spanning_rows);

  std::size_t dimension() const { return dimension_; }
  const IntMatrix& basis() const { return basis_; }
  bool contains(std::span<const Integer> v) const;
  /// Coordinates w = v * V in the Smith basis.
  std::vector<Integer> smith_coordinates(std::span<const Integer> v) const;
  const std::vector<Integer>& diagonal() const { return diagonal_; }

 private:
  std::size_t dimension_ = 0;
  IntMatrix basis_;
  IntMatrix v_;
  std::vector<Integer> diagonal_;
};

}  // namespace kring
