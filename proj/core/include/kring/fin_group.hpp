#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kring/ab_presentation.hpp"

namespace kring {

/// Finite group stored by its full multiplication table.
///
/// Practical ceiling is around 10^4 elements (the table is quadratic). The
/// constructor checks the identity and inverses; associativity is cubic and
/// checked separately by is_associative().
class FinGroup {
 public:
  FinGroup() : FinGroup(1, {0}, 0) {}
  FinGroup(std::size_t order, std::vector<std::size_t> table, std::size_t identity,
           std::vector<std::string> names = {});

  static FinGroup cyclic(std::size_t n);
  static FinGroup symmetric(std::size_t n);

  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_associative() const;
  bool is_abelian() const;

 private:
  std::size_t order_;
  std::vector<std::size_t> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
};

/// G / [G, G] with the quotient coordinates of every group element.
struct Abelianization {
  AbPresentation group;
  /// coordinates[g] expresses the class of g in the generators of `group`.
  std::vector<std::vector<Integer>> coordinates;
  /// Group elements whose classes are the presentation generators.
  std::vector<std::size_t> generators;
  std::size_t commutator_order = 1;
};

Abelianization abelianize(const FinGroup& g);

/// Subgroup generated by `gens`, as a sorted element list.
std::vector<std::size_t> generated_subgroup(const FinGroup& g, const std::vector<std::size_t>& gens);

}  // namespace kring
