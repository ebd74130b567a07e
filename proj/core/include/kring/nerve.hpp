#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kring/ab_presentation.hpp"
#include "kring/additive.hpp"
#include "kring/ktheory.hpp"

namespace kring {

/// An object of N_n: n sums, with biproducts taken by concatenation.
using NerveTuple = std::vector<ObjSum>;
/// A morphism of N_n: one matrix per entry.
using NerveMorphism = std::vector<MatMorphism>;

struct NerveLevel {
  std::size_t level = 0;
  std::size_t bound = 0;
  /// Tuples of total length <= bound.
  std::vector<NerveTuple> objects;
  /// Enumeration stopped at the cap.
  bool partial = false;
};
NerveLevel nerve_level(const AdditiveView& view, std::size_t n, std::size_t bound,
                       std::uint64_t cap = std::uint64_t{1} << 20);

/// sigma_0 drops the first entry, sigma_n the last, and sigma_i merges
/// entries i and i + 1 (counting from 1).
NerveTuple face(const NerveTuple& x, std::size_t i);
/// tau_i inserts the zero object after entry i.
NerveTuple degeneracy(const NerveTuple& x, std::size_t i);

/// Block-diagonal sum f + g.
MatMorphism block_sum(const AdditiveView& view, const MatMorphism& f, const MatMorphism& g);
NerveMorphism face(const AdditiveView& view, const NerveMorphism& x, std::size_t i);
/// Inserts the zero map of the zero object.
NerveMorphism degeneracy(const NerveMorphism& x, std::size_t i);

struct SimplicialReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool partial = false;
  bool ok() const { return failures.empty(); }
};
/// Every face/degeneracy identity on all objects of levels 0..n_max within
/// the bound, and on one seeded sample morphism per object.
SimplicialReport check_simplicial_identities(const AdditiveView& view, std::size_t n_max,
                                             std::size_t bound, std::uint64_t seed = 1);

/// Free-group word: generator g is g + 1, its inverse -(g + 1).
using Word = std::vector<std::int64_t>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  /// Exponent-sum matrix of the relators.
  AbPresentation abelianization() const;
  std::string to_string() const;
};

/// Result of Tietze moves: dropping trivial relators and eliminating a
/// generator that occurs exactly once in some relator.
struct Simplification {
  GroupPresentation result;
  /// Original generator index of each surviving generator.
  std::vector<std::size_t> kept;
  /// Each original generator as a word in the surviving generators.
  std::vector<Word> images;
};
Word free_reduce(const Word& w);
Word invert(const Word& w);
Simplification simplify(const GroupPresentation& p);

/// pi_1 of the 2-truncated realization of wN(R+): one generator per sum of
/// length <= bound, (a)(b) = (a+b) for each pair within the bound, and
/// (s) = (t) for each isomorphism.
struct NerveKZero {
  std::vector<ObjSum> sums;  // generator i is the 1-cell of sums[i]
  GroupPresentation presentation;
  Simplification simplified;
  AbPresentation group;
  bool decided = true;
};
NerveKZero k0_via_nerve(RingoidPtr r, std::size_t bound, const Limits& limits = {});

struct OracleReport {
  KZeroResult bounded;
  NerveKZero nerve;
  /// Surviving nerve generator s -> vec(s).
  AbHom comparison;
  bool match = false;
  bool decided() const { return bounded.decided() && nerve.decided; }
};
OracleReport oracle_compare(RingoidPtr r, std::size_t bound, const Limits& limits = {});

}  // namespace kring
