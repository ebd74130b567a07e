#pragma once

#include <cstddef>
#include <vector>

#include "kring/ab_presentation.hpp"
#include "kring/constructions.hpp"
#include "kring/groupoid.hpp"
#include "kring/ktheory.hpp"

namespace kring {

/// Degree-zero assembly: one summand per component (or orbit), each sent to
/// the class of its chosen object in K0 of the big ringoid.
struct AssemblyZeroMap {
  std::vector<Component> components;
  /// K0 of the coefficient ring of each summand.
  std::vector<KZeroResult> summands;
  AbPresentation source;
  KZeroResult target;
  AbHom map;
  bool well_defined = false;
  bool isomorphism = false;
  /// Only for the equivariant map: each R[H] -> R X-bar is a ringoid
  /// homomorphism.
  bool inclusions_valid = true;
  bool decided() const;
};

AssemblyZeroMap assembly_zero(const FinGroupoid& pi, RingoidPtr ring, std::size_t bound,
                              const Limits& limits = {});

/// Source summands are K0(R[H]) over the orbits of X, H the vertex group.
AssemblyZeroMap equivariant_assembly_zero(const GSet& x, RingoidPtr ring, std::size_t bound,
                                          const Limits& limits = {});

struct NaturalityReport {
  AssemblyZeroMap source_assembly;
  AssemblyZeroMap target_assembly;
  AbHom source_map;  // orbit summands of X -> orbit summands of Y
  AbHom target_map;  // K0(R X-bar) -> K0(R Y-bar)
  bool equivariant = false;
  bool functor_valid = false;
  bool commutes = false;
  bool decided() const { return source_assembly.decided() && target_assembly.decided(); }
};
NaturalityReport naturality_check(const GMap& f, RingoidPtr ring, std::size_t bound,
                                  const Limits& limits = {});

}  // namespace kring
