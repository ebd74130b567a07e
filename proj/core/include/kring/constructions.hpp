#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kring/groupoid.hpp"
#include "kring/ringoid.hpp"

namespace kring {

using RingoidPtr = std::shared_ptr<const FiniteRingoid>;

/// Hom(a,a) = R, Hom(a,b) = 0 for a != b; unital, over R.
FiniteRingoid scalar_ringoid(const std::vector<std::string>& objects, RingoidPtr ring);

/// M+: Hom(a,a) gains a copy of R, with (x+l)(y+m) = xy + l.y + m.x + lm and
/// identity 0+1. Generators of Hom(a,a) are those of M followed by those of R.
FiniteRingoid unitize(const FiniteRingoid& m);

/// pi(x + l) = l, from M+ onto R_M.
RingoidHom unitization_projection(RingoidPtr plus, RingoidPtr scalar_ringoid);

/// Hom-wise direct sum of two ringoids on the same objects.
FiniteRingoid direct_sum(const FiniteRingoid& m, const FiniteRingoid& n);

struct UnitizationSplitting {
  RingoidPtr sum;   // M + R_M
  RingoidPtr plus;  // M+
  RingoidPtr scalars;  // R_M
  RingoidHom alpha;          // (x, l) -> x - l e + l
  RingoidHom alpha_inverse;  // y + m -> (y + m e, m)
  RingoidHom pi;             // M+ -> R_M
  RingoidHom pi_sum;         // M + R_M -> R_M
};
UnitizationSplitting unitization_splitting(RingoidPtr m);

/// Subgroups of every hom-group of a moduloid, by generators.
struct Ideal {
  RingoidPtr parent;
  std::vector<std::vector<Elem>> generators;  // per pair a * n + b

  const std::vector<Elem>& gens(std::size_t a, std::size_t b) const {
    return generators.at(a * parent->object_count() + b);
  }
};
Ideal zero_ideal(RingoidPtr parent);
Ideal improper_ideal(RingoidPtr parent);
/// Closure under the scalar action and absorption on both sides.
ValidationReport validate_ideal(const Ideal& j);

struct SubModuloid {
  RingoidPtr ringoid;
  RingoidHom inclusion;
};
/// The ideal as a non-unital moduloid, with its inclusion into the parent.
SubModuloid ideal_moduloid(const Ideal& j);

struct QuotientResult {
  RingoidPtr ringoid;
  RingoidHom map;
};
/// M/J with the quotient map. Throws AxiomError when J is not an ideal.
QuotientResult quotient(const Ideal& j);

/// M (x)_R N on objects a*b. Over Z when neither side has scalars; mismatched
/// scalar rings throw StructuralError.
FiniteRingoid tensor(const FiniteRingoid& m, const FiniteRingoid& n);

/// Free R-module on each morphism set, (x g)(y h) = (xy)(g then h).
/// Generator (i, s) of Hom(a,b) is generator s of R on the i-th morphism.
FiniteRingoid group_ringoid(const FinGroupoid& pi, RingoidPtr ring);

struct GroupRingTensorIso {
  RingoidPtr group_ring;  // R pi
  RingoidPtr tensor;      // Z pi (x) R, Z pi with free hom-groups
  RingoidHom theta;
};
GroupRingTensorIso group_ringoid_tensor_iso(const FinGroupoid& pi, RingoidPtr ring);

/// Functor from a groupoid to finite commutative rings: one ring per object
/// and a ring isomorphism per morphism.
struct PiRing {
  std::vector<RingoidPtr> rings;
  std::vector<RingoidHom> actions;  // per morphism g: a -> b, R_a -> R_b
};
/// The identity-action pi-ring with R on every object.
PiRing constant_pi_ring(const FinGroupoid& pi, RingoidPtr ring);
/// Ring homomorphisms, identities act trivially, and g then h acts as h o g.
ValidationReport validate_pi_ring(const FinGroupoid& pi, const PiRing& r);

/// Hom(a,b) is free over R_b on Hom(a,b); composing x g with y h gives
/// y h(x) attached to g then h. Throws AxiomError for a non-functorial action.
FiniteRingoid twisted_group_ringoid(const FinGroupoid& pi, const PiRing& r);

}  // namespace kring
