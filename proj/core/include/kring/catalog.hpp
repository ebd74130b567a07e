#pragma once

#include <cstdint>
#include <memory>

#include "kring/ringoid.hpp"

namespace kring {

/// Z/n as a one-object unital ringoid (no scalar ring). n = 1 gives the zero
/// ring with a single generator of order 1.
FiniteRingoid cyclic_ring(std::int64_t n);

/// The zero ring with the trivial hom-group written with no generators.
FiniteRingoid zero_ring();

/// A commutative one-object ring viewed as a moduloid over itself.
FiniteRingoid self_scalar(const FiniteRingoid& ring);

/// k x k matrices over a one-object ring, as a one-object ringoid. Generator
/// (i, j, s) of the result is E_ij times generator s of the ring.
FiniteRingoid matrix_ring(const FiniteRingoid& ring, std::size_t k);

/// Componentwise product of two one-object rings.
FiniteRingoid product_ring(const FiniteRingoid& a, const FiniteRingoid& b);

inline std::shared_ptr<const FiniteRingoid> share(FiniteRingoid r) {
  return std::make_shared<const FiniteRingoid>(std::move(r));
}

}  // namespace kring
