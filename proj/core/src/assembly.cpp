#include "kring/assembly.hpp"

#include <algorithm>
#include <stdexcept>

#include "kring/catalog.hpp"

namespace kring {

namespace {

std::size_t position_in(const std::vector<std::size_t>& list, std::size_t value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it == list.end()) throw std::logic_error("morphism missing from its hom-set");
  return static_cast<std::size_t>(it - list.begin());
}

// Stacks per-summand rows into one map out of the direct sum.
AbHom stack(const std::vector<KZeroResult>& summands, const std::vector<IntMatrix>& blocks,
            const KZeroResult& target) {
  std::vector<AbPresentation> parts;
  IntMatrix rows(0, target.generators.size());
  for (std::size_t i = 0; i < summands.size(); ++i) {
    parts.push_back(summands[i].group);
    rows.append_rows(blocks[i]);
  }
  return AbHom{direct_sum(parts), target.group, rows};
}

void finish(AssemblyZeroMap& out, const std::vector<IntMatrix>& blocks) {
  out.map = stack(out.summands, blocks, out.target);
  out.source = out.map.source;
  out.well_defined = is_well_defined(out.map);
  out.isomorphism = out.well_defined && is_isomorphism(out.map);
}

std::size_t component_of(const std::vector<Component>& cs, std::size_t object) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (std::find(cs[i].objects.begin(), cs[i].objects.end(), object) != cs[i].objects.end())
      return i;
  throw std::logic_error("object outside every component");
}

}  // namespace

bool AssemblyZeroMap::decided() const {
  return target.decided() &&
         std::all_of(summands.begin(), summands.end(), [](const KZeroResult& k) { return k.decided(); });
}

AssemblyZeroMap assembly_zero(const FinGroupoid& pi, RingoidPtr ring, std::size_t bound,
                              const Limits& limits) {
  AssemblyZeroMap out;
  out.components = orbit_skeleton(pi);
  KZeroResult coefficients = k0_bounded(ring, bound, limits);
  out.target = k0_bounded(share(group_ringoid(pi, ring)), bound, limits);
  std::vector<IntMatrix> blocks;
  for (const Component& c : out.components) {
    out.summands.push_back(coefficients);
    IntMatrix block(1, pi.object_count());
    block(0, c.chosen) = 1;
    blocks.push_back(block);
  }
  finish(out, blocks);
  return out;
}

AssemblyZeroMap equivariant_assembly_zero(const GSet& x, RingoidPtr ring, std::size_t bound,
                                          const Limits& limits) {
  AssemblyZeroMap out;
  FinGroupoid bar = transport_groupoid(x);
  auto big = share(group_ringoid(bar, ring));
  out.components = orbit_skeleton(bar);
  out.target = k0_bounded(big, bound, limits);
  const std::size_t k = ring->hom(0, 0).generator_count();
  std::vector<IntMatrix> blocks;
  for (const Component& c : out.components) {
    auto small = share(group_ringoid(vertex_groupoid(bar, c), ring));
    out.summands.push_back(k0_bounded(small, bound, limits));
    // R[H] -> R X-bar at the chosen object; vertex morphism i sits at
    // position i of Hom(chosen, chosen).
    RingoidHom inclusion(small, big, {c.chosen});
    const FinAbGroup& target_hom = big->hom(c.chosen, c.chosen);
    for (std::size_t i = 0; i < c.vertex_morphisms.size(); ++i) {
      const std::size_t p = position_in(bar.hom(c.chosen, c.chosen), c.vertex_morphisms[i]);
      for (std::size_t s = 0; s < k; ++s) inclusion.set_image(0, 0, i * k + s, target_hom.generator(p * k + s));
    }
    out.inclusions_valid = out.inclusions_valid && validate_hom(inclusion).clean();
    blocks.push_back(k0_induced(inclusion, out.summands.back(), out.target).map.matrix);
  }
  finish(out, blocks);
  return out;
}

NaturalityReport naturality_check(const GMap& f, RingoidPtr ring, std::size_t bound,
                                  const Limits& limits) {
  NaturalityReport out;
  out.equivariant = is_equivariant(f);
  if (!out.equivariant) return out;
  const GSet& xs = *f.source;
  const GSet& ys = *f.target;
  out.source_assembly = equivariant_assembly_zero(xs, ring, bound, limits);
  out.target_assembly = equivariant_assembly_zero(ys, ring, bound, limits);
  const auto& cx = out.source_assembly.components;
  const auto& cy = out.target_assembly.components;

  // Each orbit summand goes to the summand of the image orbit.
  IntMatrix sm(cx.size(), cy.size());
  for (std::size_t o = 0; o < cx.size(); ++o) sm(o, component_of(cy, f.image[cx[o].chosen])) = 1;
  out.source_map = AbHom{out.source_assembly.source, out.target_assembly.source, sm};

  // The functor X-bar -> Y-bar, (x, g) -> (f x, g), extended R-linearly.
  FinGroupoid xbar = transport_groupoid(xs), ybar = transport_groupoid(ys);
  const std::size_t order = xs.group().order();
  const std::size_t k = ring->hom(0, 0).generator_count();
  const RingoidPtr& rx = out.source_assembly.target.ringoid;
  const RingoidPtr& ry = out.target_assembly.target.ringoid;
  RingoidHom functor(rx, ry, f.image);
  for (std::size_t a = 0; a < xbar.object_count(); ++a)
    for (std::size_t b = 0; b < xbar.object_count(); ++b) {
      const auto& mors = xbar.hom(a, b);
      const std::size_t fa = f.image[a], fb = f.image[b];
      for (std::size_t i = 0; i < mors.size(); ++i) {
        const std::size_t g = mors[i] % order;
        const std::size_t p = position_in(ybar.hom(fa, fb), fa * order + g);
        for (std::size_t s = 0; s < k; ++s)
          functor.set_image(a, b, i * k + s, ry->hom(fa, fb).generator(p * k + s));
      }
    }
  out.functor_valid = validate_hom(functor).clean();
  out.target_map = k0_induced(functor, out.source_assembly.target, out.target_assembly.target).map;
  out.commutes = maps_agree(compose(out.target_map, out.source_assembly.map),
                            compose(out.target_assembly.map, out.source_map));
  return out;
}

}  // namespace kring
