#include "doctest.h"
#include "kring/assembly.hpp"
#include "kring/catalog.hpp"

using namespace kring;

namespace {

RingoidPtr ring(std::int64_t n) { return share(cyclic_ring(n)); }

const FinGroup& c2() {
  static const FinGroup g = FinGroup::cyclic(2);
  return g;
}

}  // namespace

TEST_CASE("assembly for the trivial group is the identity") {
  auto a = assembly_zero(FinGroupoid::from_group(FinGroup::cyclic(1)), ring(2), 3);
  CHECK(a.components.size() == 1);
  CHECK(a.source.to_string() == "Z");
  CHECK(a.target.group.to_string() == "Z");
  CHECK(a.map.matrix == IntMatrix{{1}});
  CHECK(a.well_defined);
  CHECK(a.isomorphism);
  CHECK(a.decided());
}

TEST_CASE("assembly for C2 over F2") {
  auto a = assembly_zero(FinGroupoid::from_group(c2()), ring(2), 3);
  // F2[C2] is local: free classes are determined by rank.
  CHECK(a.target.group.to_string() == "Z");
  CHECK(a.target.table.size() == 4);
  CHECK(a.isomorphism);
}

TEST_CASE("assembly for a discrete two-object groupoid") {
  auto a = assembly_zero(FinGroupoid::discrete({"p", "q"}), ring(2), 2);
  CHECK(a.components.size() == 2);
  CHECK(a.source.to_string() == "Z^2");
  CHECK(a.target.group.to_string() == "Z^2");
  CHECK(a.map.matrix == IntMatrix::identity(2));
  CHECK(a.isomorphism);
}

TEST_CASE("assembly for S3 over F2") {
  auto a = assembly_zero(FinGroupoid::from_group(FinGroup::symmetric(3)), ring(2), 2);
  CHECK(a.source.to_string() == "Z");
  CHECK(a.well_defined);
  CHECK(a.decided());
}

TEST_CASE("equivariant assembly on orbits") {
  GSet point = GSet::point(c2());
  auto ap = equivariant_assembly_zero(point, ring(2), 3);
  CHECK(ap.inclusions_valid);
  REQUIRE(ap.summands.size() == 1);
  // Source computed independently as K0(F2[C2]).
  auto direct = k0_bounded(share(group_ringoid(FinGroupoid::from_group(c2()), ring(2))), 3);
  CHECK(ap.summands[0].group == direct.group);
  CHECK(ap.map.matrix == IntMatrix{{1}});
  CHECK(ap.isomorphism);

  GSet free = GSet::regular(c2());
  auto af = equivariant_assembly_zero(free, ring(2), 3);
  CHECK(af.inclusions_valid);
  CHECK(af.summands[0].group.to_string() == "Z");
  CHECK(af.components[0].vertex_group.order() == 1);
  CHECK(af.target.group.to_string() == "Z");
  CHECK(af.map.matrix == IntMatrix{{1, 0}});
  CHECK(af.isomorphism);

  GSet both = GSet::disjoint_union(point, free);
  auto ab = equivariant_assembly_zero(both, ring(2), 2);
  CHECK(ab.components.size() == 2);
  CHECK(ab.source.to_string() == "Z^2");
  CHECK(ab.target.group.to_string() == "Z^2");
  CHECK(ab.isomorphism);
  CHECK(ab.inclusions_valid);
}

TEST_CASE("naturality squares") {
  GSet free = GSet::regular(c2());
  GSet point = GSet::point(c2());
  GSet two = GSet::disjoint_union(free, free);

  GMap id{&free, &free, {0, 1}};
  auto ri = naturality_check(id, ring(2), 2);
  CHECK(ri.equivariant);
  CHECK(ri.functor_valid);
  CHECK(ri.commutes);
  CHECK(ri.target_map.matrix == IntMatrix::identity(2));

  GMap fold{&two, &free, {0, 1, 0, 1}};
  auto rf = naturality_check(fold, ring(2), 2);
  CHECK(rf.equivariant);
  CHECK(rf.functor_valid);
  CHECK(rf.source_map.matrix == IntMatrix{{1}, {1}});
  CHECK(rf.commutes);

  GMap proj{&free, &point, {0, 0}};
  auto rp = naturality_check(proj, ring(2), 2);
  CHECK(rp.equivariant);
  CHECK(rp.functor_valid);
  CHECK(rp.source_map.matrix == IntMatrix{{1}});
  CHECK(rp.commutes);

  GMap bad{&point, &free, {0}};
  CHECK_FALSE(naturality_check(bad, ring(2), 2).equivariant);
}
