#include <set>

#include "doctest.h"
#include "kring/catalog.hpp"
#include "kring/constructions.hpp"
#include "kring/ktheory.hpp"
#include "support/oracles.hpp"

using namespace kring;

namespace {

RingoidPtr ring(std::int64_t n) { return share(cyclic_ring(n)); }
RingoidPtr over_itself(std::int64_t n) { return share(self_scalar(cyclic_ring(n))); }

RingoidHom reduction(RingoidPtr from, RingoidPtr to) {
  RingoidHom f(from, to, {0});
  f.set_image(0, 0, 0, {1});
  return f;
}

Ideal principal(RingoidPtr m, Elem g) {
  Ideal j = zero_ideal(m);
  j.generators[0] = {std::move(g)};
  return j;
}

std::vector<Integer> ints(std::initializer_list<long long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("bounded K0 of small rings") {
  auto f2 = k0_bounded(ring(2), 3);
  CHECK(f2.group.to_string() == "Z");
  CHECK(f2.stabilized);
  CHECK(f2.decided());
  // Over a field only equal lengths are isomorphic: one class per length.
  CHECK(f2.table.size() == 4);

  auto m2 = k0_bounded(share(matrix_ring(cyclic_ring(2), 2)), 2);
  CHECK(m2.group.to_string() == "Z");

  auto zero = k0_bounded(share(zero_ring()), 2);
  CHECK(zero.group.is_trivial());
  CHECK(zero.table.size() == 1);
  CHECK(zero.stabilized);

  auto z4 = k0_bounded(ring(4), 3);
  CHECK(z4.group.to_string() == "Z");

  auto two = k0_bounded(share(scalar_ringoid({"a", "b"}, ring(2))), 2);
  CHECK(two.group.to_string() == "Z^2");
}

TEST_CASE("bounded K0 identifies isomorphic objects") {
  // Transport groupoid of a free C2-orbit: both objects are isomorphic.
  GSet free = GSet::regular(FinGroup::cyclic(2));
  auto rx = share(group_ringoid(transport_groupoid(free), ring(2)));
  auto k = k0_bounded(rx, 2);
  CHECK(k.group.to_string() == "Z");
  std::vector<Integer> a = {1, 0}, b = {0, 1};
  CHECK(k.group.equal_elements(a, b));
}

TEST_CASE("bounded K0 relations grow with the bound") {
  for (auto r : {ring(2), share(zero_ring()), share(product_ring(cyclic_ring(2), cyclic_ring(3)))}) {
    auto lo = k0_bounded(r, 1);
    auto hi = k0_bounded(r, 3);
    for (std::size_t i = 0; i < lo.relations.rows(); ++i) CHECK(hi.group.is_zero(lo.relations.row(i)));
  }
  // Z/6 = F2 x F3 is a product ring: still only free classes at this bound.
  CHECK(k0_bounded(share(product_ring(cyclic_ring(2), cyclic_ring(3))), 3).group.to_string() == "Z");
}

TEST_CASE("ceiling produces an undecided K0") {
  Limits tiny;
  tiny.ceiling = 4;
  // Different lengths never reach the search.
  CHECK(k0_bounded(ring(3), 2, tiny).decided());
  // The two objects of a free orbit are isomorphic, but Hom(a, b) is above
  // this ceiling and {a}, {b} are not permutations of each other.
  tiny.ceiling = 1;
  auto rx = share(group_ringoid(transport_groupoid(GSet::regular(FinGroup::cyclic(2))), ring(2)));
  auto k = k0_bounded(rx, 1, tiny);
  CHECK_FALSE(k.decided());
  CHECK(k.group.to_string() == "Z^2");
}

TEST_CASE("induced maps on K0") {
  auto z4 = ring(4), z2 = ring(2);
  auto k4 = k0_bounded(z4, 2), k2 = k0_bounded(z2, 2);
  auto id = k0_induced(identity_hom(z4), k4, k4);
  CHECK(id.consistent);
  CHECK(id.map.matrix == IntMatrix::identity(1));
  auto red = k0_induced(reduction(z4, z2), k4, k2);
  CHECK(red.consistent);
  CHECK(red.map.matrix == IntMatrix{{1}});
  CHECK(is_isomorphism(red.map));

  // Composition: Z/8 -> Z/4 -> Z/2.
  auto z8 = ring(8);
  auto k8 = k0_bounded(z8, 2);
  auto f = reduction(z8, z4), g = reduction(z4, z2);
  auto gf = k0_induced(compose(g, f), k8, k2);
  auto prod = oracle::multiply(k0_induced(f, k8, k4).map.matrix, k0_induced(g, k4, k2).map.matrix);
  CHECK(gf.map.matrix == prod);

  // F2 -> M2(F2), x -> x I, sends the rank-one class to the rank-one class.
  auto m2 = share(matrix_ring(cyclic_ring(2), 2));
  RingoidHom diag(z2, m2, {0});
  Elem e(m2->hom(0, 0).generator_count(), 0);
  e[0] = 1;
  e[3] = 1;
  diag.set_image(0, 0, 0, e);
  REQUIRE(validate_hom(diag).clean());
  auto km = k0_bounded(m2, 2);
  auto d = k0_induced(diag, k0_bounded(z2, 2), km);
  CHECK(d.consistent);
  CHECK(d.map.matrix == IntMatrix{{1}});
}

TEST_CASE("induced map detects a relation lost at the bound") {
  // The zero ring has (a) = 0; the identity-on-objects map into F2 cannot
  // respect it, so the diagnostic fires.
  auto zero = share(zero_ring());
  auto f2 = ring(2);
  auto kz = k0_bounded(zero, 2);
  auto kf = k0_bounded(f2, 2);
  RingoidHom to_zero(f2, zero, {0});
  to_zero.set_image(0, 0, 0, {});
  CHECK(k0_induced(to_zero, kf, kz).consistent);
  RingoidHom from_zero(zero, f2, {0});
  auto bad = k0_induced(from_zero, kz, kf);
  CHECK_FALSE(bad.consistent);
  CHECK(bad.diagnostic.find("inconsistent at bound") != std::string::npos);
}

TEST_CASE("relative K0") {
  auto zm = zero_moduloid({"a"}, ring(2));
  CHECK(k0_relative(zm, 2).group().is_trivial());

  FiniteRingoid two("(2)", {"a"});
  two.set_hom(0, 0, FinAbGroup({2}));
  two.set_scalar_ring(ring(4));
  two.set_action(0, 0, 0, 0, {1});
  auto rel = k0_relative(two, 2);
  CHECK(rel.plus.group.to_string() == "Z");
  CHECK(is_isomorphism(rel.projection));
  CHECK(rel.group().is_trivial());

  // F2 over itself: F2+ is isomorphic to F2 x F2, whose bounded K0 only sees
  // free modules, so the kernel is 0 rather than K0(F2).
  auto f2 = self_scalar(cyclic_ring(2));
  auto rf = k0_relative(f2, 2);
  auto product = k0_bounded(share(product_ring(cyclic_ring(2), cyclic_ring(2))), 2);
  CHECK(rf.plus.group == product.group);
  CHECK(rf.group().is_trivial());
  CHECK_FALSE(rf.group() == k0_bounded(ring(2), 2).group);
}

TEST_CASE("cofinality of sums of length at least two") {
  for (std::int64_t n : {2, 4}) {
    auto rep = cofinality_check(ring(n), 4);
    CHECK(rep.cofinal);
    CHECK(rep.well_defined);
    CHECK(rep.sub.to_string() == "Z");
    CHECK(rep.isomorphism);
  }
  auto zero = cofinality_check(share(zero_ring()), 4);
  CHECK(zero.sub.is_trivial());
  CHECK(zero.isomorphism);

  auto two = cofinality_check(share(scalar_ringoid({"a", "b"}, ring(2))), 4);
  CHECK(two.full.group.to_string() == "Z^2");
  CHECK(two.isomorphism);
}

TEST_CASE("cofinality generators for F2 at bound 4") {
  auto rep = cofinality_check(ring(2), 4);
  // Classes 0, 2, 3, 4 inside the bound, then formal sums of length 5..8.
  REQUIRE(rep.sub_generators.size() == 8);
  CHECK(rep.sub_generators[0].empty());
  CHECK(rep.sub_generators[1].size() == 2);
  CHECK(rep.sub_generators[4].size() == 5);
  // 3[x,x] = 2[x,x,x] through the formal sum of length 6.
  std::vector<Integer> six_a(8, 0), six_b(8, 0);
  six_a[1] = 3;
  six_b[2] = 2;
  CHECK(rep.sub.equal_elements(six_a, six_b));
}

TEST_CASE("degree-zero fibration sequences") {
  auto z4 = over_itself(4);
  auto two = fibration_check(principal(z4, {2}), 2);
  CHECK(two.homs_valid);
  CHECK(two.ideal.group().is_trivial());
  CHECK(two.middle.group.to_string() == "Z");
  CHECK(two.quotient.group.to_string() == "Z");
  CHECK(is_injective(two.right));
  CHECK(two.composite_zero);
  CHECK(two.exact);

  auto zero = fibration_check(zero_ideal(z4), 2);
  CHECK(zero.ideal.group().is_trivial());
  CHECK(is_isomorphism(zero.right));
  CHECK(zero.exact);

  // Improper ideal: M/J = 0 and exactness would need K0(J) -> K0(M) onto.
  // The bounded K0 of J+ sees no idempotent classes, so K0(J) comes out 0.
  auto all = fibration_check(improper_ideal(z4), 2);
  CHECK(all.homs_valid);
  CHECK(all.quotient.group.is_trivial());
  CHECK(all.composite_zero);
  CHECK(all.ideal.group().is_trivial());
  CHECK_FALSE(is_surjective(all.left));
  CHECK_FALSE(all.exact);
}

TEST_CASE("GL groups against brute force") {
  for (auto [p, n] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    AdditiveView v(ring(p));
    GLGroup g = gl(v, ObjSum(n, 0));
    auto oracle_group = oracle::general_linear(n, p);
    CAPTURE(p);
    CAPTURE(n);
    CHECK(g.group.order() == oracle_group.size());
    CHECK(g.group.is_associative());
    std::size_t ab = oracle_group.size() / oracle::commutator_subgroup_order(oracle_group, n, p);
    CHECK(abelianize(g.group).group.order() == ab);
  }
  AdditiveView v(ring(2));
  CHECK(gl(v, {}).group.order() == 1);
  CHECK_FALSE(gl(v, {0, 0}).group.is_abelian());
}

TEST_CASE("GL respects the ceiling") {
  AdditiveView v(ring(2));
  Limits tiny;
  tiny.ceiling = 256;
  CHECK_THROWS_AS(gl(v, {0, 0, 0}, tiny), std::length_error);
  auto k1 = k1_bounded(ring(2), 3, tiny);
  CHECK(k1.reached == 2);
  CHECK(k1.abelianizations.size() == 2);
}

TEST_CASE("bounded K1 over F2 and F3") {
  auto k2 = k1_bounded(ring(2), 3);
  REQUIRE(k2.abelianizations.size() == 3);
  CHECK(k2.abelianizations[0].is_trivial());
  CHECK(k2.abelianizations[1].to_string() == "Z/2");
  CHECK(k2.abelianizations[2].is_trivial());
  CHECK(k2.orders == std::vector<std::size_t>{1, 6, 168});
  CHECK(k2.embeddings_valid);
  REQUIRE(k2.stabilization.size() == 2);
  CHECK(is_surjective(k2.stabilization[1]));
  CHECK_FALSE(k2.stabilized);

  auto k3 = k1_bounded(ring(3), 2);
  REQUIRE(k3.abelianizations.size() == 2);
  CHECK(k3.abelianizations[0].to_string() == "Z/2");
  CHECK(k3.abelianizations[1].to_string() == "Z/2");
  CHECK(k3.orders == std::vector<std::size_t>{2, 48});
  CHECK(is_surjective(k3.stabilization[0]));
  CHECK(k3.stabilized);
}

TEST_CASE("determinant onto the units") {
  CHECK(determinant_surjective(ring(2), 3));
  CHECK(determinant_surjective(ring(3), 2));
  CHECK(determinant_surjective(ring(4), 2));
  CHECK(determinant_surjective(ring(5), 1));
}

TEST_CASE("exterior products") {
  auto f2 = ring(2);
  auto t = share(tensor(*f2, *f2));
  auto ex = exterior_product(k0_bounded(f2, 2), k0_bounded(f2, 2), k0_bounded(t, 2));
  CHECK(ex.well_defined);
  CHECK(ex.target.to_string() == "Z");
  for (long long x = -3; x <= 3; ++x)
    for (long long y = -3; y <= 3; ++y) CHECK(ex.evaluate(ints({x}), ints({y})) == ints({x * y}));

  auto zero = share(zero_ring());
  auto tz = share(tensor(*f2, *zero));
  auto ez = exterior_product(k0_bounded(f2, 2), k0_bounded(zero, 2), k0_bounded(tz, 2));
  CHECK(ez.well_defined);
  CHECK(ez.target.is_trivial());

  auto t23 = share(tensor(cyclic_ring(2), cyclic_ring(3)));
  auto e23 = exterior_product(k0_bounded(ring(2), 2), k0_bounded(ring(3), 2), k0_bounded(t23, 2));
  CHECK(e23.well_defined);
  CHECK(e23.target.is_trivial());
  CHECK(e23.target.is_zero(e23.evaluate(ints({1}), ints({1}))));
}

TEST_CASE("exterior product on two-object ringoids is bilinear") {
  auto d = share(scalar_ringoid({"a", "b"}, ring(2)));
  auto t = share(tensor(*d, *d));
  auto ex = exterior_product(k0_bounded(d, 2), k0_bounded(d, 2), k0_bounded(t, 2));
  CHECK(ex.well_defined);
  CHECK(ex.target.to_string() == "Z^4");
  auto x = ints({2, -1}), y = ints({1, 3}), z = ints({0, 5});
  auto lhs = ex.evaluate(x, ints({1, 8}));
  auto a = ex.evaluate(x, y), b = ex.evaluate(x, z);
  for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(lhs[k] == a[k] + b[k]);
}
