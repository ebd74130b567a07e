#include <random>

#include "doctest.h"
#include "kring/catalog.hpp"
#include "kring/ringoid.hpp"

using namespace kring;

namespace {

// Two-generator Z/2 x Z/2 with g0 g0 = g1 and g0 g1 = g0, everything else 0.
FiniteRingoid nonassociative() {
  FiniteRingoid r("bad", {"*"});
  r.set_hom(0, 0, FinAbGroup({2, 2}));
  r.set_constant(0, 0, 0, 0, 0, {0, 1});
  r.set_constant(0, 0, 0, 1, 0, {1, 0});
  return r;
}

FiniteRingoid ideal_two_in_z4() {
  auto z4 = share(cyclic_ring(4));
  FiniteRingoid m("(2)", {"*"});
  m.set_hom(0, 0, FinAbGroup({2}));
  m.set_scalar_ring(z4);
  m.set_action(0, 0, 0, 0, {1});
  return m;
}

}  // namespace

TEST_CASE("catalog rings validate clean") {
  CHECK(validate(cyclic_ring(2)).clean());
  CHECK(validate(cyclic_ring(3)).clean());
  CHECK(validate(cyclic_ring(4)).clean());
  CHECK(validate(zero_ring()).clean());
  CHECK(validate(matrix_ring(cyclic_ring(2), 2)).clean());
  CHECK(validate(product_ring(cyclic_ring(2), cyclic_ring(2))).clean());
  CHECK(validate(self_scalar(cyclic_ring(4))).clean());
  CHECK(validate(ideal_two_in_z4()).clean());
  CHECK(is_commutative_ring(cyclic_ring(4)));
  CHECK_FALSE(is_commutative_ring(matrix_ring(cyclic_ring(2), 2)));
}

TEST_CASE("F2 multiplication is AND") {
  FiniteRingoid f2 = cyclic_ring(2);
  CHECK(f2.compose(0, 0, 0, {1}, {1}) == Elem{1});
  CHECK(f2.compose(0, 0, 0, {0}, {1}) == Elem{0});
  CHECK(f2.compose(0, 0, 0, {1}, {0}) == Elem{0});
}

TEST_CASE("associativity violation is witnessed") {
  auto rep = validate(nonassociative());
  REQUIRE(rep.has(Axiom::kAssociativity));
  const Violation* v = rep.first(Axiom::kAssociativity);
  CHECK(v->generators.size() == 3);
  // Independent check of the witness on the generators it names.
  FiniteRingoid r = nonassociative();
  const FinAbGroup& h = r.hom(0, 0);
  Elem x = h.generator(v->generators[0]), y = h.generator(v->generators[1]),
       z = h.generator(v->generators[2]);
  CHECK(r.compose(0, 0, 0, r.compose(0, 0, 0, z, y), x) !=
        r.compose(0, 0, 0, z, r.compose(0, 0, 0, y, x)));
  CHECK_FALSE(rep.has(Axiom::kBilinearity));
}

TEST_CASE("bilinearity violation is witnessed") {
  FiniteRingoid r("bad", {"*"});
  r.set_hom(0, 0, FinAbGroup({2, 4}));
  r.set_constant(0, 0, 0, 0, 0, {0, 1});
  auto rep = validate(r);
  REQUIRE(rep.has(Axiom::kBilinearity));
  CHECK(rep.first(Axiom::kBilinearity)->generators == std::vector<std::size_t>{0, 0});
}

TEST_CASE("bad identity is witnessed") {
  FiniteRingoid r = cyclic_ring(2);
  r.set_identities({{0}});
  auto rep = validate(r);
  CHECK(rep.has(Axiom::kIdentity));
  CHECK_FALSE(rep.has(Axiom::kAssociativity));
}

TEST_CASE("module axiom failures") {
  FiniteRingoid m = self_scalar(cyclic_ring(4));
  m.set_action(0, 0, 0, 0, {2});
  auto rep = validate(m);
  CHECK(rep.has(Axiom::kModule));
}

TEST_CASE("scalar ring must be commutative") {
  FiniteRingoid m = cyclic_ring(2);
  m.set_scalar_ring(share(matrix_ring(cyclic_ring(2), 2)));
  CHECK(validate(m).has(Axiom::kScalarRing));
}

TEST_CASE("structural errors are exceptions") {
  FiniteRingoid r = cyclic_ring(2);
  CHECK_THROWS_AS(r.set_constant(0, 0, 0, 1, 0, {1}), StructuralError);
  CHECK_THROWS_AS(r.set_constant(0, 0, 0, 0, 0, {2}), StructuralError);
  CHECK_THROWS_AS(r.hom(0, 1), StructuralError);
  auto f2 = share(cyclic_ring(2));
  CHECK_THROWS_AS(RingoidHom(f2, f2, {1}), StructuralError);
}

TEST_CASE("ringoid homomorphisms") {
  auto f2 = share(cyclic_ring(2));
  auto z4 = share(cyclic_ring(4));
  CHECK(validate_hom(identity_hom(f2)).clean());

  RingoidHom red(z4, f2, {0});
  red.set_image(0, 0, 0, {1});
  CHECK(validate_hom(red).clean());

  RingoidHom twice(z4, z4, {0});
  twice.set_image(0, 0, 0, {2});
  auto rep = validate_hom(twice);
  REQUIRE(rep.has(Axiom::kMultiplicativity));
  // 2(1*1) = 2 but (2*1)(2*1) = 0.
  CHECK(twice.apply(0, 0, z4->compose(0, 0, 0, {1}, {1})) == Elem{2});
  CHECK(z4->compose(0, 0, 0, twice.apply(0, 0, {1}), twice.apply(0, 0, {1})) == Elem{0});

  // Z/2 -> Z/4, 1 -> 1 is not additive.
  RingoidHom lift(f2, z4, {0});
  lift.set_image(0, 0, 0, {1});
  CHECK(validate_hom(lift).has(Axiom::kAdditivity));

  CHECK(validate_hom(compose(red, identity_hom(z4))).clean());
  CHECK(validate_hom(compose(identity_hom(f2), red)).clean());
}

TEST_CASE("zero moduloid") {
  auto f2 = share(cyclic_ring(2));
  FiniteRingoid one = zero_moduloid({"a"}, f2);
  CHECK(one.hom(0, 0).order() == 1);
  CHECK_FALSE(one.unital());
  CHECK(validate(one).clean());
  FiniteRingoid two = zero_moduloid({"a", "b"}, share(cyclic_ring(4)));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(two.hom(a, b).order() == 1);
  CHECK(validate(two).clean());
}

TEST_CASE("generator-level validation agrees with element-level brute force") {
  std::mt19937 rng(424242);
  int failing = 0;
  for (int t = 0; t < 60; ++t) {
    FiniteRingoid r("rand", {"*"});
    r.set_hom(0, 0, FinAbGroup({2, 2}));
    std::int64_t c[2][2][2];
    for (auto& a : c)
      for (auto& b : a)
        for (auto& x : b) x = static_cast<std::int64_t>(rng() % 2);
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q) r.set_constant(0, 0, 0, p, q, {c[p][q][0], c[p][q][1]});
    // Reference product, written out from the constants.
    auto mul = [&](const Elem& y, const Elem& x) {
      Elem out{0, 0};
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
          for (int k = 0; k < 2; ++k) out[k] = (out[k] + x[p] * y[q] * c[p][q][k]) % 2;
      return out;
    };
    bool assoc = true;
    std::vector<Elem> all{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (auto& x : all)
      for (auto& y : all)
        for (auto& z : all)
          if (mul(mul(z, y), x) != mul(z, mul(y, x))) assoc = false;
    CHECK(validate(r).clean() == assoc);
    if (!assoc) ++failing;
  }
  CHECK(failing > 0);
}

TEST_CASE("matrix ring multiplication matches matrix product") {
  FiniteRingoid m = matrix_ring(cyclic_ring(2), 2);
  // Coordinates are entries (0,0),(0,1),(1,0),(1,1).
  Elem a{1, 1, 0, 1}, b{1, 0, 1, 1};
  // compose(y, x) = y x; a b = [[1,1],[0,1]] [[1,0],[1,1]] = [[0,1],[1,1]].
  CHECK(m.compose(0, 0, 0, a, b) == Elem{0, 1, 1, 1});
  CHECK(m.compose(0, 0, 0, b, a) == Elem{1, 1, 1, 0});
}
