#include <array>
#include <random>

#include "doctest.h"
#include "kring/additive.hpp"
#include "kring/catalog.hpp"

using namespace kring;

namespace {

// Two objects, every hom-group F2, composition multiplication: F2 on the
// indiscrete groupoid with two objects.
FiniteRingoid codiscrete_f2() {
  FiniteRingoid r("codiscrete", {"p", "q"});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) r.set_hom(a, b, FinAbGroup({2}));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) r.set_constant(a, b, c, 0, 0, {1});
  r.set_identities({{1}, {1}});
  return r;
}

// Plain 2x2 matrices over Z/n written as flat vectors, for oracles.
using M2 = std::array<int, 4>;
M2 mul(const M2& y, const M2& x, int n) {
  return {(y[0] * x[0] + y[1] * x[2]) % n, (y[0] * x[1] + y[1] * x[3]) % n,
          (y[2] * x[0] + y[3] * x[2]) % n, (y[2] * x[1] + y[3] * x[3]) % n};
}

MatMorphism random_morphism(const AdditiveView& v, const ObjSum& a, const ObjSum& b,
                            std::mt19937& rng) {
  FinAbGroup g = v.hom(a, b);
  std::uint64_t n = g.order();
  return v.from_elem(a, b, g.element_at(rng() % n));
}

}  // namespace

TEST_CASE("hom-set cardinalities over F2") {
  AdditiveView v(share(cyclic_ring(2)));
  CHECK(v.hom({0}, {0}).order() == 2);
  CHECK(v.hom({0, 0}, {0, 0}).order() == 16);
  CHECK(v.hom({}, {0, 0}).order() == 1);
}

TEST_CASE("biproduct equations hold for all sums up to length 3") {
  for (std::int64_t n : {2, 4}) {
    AdditiveView v(share(cyclic_ring(n)));
    auto sums = sums_up_to(1, 3);
    for (const auto& a : sums)
      for (const auto& b : sums) {
        Biproduct bp = v.biproduct(a, b);
        CHECK(v.check_biproduct(bp));
      }
  }
  AdditiveView v(share(codiscrete_f2()));
  for (const auto& a : sums_up_to(2, 2))
    for (const auto& b : sums_up_to(2, 2)) CHECK(v.check_biproduct(v.biproduct(a, b)));
}

TEST_CASE("biproduct needs identities") {
  AdditiveView v(share(zero_moduloid({"a"}, share(cyclic_ring(2)))));
  CHECK_THROWS_AS(v.identity({0}), StructuralError);
  CHECK(v.hom({0}, {0, 0}).order() == 1);
}

TEST_CASE("matrix composition matches the 2x2 oracle over Z/4") {
  AdditiveView v(share(cyclic_ring(4)));
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    MatMorphism x = random_morphism(v, {0, 0}, {0, 0}, rng);
    MatMorphism y = random_morphism(v, {0, 0}, {0, 0}, rng);
    M2 xm{int(x.at(0, 0)[0]), int(x.at(0, 1)[0]), int(x.at(1, 0)[0]), int(x.at(1, 1)[0])};
    M2 ym{int(y.at(0, 0)[0]), int(y.at(0, 1)[0]), int(y.at(1, 0)[0]), int(y.at(1, 1)[0])};
    M2 z = mul(ym, xm, 4);
    MatMorphism c = v.compose(y, x);
    CHECK(c.at(0, 0)[0] == z[0]);
    CHECK(c.at(0, 1)[0] == z[1]);
    CHECK(c.at(1, 0)[0] == z[2]);
    CHECK(c.at(1, 1)[0] == z[3]);
  }
}

TEST_CASE("matrix composition is associative and bilinear") {
  AdditiveView v(share(codiscrete_f2()));
  std::mt19937 rng(2);
  ObjSum a{0, 1}, b{1}, c{0, 0, 1}, d{1, 0};
  for (int t = 0; t < 40; ++t) {
    auto x = random_morphism(v, a, b, rng);
    auto x2 = random_morphism(v, a, b, rng);
    auto y = random_morphism(v, b, c, rng);
    auto z = random_morphism(v, c, d, rng);
    CHECK(v.compose(z, v.compose(y, x)) == v.compose(v.compose(z, y), x));
    CHECK(v.compose(y, v.add(x, x2)) == v.add(v.compose(y, x), v.compose(y, x2)));
  }
}

TEST_CASE("isomorphism search examples over F2") {
  AdditiveView v(share(cyclic_ring(2)));
  auto r = v.find_isomorphism({0}, {0});
  REQUIRE(r.status == IsoStatus::kFound);
  CHECK(*r.forward == v.identity({0}));
  CHECK(v.find_isomorphism({0}, {0, 0}).status == IsoStatus::kNone);
  auto sw = v.find_isomorphism({0, 0}, {0, 0});
  REQUIRE(sw.status == IsoStatus::kFound);
  CHECK(v.compose(*sw.inverse, *sw.forward) == v.identity({0, 0}));
  CHECK(v.compose(*sw.forward, *sw.inverse) == v.identity({0, 0}));
}

TEST_CASE("no 1x2 and 2x1 inverse pair exists over F2 (brute force)") {
  int pairs = 0;
  for (int u = 0; u < 4; ++u)
    for (int w = 0; w < 4; ++w) {
      // u: (x) -> (x,x) column (u0,u1); w: (x,x) -> (x) row (w0,w1).
      int u0 = u >> 1, u1 = u & 1, w0 = w >> 1, w1 = w & 1;
      bool wu = ((w0 * u0 + w1 * u1) % 2) == 1;
      bool uw = (u0 * w0 == 1) && (u0 * w1 == 0) && (u1 * w0 == 0) && (u1 * w1 == 1);
      if (wu && uw) ++pairs;
    }
  CHECK(pairs == 0);
}

TEST_CASE("the witness is the lexicographically least invertible matrix") {
  for (int n : {2, 3}) {
    AdditiveView v(share(cyclic_ring(n)));
    auto r = v.find_isomorphism({0, 0}, {0, 0});
    REQUIRE(r.status == IsoStatus::kFound);
    // Oracle: scan all 2x2 matrices in entry order for one with nonzero
    // determinant mod the prime n.
    M2 least{};
    bool found = false;
    for (int i = 0; i < n * n * n * n && !found; ++i) {
      M2 m{(i / (n * n * n)) % n, (i / (n * n)) % n, (i / n) % n, i % n};
      if (((m[0] * m[3] - m[1] * m[2]) % n + n) % n != 0) {
        least = m;
        found = true;
      }
    }
    const auto& f = *r.forward;
    CHECK(M2{int(f.at(0, 0)[0]), int(f.at(0, 1)[0]), int(f.at(1, 0)[0]), int(f.at(1, 1)[0])} ==
          least);
  }
}

TEST_CASE("isomorphism search is symmetric and thread independent") {
  AdditiveView v(share(codiscrete_f2()));
  auto sums = sums_up_to(2, 2);
  for (const auto& a : sums)
    for (const auto& b : sums) {
      auto ab = v.find_isomorphism(a, b);
      auto ba = v.find_isomorphism(b, a);
      CHECK((ab.status == IsoStatus::kFound) == (ba.status == IsoStatus::kFound));
      auto par = v.find_isomorphism(a, b, Limits{std::uint64_t{1} << 20, 4});
      CHECK(par.status == ab.status);
      CHECK(par.forward == ab.forward);
    }
  AdditiveView m(share(matrix_ring(cyclic_ring(2), 2)));
  auto one = m.find_isomorphism({0, 0}, {0, 0}, Limits{std::uint64_t{1} << 20, 1});
  auto four = m.find_isomorphism({0, 0}, {0, 0}, Limits{std::uint64_t{1} << 20, 4});
  REQUIRE(one.status == IsoStatus::kFound);
  CHECK(one.forward == four.forward);
}

TEST_CASE("ceiling produces undecided, permutations stay decided") {
  AdditiveView v(share(codiscrete_f2()));
  Limits tight{1, 1};
  CHECK(v.find_isomorphism({0}, {1}, tight).status == IsoStatus::kUndecided);
  CHECK(v.find_isomorphism({0}, {1}).status == IsoStatus::kFound);
  auto p = v.find_isomorphism({0, 1}, {1, 0}, tight);
  CHECK(p.status == IsoStatus::kFound);
  CHECK(p.by_permutation);
  CHECK(v.find_isomorphism({0}, {0, 1}, tight).status == IsoStatus::kNone);
}

TEST_CASE("iso class tables") {
  AdditiveView f2(share(cyclic_ring(2)));
  auto t = iso_class_table(f2, 3);
  REQUIRE(t.size() == 4);
  CHECK(t.decided());
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(t.representatives[i].size() == i);
    for (std::size_t j = 0; j < 4; ++j) {
      if (i + j <= 3)
        CHECK(t.oplus[i][j] == i + j);
      else
        CHECK_FALSE(t.oplus[i][j].has_value());
    }
  }

  AdditiveView pp(share(product_ring(cyclic_ring(2), cyclic_ring(2))));
  CHECK(iso_class_table(pp, 2).size() == 3);

  AdditiveView zero(share(zero_ring()));
  auto z = iso_class_table(zero, 2);
  CHECK(z.size() == 1);
  CHECK(z.representatives[0].empty());

  AdditiveView cd(share(codiscrete_f2()));
  auto c = iso_class_table(cd, 3);
  CHECK(c.size() == 4);
  for (const auto& [s, k] : c.class_of) CHECK(c.representatives[k].size() == s.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) CHECK(c.oplus[i][j] == c.oplus[j][i]);
}

TEST_CASE("completed functor is entrywise and functorial") {
  auto z4 = share(cyclic_ring(4));
  auto f2 = share(cyclic_ring(2));
  RingoidHom red(z4, f2, {0});
  red.set_image(0, 0, 0, {1});
  auto fz = map_completion(red);
  AdditiveView v4(z4);
  AdditiveView v2(f2);
  std::mt19937 rng(8);
  for (int t = 0; t < 10; ++t) {
    auto x = random_morphism(v4, {0, 0}, {0, 0}, rng);
    auto y = random_morphism(v4, {0, 0}, {0, 0}, rng);
    auto fx = fz.apply(x);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(fx.at(i, j)[0] == x.at(i, j)[0] % 2);
    CHECK(fz.apply(v4.compose(y, x)) == v2.compose(fz.apply(y), fz.apply(x)));
  }
  auto id = map_completion(identity_hom(z4));
  auto x = random_morphism(v4, {0}, {0, 0}, rng);
  CHECK(id.apply(x) == x);
  // (G o F) applied equals G applied after F.
  auto both = map_completion(compose(identity_hom(f2), red));
  for (int t = 0; t < 10; ++t) {
    auto m = random_morphism(v4, {0, 0}, {0}, rng);
    CHECK(both.apply(m) == map_completion(identity_hom(f2)).apply(fz.apply(m)));
  }
}
