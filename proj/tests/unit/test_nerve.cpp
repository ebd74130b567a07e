#include <random>
#include <set>

#include "doctest.h"
#include "kring/catalog.hpp"
#include "kring/constructions.hpp"
#include "kring/nerve.hpp"

using namespace kring;

namespace {

RingoidPtr ring(std::int64_t n) { return share(cyclic_ring(n)); }

RingoidPtr f2_c2() {
  return share(group_ringoid(FinGroupoid::from_group(FinGroup::cyclic(2)), ring(2)));
}

// Number of n-tuples of sums with total length <= bound over k objects:
// sum over t of k^t * C(t + n - 1, n - 1).
std::uint64_t tuple_count(std::uint64_t k, std::uint64_t n, std::uint64_t bound) {
  if (n == 0) return 1;
  auto choose = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::uint64_t total = 0, power = 1;
  for (std::uint64_t t = 0; t <= bound; ++t, power *= k) total += power * choose(t + n - 1, n - 1);
  return total;
}

Word random_word(std::mt19937& rng, std::size_t gens, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    auto g = static_cast<std::int64_t>(rng() % gens) + 1;
    w.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

}  // namespace

TEST_CASE("faces and degeneracies on tuples") {
  const ObjSum a{0}, b{1}, c{0, 1};
  CHECK(face(NerveTuple{a, b}, 1) == NerveTuple{ObjSum{0, 1}});
  CHECK(face(NerveTuple{a, b}, 0) == NerveTuple{b});
  CHECK(face(NerveTuple{a, b}, 2) == NerveTuple{a});
  CHECK(degeneracy(NerveTuple{}, 0) == NerveTuple{ObjSum{}});
  CHECK(degeneracy(NerveTuple{a, b}, 1) == NerveTuple{a, ObjSum{}, b});
  NerveTuple abc{a, b, c};
  CHECK(face(face(abc, 2), 0) == face(face(abc, 0), 1));
  CHECK(face(face(abc, 2), 0) == NerveTuple{ObjSum{1, 0, 1}});
  CHECK_THROWS(face(NerveTuple{}, 0));
}

TEST_CASE("nerve levels enumerate every tuple within the bound") {
  AdditiveView f2(ring(2));
  AdditiveView two(share(scalar_ringoid({"a", "b"}, ring(2))));
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t bound = 0; bound <= 3; ++bound) {
      CHECK(nerve_level(f2, n, bound).objects.size() == tuple_count(1, n, bound));
      auto level = nerve_level(two, n, bound);
      CHECK(level.objects.size() == tuple_count(2, n, bound));
      std::set<NerveTuple> distinct(level.objects.begin(), level.objects.end());
      CHECK(distinct.size() == level.objects.size());
    }
  auto capped = nerve_level(two, 2, 3, 10);
  CHECK(capped.partial);
  CHECK(capped.objects.size() == 10);
}

TEST_CASE("block sums of morphisms") {
  AdditiveView v(ring(4));
  MatMorphism f = v.from_elem({0}, {0, 0}, {1, 2});
  MatMorphism g = v.from_elem({0}, {0}, {3});
  MatMorphism s = block_sum(v, f, g);
  CHECK(s.source == ObjSum{0, 0});
  CHECK(s.target == ObjSum{0, 0, 0});
  CHECK(v.to_elem(s) == Elem{1, 0, 2, 0, 0, 3});
  // Block sums are compatible with composition.
  MatMorphism h = v.from_elem({0, 0}, {0}, {1, 1});
  MatMorphism k = v.from_elem({0}, {0}, {2});
  CHECK(v.compose(block_sum(v, h, k), s) == block_sum(v, v.compose(h, f), v.compose(k, g)));
}

TEST_CASE("simplicial identities hold exhaustively") {
  for (std::int64_t n : {2, 4}) {
    AdditiveView v(ring(n));
    auto rep = check_simplicial_identities(v, 3, 3);
    CHECK(rep.ok());
    CHECK_FALSE(rep.partial);
    CHECK(rep.checks > 1000);
    if (!rep.ok()) MESSAGE(rep.failures.front());
  }
  AdditiveView two(share(scalar_ringoid({"a", "b"}, ring(2))));
  CHECK(check_simplicial_identities(two, 3, 2).ok());
  // Level 0 alone: only the empty tuple.
  auto empty = check_simplicial_identities(AdditiveView(ring(2)), 0, 0);
  CHECK(empty.ok());
  CHECK(empty.checks == 6);
}

TEST_CASE("Tietze simplification on small presentations") {
  GroupPresentation free2{{"a", "b"}, {{1, 2, -1, -2}}};
  auto s = simplify(free2);
  CHECK(s.result.generators.size() == 2);
  CHECK(s.result.abelianization().to_string() == "Z^2");

  GroupPresentation equal{{"a", "b"}, {{1, -2}}};
  auto e = simplify(equal);
  CHECK(e.result.generators == std::vector<std::string>{"a"});
  CHECK(e.result.relators.empty());
  CHECK(e.images[1] == Word{1});

  GroupPresentation two{{"a"}, {{1, 1}}};
  CHECK(simplify(two).result.abelianization().to_string() == "Z/2");

  GroupPresentation trivial{{"a", "b"}, {{1}, {2, 2, 1}}};
  auto t = simplify(trivial);
  CHECK(t.result.abelianization().to_string() == "Z/2");
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(invert({1, -2}) == Word{2, -1});
}

TEST_CASE("Tietze moves preserve the abelianization and the generator images") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t gens = 2 + rng() % 4;
    GroupPresentation p;
    for (std::size_t g = 0; g < gens; ++g) p.generators.push_back("g" + std::to_string(g));
    const std::size_t rels = rng() % 5;
    for (std::size_t r = 0; r < rels; ++r) p.relators.push_back(random_word(rng, gens, 1 + rng() % 5));
    auto s = simplify(p);
    CHECK(s.result.abelianization() == p.abelianization());
    // Each original relator becomes trivial in the simplified abelianization.
    AbPresentation ab = s.result.abelianization();
    for (const Word& w : p.relators) {
      std::vector<Integer> v(s.result.generators.size(), 0);
      for (auto l : w) {
        const Word& im = s.images[static_cast<std::size_t>(l > 0 ? l : -l) - 1];
        for (auto m : im) v[static_cast<std::size_t>(m > 0 ? m : -m) - 1] += (l > 0) == (m > 0) ? 1 : -1;
      }
      CHECK(ab.is_zero(v));
    }
  }
}

TEST_CASE("K0 through the nerve") {
  auto f2 = k0_via_nerve(ring(2), 3);
  CHECK(f2.group.to_string() == "Z");
  CHECK(f2.simplified.result.generators.size() == 1);
  CHECK(f2.simplified.result.relators.empty());
  CHECK(f2.simplified.result.to_string() == "<[*] |>");
  CHECK(f2.decided);

  auto zero = k0_via_nerve(share(zero_ring()), 2);
  CHECK(zero.group.is_trivial());
  CHECK(zero.simplified.result.generators.empty());

  CHECK(k0_via_nerve(ring(4), 3).group.to_string() == "Z");
  CHECK(k0_via_nerve(f2_c2(), 3).group.to_string() == "Z");
  CHECK(k0_via_nerve(share(scalar_ringoid({"a", "b"}, ring(2))), 2).group.to_string() == "Z^2");
}

TEST_CASE("nerve relations grow with the bound") {
  auto r = share(scalar_ringoid({"a", "b"}, ring(2)));
  auto lo = k0_via_nerve(r, 2);
  auto hi = k0_via_nerve(r, 3);
  // Shortlex order makes the bound-2 generators a prefix.
  for (std::size_t i = 0; i < lo.sums.size(); ++i) CHECK(lo.sums[i] == hi.sums[i]);
  std::set<Word> high(hi.presentation.relators.begin(), hi.presentation.relators.end());
  for (const Word& w : lo.presentation.relators) CHECK(high.count(w) == 1);
}

TEST_CASE("the two K0 pipelines agree") {
  for (auto r : {ring(2), ring(4), share(zero_ring()), f2_c2(),
                 share(scalar_ringoid({"a", "b"}, ring(3)))}) {
    auto rep = oracle_compare(r, 3);
    CAPTURE(r->name());
    CHECK(rep.match);
    CHECK(rep.decided());
    CHECK(rep.bounded.group == rep.nerve.group);
  }
  GSet free = GSet::regular(FinGroup::cyclic(2));
  auto rx = share(group_ringoid(transport_groupoid(free), ring(2)));
  auto rep = oracle_compare(rx, 2);
  CHECK(rep.match);
  CHECK(rep.nerve.group.to_string() == "Z");
}
