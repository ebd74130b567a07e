#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kring/catalog.hpp"
#include "kring_cli/rgd.hpp"

using namespace kring;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kF2 =
    "# F2\n"
    "ringoid F2\n"
    "object *\n"
    "hom * * cyclic 2\n"
    "compose * * *: 0 0 -> 1\n"
    "identity *: 1\n";

template <class E>
E error_of(const std::string& text) {
  try {
    rgd::parse(text);
  } catch (const E& e) {
    return e;
  } catch (const std::exception& e) {
    FAIL("wrong exception: " << e.what());
  }
  FAIL("no exception for:\n" << text);
  throw std::logic_error("unreachable");
}

// Random structure constants; the result need not satisfy any axiom.
FiniteRingoid random_ringoid(std::mt19937& rng) {
  const std::size_t n = 1 + rng() % 2;
  std::vector<std::string> objs;
  for (std::size_t i = 0; i < n; ++i) objs.push_back("o" + std::to_string(i));
  FiniteRingoid r("R" + std::to_string(rng() % 100), objs);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::int64_t> m;
      for (std::size_t k = rng() % 3; k > 0; --k) m.push_back(1 + static_cast<std::int64_t>(rng() % 5));
      r.set_hom(a, b, FinAbGroup(m));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t p = 0; p < r.hom(a, b).generator_count(); ++p)
          for (std::size_t q = 0; q < r.hom(b, c).generator_count(); ++q)
            if (rng() % 2) {
              const FinAbGroup& t = r.hom(a, c);
              r.set_constant(a, b, c, p, q, t.element_at(rng() % t.order()));
            }
  if (rng() % 2) {
    std::vector<Elem> ids;
    for (std::size_t a = 0; a < n; ++a) ids.push_back(r.hom(a, a).element_at(rng() % r.hom(a, a).order()));
    r.set_identities(ids);
  }
  return r;
}

}  // namespace

TEST_CASE("the F2 document parses to one clean ringoid") {
  auto doc = rgd::parse(kF2);
  REQUIRE(doc.ringoids.size() == 1);
  CHECK(doc.ringoids[0]->name() == "F2");
  CHECK(validate(*doc.ringoids[0]).clean());
  CHECK(doc.ringoids[0]->same_structure(cyclic_ring(2)));
}

TEST_CASE("modulus zero is a semantic error") {
  auto e = error_of<rgd::SemanticError>("ringoid R\nobject a\nobject b\nhom a b cyclic 0\n");
  CHECK(e.line() == 4);
  CHECK(e.column() == 16);
  CHECK(e.message() == "modulus must be >= 1");
}

TEST_CASE("syntax and semantic errors are distinct and located") {
  auto s = error_of<rgd::SyntaxError>("ringoid R\nobject *\nhom * * cyclic 2\ncompose * * * 0 0 -> 1\n");
  CHECK(s.line() == 4);
  CHECK(s.column() == 15);
  auto bad_kw = error_of<rgd::SyntaxError>("ringoid R\n  frobnicate *\n");
  CHECK(bad_kw.line() == 2);
  CHECK(bad_kw.column() == 3);
  auto outside = error_of<rgd::SyntaxError>("object *\n");
  CHECK(outside.line() == 1);
  auto number = error_of<rgd::SyntaxError>("ringoid R\nobject *\nhom * * cyclic two\n");
  CHECK(number.column() == 16);

  auto unknown = error_of<rgd::SemanticError>("ringoid R\nobject *\nhom * b cyclic 2\n");
  CHECK(unknown.line() == 3);
  CHECK(unknown.column() == 7);
  auto range = error_of<rgd::SemanticError>("ringoid R\nobject *\nhom * * cyclic 2\nidentity *: 3\n");
  CHECK(range.line() == 4);
  CHECK(range.column() == 13);
  auto count = error_of<rgd::SemanticError>("ringoid R\nobject *\nhom * * cyclic 2\nidentity *: 1 1\n");
  CHECK(count.line() == 4);
  auto gen = error_of<rgd::SemanticError>(
      "ringoid R\nobject *\nhom * * cyclic 2\ncompose * * *: 0 1 -> 1\n");
  CHECK(gen.column() == 18);
  auto dup = error_of<rgd::SemanticError>("ringoid R\nobject *\nobject *\n");
  CHECK(dup.line() == 3);
  auto missing_scalar = error_of<rgd::SemanticError>("ringoid R\nobject *\nscalar S\n");
  CHECK(missing_scalar.line() == 3);
}

TEST_CASE("the C2 groupoid document") {
  const std::string text =
      "groupoid C2\nobject *\nmorphism * * e\nmorphism * * g\n"
      "compose e e -> e\ncompose e g -> g\ncompose g e -> g\ncompose g g -> e\ninverse g g\n";
  auto doc = rgd::parse(text);
  REQUIRE(doc.groupoids.size() == 1);
  const FinGroupoid& g = doc.groupoids[0];
  CHECK(g.morphism_count() == 2);
  CHECK_FALSE(g.check().has_value());
  CHECK(g.identity(0) == std::optional<std::size_t>{0});
  CHECK(g.inverse(0) == std::optional<std::size_t>{0});
  FinGroup c2 = rgd::group_of(g);
  FinGroup ref = FinGroup::cyclic(2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(c2.multiply(a, b) == ref.multiply(a, b));

  auto incomplete = rgd::parse("groupoid G\nobject *\nmorphism * * e\nmorphism * * g\ncompose e e -> e\n");
  CHECK(incomplete.groupoids[0].check().has_value());
  CHECK_THROWS(rgd::group_of(incomplete.groupoids[0]));
}

TEST_CASE("gsets, homomorphisms and ideals") {
  const std::string text = std::string(kF2) +
                           "ringoid Z4\nobject *\nhom * * cyclic 4\ncompose * * *: 0 0 -> 1\nidentity *: 1\n"
                           "homomorphism reduce Z4 F2\nmap * -> *\nimage * *: 0 -> 1\n"
                           "ideal two in Z4\ngenerator * *: 2\n"
                           "groupoid C2\nobject *\nmorphism * * e\nmorphism * * g\n"
                           "compose e e -> e\ncompose e g -> g\ncompose g e -> g\ncompose g g -> e\n"
                           "gset free over C2\npoint x\npoint y\n"
                           "act x e -> x\nact x g -> y\nact y e -> y\nact y g -> x\n";
  auto doc = rgd::parse(text);
  REQUIRE(doc.hom("reduce"));
  CHECK(validate_hom(doc.hom("reduce")->hom).clean());
  REQUIRE(doc.ideal("two"));
  CHECK(validate_ideal(doc.ideal("two")->ideal).clean());
  const GSet* x = doc.gset("free");
  REQUIRE(x);
  CHECK_FALSE(x->check().has_value());
  CHECK(x->act(0, 1) == 1);
  CHECK(doc.gsets[0].group == "C2");

  auto unmapped = error_of<rgd::SemanticError>(std::string(kF2) + "homomorphism h F2 F2\n");
  CHECK(unmapped.line() == 7);
}

TEST_CASE("a partial map is rejected") {
  auto e = error_of<rgd::SemanticError>(std::string(kF2) + "homomorphism h F2 F2\nimage * *: 0 -> 1\n");
  CHECK(e.line() == 7);
}

TEST_CASE("round trip on the sample documents") {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(KRING_DATA_DIR)) {
    if (entry.path().extension() != ".rgd") continue;
    ++files;
    CAPTURE(entry.path().string());
    auto doc = rgd::parse(slurp(entry.path()));
    const std::string once = rgd::print(doc);
    auto again = rgd::parse(once);
    CHECK(rgd::print(again) == once);
    REQUIRE(again.ringoids.size() == doc.ringoids.size());
    for (std::size_t i = 0; i < doc.ringoids.size(); ++i) {
      CHECK(again.ringoids[i]->name() == doc.ringoids[i]->name());
      CHECK(again.ringoids[i]->same_structure(*doc.ringoids[i]));
    }
    CHECK(again.groupoids.size() == doc.groupoids.size());
    CHECK(again.gsets.size() == doc.gsets.size());
  }
  CHECK(files >= 10);
}

TEST_CASE("round trip on random structure constants") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    FiniteRingoid r = random_ringoid(rng);
    const std::string text = rgd::print_ringoid(r);
    auto doc = rgd::parse(text);
    REQUIRE(doc.ringoids.size() == 1);
    CHECK(doc.ringoids[0]->same_structure(r));
    CHECK(rgd::print_ringoid(*doc.ringoids[0]) == text);
  }
}

TEST_CASE("print_ringoid includes the scalar ring") {
  FiniteRingoid m = self_scalar(cyclic_ring(2));
  const std::string text = rgd::print_ringoid(m);
  auto doc = rgd::parse(text);
  REQUIRE(doc.ringoids.size() == 2);
  CHECK(doc.ringoids[1]->scalar_ring() == doc.ringoids[0]);
  CHECK(doc.ringoids[1]->same_structure(m));
  CHECK(validate(*doc.ringoids[1]).clean());
}
