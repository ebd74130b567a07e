#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "kring_cli/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  for (auto& a : args)
    if (a.size() > 5 && a.substr(a.size() - 4) == ".rgd" && a.find('/') == std::string::npos)
      a = std::string(KRING_DATA_DIR) + "/" + a;
  const int code = kring::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("k0 of F2") {
  auto r = invoke({"k0", "--input", "f2.rgd", "--bound", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "K0 = Z (stabilized at L=2)\n");
  CHECK(r.err.empty());
  CHECK(invoke({"k0", "--input", "f2.rgd", "--bound", "1"}).out == "K0 = Z (not stabilized at L=1)\n");
}

TEST_CASE("oracle comparison on F2") {
  auto r = invoke({"oracle-compare", "--input", "f2.rgd", "--bound", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "MATCH: Z\n");
}

TEST_CASE("validate reports the associativity witness") {
  auto r = invoke({"validate", "--input", "broken_associativity.rgd"});
  CHECK(r.code == 1);
  CHECK(r.out.find("ringoid Bad: FAIL") != std::string::npos);
  CHECK(r.out.find("associativity at objects (*, *, *, *) generators (0, 0, 0)") != std::string::npos);
  CHECK(invoke({"validate", "--input", "f2.rgd"}).code == 0);
  CHECK(invoke({"validate", "--input", "broken_bilinearity.rgd"}).out.find("bilinearity") != std::string::npos);
  CHECK(invoke({"validate", "--input", "broken_identity.rgd"}).out.find("identity at") != std::string::npos);
}

TEST_CASE("computations refuse invalid ringoids") {
  auto r = invoke({"k0", "--input", "broken_associativity.rgd"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("associativity") != std::string::npos);
}

TEST_CASE("parse errors go to the error stream with a location") {
  auto r = invoke({"validate", "--input", "f2.rgd"});
  REQUIRE(r.code == 0);
  // Missing file, bad flag and missing subcommand all fail with code 1.
  CHECK(invoke({"k0", "--input", "/nonexistent.rgd"}).code == 1);
  CHECK(invoke({"k0", "--input", "f2.rgd", "--bound", "x"}).code == 1);
  CHECK(invoke({"--input", "f2.rgd"}).code == 1);
  CHECK(invoke({"k0", "--input", "f2.rgd", "--format", "xml"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("undecided isomorphism tests give exit code 2") {
  auto r = invoke({"k0", "--input", "transport_free.rgd", "--ceiling", "1"});
  CHECK(r.code == 2);
  CHECK(r.out.find("undecided at L=3") != std::string::npos);
  auto ok = invoke({"k0", "--input", "transport_free.rgd"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "K0 = Z (stabilized at L=2)\n");
  CHECK(invoke({"oracle-compare", "--input", "transport_free.rgd", "--ceiling", "1"}).code == 2);
}

TEST_CASE("k1 output") {
  auto r = invoke({"k1", "--input", "f3.rgd"});
  CHECK(r.code == 0);
  CHECK(r.out.find("GL_2(F3): order 48, abelianization Z/2") != std::string::npos);
  CHECK(r.out.find("K1 = Z/2 (stabilized at n=2)") != std::string::npos);
  auto capped = invoke({"k1", "--input", "f2.rgd", "--gl-max", "3", "--ceiling", "100"});
  CHECK(capped.code == 2);
}

TEST_CASE("constructions print RGD that parses again") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"unitize", "--input", "moduloid.rgd"},
        {"quotient", "--input", "z4.rgd"},
        {"tensor", "--input", "c2.rgd", "--ringoid", "F2", "--with", "F2"},
        {"groupring", "--input", "c2.rgd"},
        {"transport", "--input", "c2.rgd", "--gset", "free"}}) {
    CAPTURE(args[0]);
    auto r = invoke(args);
    CHECK(r.code == 0);
    auto machine = args;
    machine.insert(machine.end(), {"--format", "machine"});
    auto m = invoke(machine);
    auto j = nlohmann::json::parse(m.out);
    CHECK(j["valid"] == true);
    CHECK(j["rgd"] == r.out);
  }
  auto q = invoke({"quotient", "--input", "z4.rgd"});
  CHECK(q.out.find("hom * * cyclic 2\n") != std::string::npos);
}

TEST_CASE("assembly verdicts") {
  auto r = invoke({"assembly", "--input", "c2.rgd"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: isomorphism") != std::string::npos);
  for (const char* x : {"point", "free", "both"}) {
    auto e = invoke({"assembly", "--input", "c2.rgd", "--gset", x, "--bound", "2", "--format", "machine"});
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["isomorphism"] == true);
  }
}

TEST_CASE("nerve-check and complete") {
  auto n = invoke({"nerve-check", "--input", "z4.rgd", "--bound", "2", "--level", "2"});
  CHECK(n.code == 0);
  CHECK(n.out.find(", 0 failures") != std::string::npos);
  auto c = invoke({"complete", "--input", "m2f2.rgd", "--bound", "2"});
  CHECK(c.code == 0);
  CHECK(c.out.find("biproducts checked: 6, failures: 0") != std::string::npos);
}

TEST_CASE("machine output is identical across runs and thread counts") {
  const std::vector<std::vector<std::string>> cases = {
      {"validate", "--input", "broken_associativity.rgd"},
      {"complete", "--input", "m2f2.rgd", "--bound", "3"},
      {"k0", "--input", "f2c2.rgd"},
      {"k0", "--input", "transport_free.rgd", "--ceiling", "1"},
      {"k1", "--input", "f2.rgd", "--gl-max", "3"},
      {"unitize", "--input", "moduloid.rgd"},
      {"assembly", "--input", "c2.rgd", "--gset", "both", "--bound", "2"},
      {"nerve-check", "--input", "f2.rgd", "--bound", "2"},
      {"oracle-compare", "--input", "z4.rgd"},
  };
  for (auto args : cases) {
    CAPTURE(args[0]);
    for (const char* format : {"human", "machine"}) {
      auto with = [&](const char* threads) {
        auto a = args;
        a.insert(a.end(), {"--format", format, "--threads", threads});
        return invoke(a);
      };
      auto one = with("1");
      auto again = with("1");
      auto many = with("4");
      CHECK(one.out == again.out);
      CHECK(one.out == many.out);
      CHECK(one.code == many.code);
    }
  }
}
