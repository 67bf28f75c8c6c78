#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "psc/groups.hpp"
#include "psc/io.hpp"

using namespace psc;
using namespace psc::io;

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spectrum files") {
  auto s = parse_spectrum(R"({"name":"M11","orders":[1,2,3,4,5,6,8,11],"source":"test"})");
  CHECK(s.name == "M11");
  auto c = from_spectrum(s.spectrum);
  CHECK(c.maximal() == std::vector<PrimeSimplex>{PrimeSimplex({2, 3}), PrimeSimplex({5}),
                                                 PrimeSimplex({11})});

  CHECK_THROWS_AS(parse_spectrum(R"({"name":"x","orders":[]})"), ParseError);
  CHECK_THROWS_AS(parse_spectrum(R"({"name":"x","orders":[0,1]})"), ParseError);
  CHECK_THROWS_AS(parse_spectrum("{nope"), ParseError);
  CHECK_THROWS_AS(parse_spectrum(R"({"orders":[1]})"), ParseError);

  auto small = parse_spectrum(R"({"name":"t","orders":[1,2,3,6],"source":""})");
  CHECK(small.spectrum.orders == std::vector<u64>{1, 2, 3, 6});

  SUBCASE("round trip") {
    auto path = temp_file("psc_spec_roundtrip.json");
    save_spectrum(path, s);
    auto back = load_spectrum(path);
    CHECK(back.name == s.name);
    CHECK(back.source == s.source);
    CHECK(back.spectrum.orders == s.spectrum.orders);
    CHECK(spectrum_json(back) == spectrum_json(s));
    std::filesystem::remove(path);
  }
}

TEST_CASE("complex files") {
  auto c = groups::psl2_complex(173);
  auto path = temp_file("psc_complex_roundtrip.json");
  save_complex(path, c);
  bool reduced = true;
  auto back = load_complex(path, &reduced);
  CHECK_FALSE(reduced);
  CHECK(back == c);
  CHECK(complex_json(back) == complex_json(c));
  std::filesystem::remove(path);

  SUBCASE("antichain reduction warning") {
    auto r = parse_complex(R"({"vertices":[2,3],"maximal":[[2,3],[2]]})", &reduced);
    CHECK(reduced);
    CHECK(r.maximal() == std::vector<PrimeSimplex>{PrimeSimplex({2, 3})});
  }
  SUBCASE("invalid files") {
    CHECK_THROWS_AS(parse_complex(R"({"vertices":[2,5],"maximal":[[2]]})"), InvariantViolation);
    CHECK_THROWS_AS(parse_complex(R"({"vertices":[2]})"), ParseError);
  }
}

TEST_CASE("dot emission") {
  auto dot = emit_dot(prime_graph(groups::psl2_complex(173)));
  CHECK(dot.find("2 -- 43;") != std::string::npos);
  CHECK(dot.find("3 -- 29;") != std::string::npos);
  CHECK(dot.find("173;") != std::string::npos);
}

TEST_CASE("fixture store") {
  FixtureStore store;  // PSC_FIXTURES is set by ctest
  auto names = store.names();
  REQUIRE(!names.empty());
  CHECK(std::find(names.begin(), names.end(), "M12") != names.end());

  for (const auto& name : names) {
    auto spec = store.load(name);
    CHECK(!spec.source.empty());
    auto c = from_spectrum(spec.spectrum);
    CHECK(!c.empty());
    for (std::size_t i = 0; i < c.maximal().size(); ++i) {
      for (std::size_t j = 0; j < c.maximal().size(); ++j) {
        if (i != j) CHECK_FALSE(c.maximal()[i].subset_of(c.maximal()[j]));
      }
    }
  }

  CHECK_THROWS_AS(store.load("missing-group"), MissingFixture);
}

TEST_CASE("cli purity and complex") {
  auto r = run_cli({"purity", "Sym(9)"});
  CHECK(r.code == 0);
  CHECK(r.out == "pure (all maximal simplices size 2)\n");

  auto c = run_cli({"complex", "PSL2(4)", "--format", "text"});
  CHECK(c.code == 0);
  CHECK(c.out == "vertices: 2 3 5\nmaximal: {2} {3} {5}\n");

  auto dot = run_cli({"complex", "PSL2(173)", "--format", "dot"});
  CHECK(dot.out.find("2 -- 43;") != std::string::npos);

  SUBCASE("deterministic output") {
    auto again = run_cli({"complex", "PSL2(173)", "--format", "dot"});
    CHECK(again.out == dot.out);
  }
}

TEST_CASE("cli compare") {
  CHECK(run_cli({"compare", "PSL2(4)", "Alt(5)"}).out == "equal\n");
  auto diff = run_cli({"compare", "Sym(5)", "Alt(5)"});
  CHECK(diff.code == 1);
  CHECK(diff.out.find("different") == 0);
}

TEST_CASE("cli scan") {
  auto r = run_cli({"scan", "psl2", "4..30"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PSL2(17): pure") != std::string::npos);
  CHECK(r.out.find("PSL2(11): impure") != std::string::npos);
}

TEST_CASE("cli error codes") {
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"purity"}).code == 2);
  CHECK(run_cli({"purity", "Sym(x)"}).code == 2);
  CHECK(run_cli({"complex", "fixture:missing-group"}).code == 1);
}

TEST_CASE("cli nt and oracle") {
  CHECK(run_cli({"nt", "factor", "172"}).out == "2^2 43\n");
  CHECK(run_cli({"nt", "order", "2", "29"}).out == "28\n");
  CHECK(run_cli({"nt", "pn", "100"}).out == "holds k=9 f=174\n");
  CHECK(run_cli({"oracle", "sn", "4"}).out == "1 2 3 4\n");
  CHECK(run_cli({"oracle", "psl", "3", "2"}).out == "1 2 3 4 7\n");
}
