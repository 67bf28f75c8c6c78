#include <doctest.h>

#include "psc/analysis.hpp"
#include "psc/io.hpp"

using namespace psc;
using namespace psc::analysis;

namespace {

groups::FixtureResolver fixtures() { return io::FixtureStore().resolver(); }

}  // namespace

TEST_CASE("purity reports") {
  auto sym9 = purity_report(GroupSpec::parse("Sym(9)"));
  CHECK(sym9.pure);
  CHECK(sym9.max_size == 2);
  CHECK(sym9.min_maximal_size == 2);
  CHECK_FALSE(sym9.witness.has_value());

  auto alt6 = purity_report(GroupSpec::parse("Alt(6)"));
  CHECK(alt6.pure);

  // the published sporadic table claims (3, 2) for HN, but HN has the
  // isolated vertex 19, so the truth is (3, 1)
  auto hn = purity_report(GroupSpec::parse("fixture:HN"), fixtures());
  CHECK_FALSE(hn.pure);
  CHECK(hn.max_size == 3);
  CHECK(hn.min_maximal_size == 1);
  REQUIRE(hn.witness.has_value());
  CHECK(hn.witness->first.size() != hn.witness->second.size());

  auto ree = purity_report(GroupSpec::parse("2G2(2)"));
  CHECK_FALSE(ree.pure);
  REQUIRE(ree.witness.has_value());
}

TEST_CASE("purity scans") {
  auto sym = purity_scan(GroupSpec::Family::Symmetric, 1, 60);
  CHECK(sym.size() == 60);
  std::vector<u64> pure_at;
  for (const auto& rep : sym) {
    if (rep.pure) pure_at.push_back(rep.spec.n);
  }
  CHECK(pure_at == std::vector<u64>{1, 2, 3, 4, 9});

  SUBCASE("parallel matches serial") {
    auto ser = purity_scan_serial(GroupSpec::Family::Symmetric, 1, 60);
    REQUIRE(ser.size() == sym.size());
    for (std::size_t i = 0; i < ser.size(); ++i) {
      CHECK(ser[i].pure == sym[i].pure);
      CHECK(ser[i].max_size == sym[i].max_size);
      CHECK(ser[i].witness == sym[i].witness);
    }
  }

  SUBCASE("impure witnesses are genuine members") {
    for (const auto& rep : purity_scan(GroupSpec::Family::Symmetric, 5, 120)) {
      if (rep.pure) continue;
      REQUIRE(rep.witness.has_value());
      auto c = groups::symmetric_complex(rep.spec.n);
      CHECK(c.contains(rep.witness->first));
      CHECK(c.contains(rep.witness->second));
      CHECK(rep.witness->first.size() != rep.witness->second.size());
    }
  }
}

TEST_CASE("pn check") {
  auto c100 = pn_check(100);
  CHECK(c100.holds);
  CHECK(c100.k == 9);
  CHECK(c100.f == 174);

  auto c11 = pn_check(11);
  CHECK(c11.holds);
  CHECK(c11.k == 3);
  CHECK(c11.f == 16);

  CHECK(pn_check(129).holds);
  CHECK_THROWS_AS(pn_check(4), InvalidInput);

  for (u64 n = 10; n <= 2000; ++n) CHECK(pn_check(n).holds);
}

TEST_CASE("doubling witnesses") {
  auto resolver = fixtures();
  auto mcl = doubling_witness(from_spectrum(resolver("McL")));
  REQUIRE(mcl.has_value());
  CHECK(*mcl == std::vector<PrimeSimplex>{PrimeSimplex({11})});

  auto co3 = doubling_witness(from_spectrum(resolver("Co3")));
  REQUIRE(co3.has_value());
  CHECK(*co3 == std::vector<PrimeSimplex>{PrimeSimplex({3, 7}), PrimeSimplex({23})});

  auto complete = PrimeComplex::from_faces({PrimeSimplex({2, 3, 5, 7})});
  CHECK_FALSE(doubling_witness(complete).has_value());
}

TEST_CASE("power unrecognisability bound") {
  CHECK(power_unrecognisable_from(GroupSpec::parse("Nil(2,3,5)")) == 1);
  CHECK(power_unrecognisable_from(GroupSpec::parse("PSL2(173)")) == 3);
  CHECK(power_unrecognisable_from(GroupSpec::parse("fixture:J2"), fixtures()) == 3);
}

TEST_CASE("characteristic screen") {
  auto rows = characteristic_screen({2, 3, 29, 43, 47, 71, 173, 283});
  CHECK(rows.size() == 28);  // candidates 2, 3, 173, 283 against the other seven

  auto find = [&](u64 p, u64 r) {
    for (const auto& row : rows) {
      if (row.p == p && row.r == r) return row;
    }
    REQUIRE(false);
    return rows[0];
  };
  CHECK(find(2, 29).order == 28);
  CHECK(find(2, 29).bad);
  CHECK(find(173, 43).order == 1);
  CHECK_FALSE(find(173, 43).bad);
  CHECK(find(2, 3).order == 2);
  CHECK_FALSE(find(2, 3).bad);

  CHECK_THROWS_AS(characteristic_screen({29, 43}), InvalidInput);
  CHECK_THROWS_AS(characteristic_screen({4}), InvalidInput);
}

TEST_CASE("coprime-5 catalog") {
  auto catalog = coprime5_catalog();
  REQUIRE(catalog.size() == 6);

  const auto& psl2 = catalog[0];
  CHECK(psl2.admits(173));
  CHECK(psl2.order(173) == Nat{173} * 172 * 174 / 2);
  CHECK(order_coprime_to(psl2, 173, 5));

  const auto& d4 = catalog[5];
  CHECK_FALSE(order_coprime_to(d4, 2, 7));  // q^6 - 1 = 63 contributes a 7

  const auto& ree = catalog[4];
  CHECK_THROWS_AS(order_coprime_to(ree, 9, 5), InvalidInput);
  CHECK(ree.admits(27));

  SUBCASE("orders really are coprime to 5") {
    for (const auto& entry : catalog) {
      for (u64 q = 2; q <= 100; ++q) {
        if (!entry.admits(q)) continue;
        CHECK(order_coprime_to(entry, q, 5));
      }
    }
  }
}

TEST_CASE("sporadic size table") {
  io::FixtureStore store;
  auto rows = table_sporadic_sizes(store.names(), store.resolver());
  const auto& published = published_sporadic_sizes();
  for (const auto& row : rows) {
    auto it = published.find(row.group);
    if (it == published.end()) continue;
    if (row.group == "HN" || row.group == "Fi22") {
      // published row says (3, 2); both groups have an isolated vertex
      CHECK(row.max_size == 3);
      CHECK(row.min_maximal_size == 1);
    } else {
      CHECK(it->second == std::make_pair(row.max_size, row.min_maximal_size));
    }
  }

  SUBCASE("max size equals the largest radical support") {
    for (const auto& name : store.names()) {
      auto spec = store.load(name).spectrum;
      std::size_t best = 0;
      for (u64 m : spec.orders) best = std::max(best, nt::prime_set_u64(m).size());
      auto c = from_spectrum(spec);
      CHECK(c.max_size() == best);
    }
  }

  CHECK_THROWS_AS(table_sporadic_sizes({"nope"}, store.resolver()), MissingFixture);
}
