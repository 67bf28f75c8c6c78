#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "psc/oracle.hpp"

using namespace psc;
using namespace psc::oracle;

TEST_CASE("permutations") {
  auto id = Permutation::identity(5);
  CHECK(id.is_identity());
  CHECK(id.order() == 1);

  auto c = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  CHECK(c.order() == 5);
  auto t = Permutation::from_cycles(5, {{0, 1}, {2, 3}});
  CHECK(t.order() == 2);
  CHECK(c.compose(c).compose(c).compose(c).compose(c).is_identity());
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InvalidInput);
}

TEST_CASE("sn_spectrum") {
  CHECK(sn_spectrum(4).orders == std::vector<u64>{1, 2, 3, 4});
  CHECK(sn_spectrum(5).orders == std::vector<u64>{1, 2, 3, 4, 5, 6});
  CHECK(sn_spectrum(1).orders == std::vector<u64>{1});
}

TEST_CASE("an_spectrum") {
  CHECK(an_spectrum(5).orders == std::vector<u64>{1, 2, 3, 5});
  CHECK(an_spectrum(3).orders == std::vector<u64>{1, 3});
  auto a8 = an_spectrum(8);
  CHECK(a8.contains(15));
  CHECK_FALSE(a8.contains(35));
}

TEST_CASE("spectra are divisor closed") {
  for (unsigned n : {6u, 9u, 13u}) {
    for (const auto& s : {sn_spectrum(n), an_spectrum(n)}) {
      for (u64 m : s.orders) {
        for (u64 d = 1; d <= m; ++d) {
          if (m % d == 0) CHECK(s.contains(d));
        }
      }
    }
  }
}

TEST_CASE("matrix group spectra") {
  CHECK(matrix_group_spectrum(3, 2, MatrixVariant::PSL).orders ==
        std::vector<u64>{1, 2, 3, 4, 7});
  CHECK(matrix_group_spectrum(2, 2, MatrixVariant::GL).orders == std::vector<u64>{1, 2, 3});
  // PSL2(9) is A6
  CHECK(matrix_group_spectrum(2, 9, MatrixVariant::PSL).orders ==
        std::vector<u64>{1, 2, 3, 4, 5});
  // SL2(5) doubles the even part of PSL2(5)
  CHECK(matrix_group_spectrum(2, 5, MatrixVariant::SL).orders ==
        std::vector<u64>{1, 2, 3, 4, 5, 6, 10});
  CHECK_THROWS_AS(matrix_group_spectrum(4, 8, MatrixVariant::GL), ResourceLimit);
}

TEST_CASE("psl4(2) radicals equal a8 radicals") {
  auto mat = matrix_group_spectrum(4, 2, MatrixVariant::PSL);
  CHECK(from_spectrum(mat) == from_spectrum(an_spectrum(8)));
}

TEST_CASE("permutation group closure") {
  auto five = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  CHECK(perm_group_spectrum({five}).orders == std::vector<u64>{1, 5});

  auto a5 = alternating_generators(5);
  CHECK(enumerate_group(a5).size() == 60);
  CHECK(perm_group_spectrum(a5).orders == std::vector<u64>{1, 2, 3, 5});

  CHECK(enumerate_group(symmetric_generators(6)).size() == 720);
  CHECK_THROWS_AS(enumerate_group(symmetric_generators(6), 100), ResourceLimit);
}

TEST_CASE("psl3_2 permutation model") {
  auto g = psl3_2_generators();
  CHECK(enumerate_group(g).size() == 168);
  CHECK(perm_group_spectrum(g).orders == std::vector<u64>{1, 2, 3, 4, 7});
}

TEST_CASE("centralizer spectra") {
  auto a4 = alternating_generators(4);
  CHECK(centralizer_spectrum(a4, Permutation::identity(4)).orders ==
        std::vector<u64>{1, 2, 3});

  auto s5 = symmetric_generators(5);
  auto five = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  CHECK(centralizer_spectrum(s5, five).orders == std::vector<u64>{1, 5});
}

namespace {

std::vector<Permutation> direct_sum(const std::vector<Permutation>& gens, unsigned degree) {
  // G x G on 2*degree points, plus the coordinate swap
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    Permutation left = Permutation::identity(2 * degree);
    Permutation right = Permutation::identity(2 * degree);
    for (unsigned i = 0; i < degree; ++i) {
      left.images[i] = g.images[i];
      right.images[degree + i] = std::uint16_t(degree + g.images[i]);
    }
    out.push_back(left);
    out.push_back(right);
  }
  return out;
}

Permutation swap_perm(unsigned degree) {
  Permutation s = Permutation::identity(2 * degree);
  for (unsigned i = 0; i < degree; ++i) {
    s.images[i] = std::uint16_t(degree + i);
    s.images[degree + i] = std::uint16_t(i);
  }
  return s;
}

}  // namespace

TEST_CASE("swap extension keeps the complex") {
  struct Case {
    std::vector<Permutation> gens;
    unsigned degree;
  };
  std::vector<Case> cases = {
      {symmetric_generators(3), 3},
      {symmetric_generators(4), 4},
      {{Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 2}})}, 4},
  };
  for (const auto& c : cases) {
    auto square = direct_sum(c.gens, c.degree);
    auto square_spec = perm_group_spectrum(square);
    auto base = perm_group_spectrum(c.gens);
    CHECK(square_spec.orders == product_spectrum(base, base).orders);

    auto ext = square;
    ext.push_back(swap_perm(c.degree));
    auto ext_spec = perm_group_spectrum(ext);
    CHECK(from_spectrum(ext_spec) == from_spectrum(square_spec));
  }
}

namespace {

Spectrum spectrum_of(const std::vector<Permutation>& elements) {
  std::set<u64> orders;
  for (const auto& g : elements) orders.insert(g.order());
  return Spectrum::from_orders({orders.begin(), orders.end()});
}

// forward direction of the centralizer criterion: every maximal simplex
// {p} u S of Pi(G) is maximal in Pi(C_G(g)) for some g of order p
void check_centralizer_forward(const std::vector<Permutation>& gens) {
  auto elements = enumerate_group(gens);
  auto full = from_spectrum(spectrum_of(elements));
  for (const auto& m : full.maximal()) {
    for (u64 p : m.primes) {
      bool witnessed = false;
      for (const auto& g : elements) {
        if (g.order() != p) continue;
        std::vector<Permutation> cent;
        for (const auto& h : elements) {
          if (h.compose(g) == g.compose(h)) cent.push_back(h);
        }
        auto local = from_spectrum(spectrum_of(cent));
        if (std::find(local.maximal().begin(), local.maximal().end(), m) !=
            local.maximal().end()) {
          witnessed = true;
          break;
        }
      }
      CHECK(witnessed);
    }
  }
}

}  // namespace

TEST_CASE("centralizer criterion, forward direction") {
  for (unsigned n = 3; n <= 6; ++n) check_centralizer_forward(symmetric_generators(n));
  for (unsigned n = 4; n <= 7; ++n) check_centralizer_forward(alternating_generators(n));
  check_centralizer_forward(psl3_2_generators());
}

TEST_CASE("centralizer criterion converse fails in S5") {
  // {2} is maximal in the centralizer of (0 1)(2 3) yet not maximal in
  // Pi(S5); only the existence direction of the criterion is usable
  auto s5 = symmetric_generators(5);
  auto g = Permutation::from_cycles(5, {{0, 1}, {2, 3}});
  auto local = from_spectrum(centralizer_spectrum(s5, g));
  CHECK(local.maximal() == std::vector<PrimeSimplex>{PrimeSimplex({2})});
  auto full = from_spectrum(perm_group_spectrum(s5));
  CHECK(full.contains(PrimeSimplex({2, 3})));
}
