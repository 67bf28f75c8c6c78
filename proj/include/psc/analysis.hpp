#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psc/complexes.hpp"
#include "psc/groups.hpp"

namespace psc::analysis {

using groups::FixtureResolver;
using groups::GroupSpec;
using nt::Nat;

struct PurityReport {
  GroupSpec spec;
  bool pure = false;
  std::size_t max_size = 0;
  std::size_t min_maximal_size = 0;
  // lexicographically first pair of maximal simplices with different sizes
  std::optional<std::pair<PrimeSimplex, PrimeSimplex>> witness;
};

PurityReport purity_report(const GroupSpec& spec, const FixtureResolver& fixtures = {});
PurityReport purity_report(const GroupSpec& spec, const PrimeComplex& c);

/// One report per parameter in [lo, hi]; for PSL2 the parameter runs over
/// prime powers only. Parallel over parameters; the serial variant is the
/// reference implementation.
std::vector<PurityReport> purity_scan(GroupSpec::Family family, u64 lo, u64 hi);
std::vector<PurityReport> purity_scan_serial(GroupSpec::Family family, u64 lo, u64 hi);

struct PnCheck {
  bool holds = false;
  u64 k = 0;  // largest k with p_1 + ... + p_k <= n
  u64 f = 0;  // p_1 + ... + p_{k-1} + (largest prime <= n)
};

/// P(n): n < f. Requires n >= 5.
PnCheck pn_check(u64 n);

/// None certifies the C_2-extension construction applies; otherwise the
/// doubling defect. Requires 2 among the vertices.
std::optional<std::vector<PrimeSimplex>> doubling_witness(const PrimeComplex& c);

/// Cover number of Pi(G); G^m is unrecognisable for every m at or above it.
std::size_t power_unrecognisable_from(const GroupSpec& spec,
                                      const FixtureResolver& fixtures = {});

struct ScreenRow {
  u64 p = 0;
  u64 r = 0;
  u64 order = 0;   // i(p, r) = multiplicative order of p mod r
  bool bad = false;  // pi(p^order - 1) not contained in the allowed set
};

/// Candidate characteristics are the p in allowed with pi(p-1) inside
/// allowed; one row per candidate p and each r in allowed minus {p}.
std::vector<ScreenRow> characteristic_screen(const std::vector<u64>& allowed);

struct SimpleGroupOrderEntry {
  std::string label;
  // q admissible: a prime power meeting the congruence / shape constraints
  std::function<bool(u64)> admits;
  std::function<Nat(u64)> order;
};

std::vector<SimpleGroupOrderEntry> coprime5_catalog();
bool order_coprime_to(const SimpleGroupOrderEntry& entry, u64 q, u64 prime);

struct SporadicSizeRow {
  std::string group;
  std::size_t max_size = 0;
  std::size_t min_maximal_size = 0;
};

/// Computed (max, min) sizes for each named fixture, sorted by name.
std::vector<SporadicSizeRow> table_sporadic_sizes(const std::vector<std::string>& names,
                                                  const FixtureResolver& fixtures);

/// The published table's claims, keyed by group name.
const std::map<std::string, std::pair<std::size_t, std::size_t>>& published_sporadic_sizes();

}  // namespace psc::analysis
