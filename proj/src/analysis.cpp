#include "psc/analysis.hpp"

#include <algorithm>
#include <mutex>

#include "psc/errors.hpp"
#include "psc/numtheory.hpp"

namespace psc::analysis {

namespace {

PurityReport report_from_complex(const GroupSpec& spec, const PrimeComplex& c) {
  PurityReport rep;
  rep.spec = spec;
  rep.pure = c.is_pure();
  rep.max_size = c.max_size();
  rep.min_maximal_size = c.min_maximal_size();
  if (!rep.pure) {
    const auto& ms = c.maximal();
    for (std::size_t i = 0; i < ms.size() && !rep.witness; ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        if (ms[i].size() != ms[j].size()) {
          rep.witness = {ms[i], ms[j]};
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace

PurityReport purity_report(const GroupSpec& spec, const PrimeComplex& c) {
  return report_from_complex(spec, c);
}

PurityReport purity_report(const GroupSpec& spec, const FixtureResolver& fixtures) {
  if (spec.family == GroupSpec::Family::Ree2G2) {
    auto d = groups::ree2g2_purity(spec.n);
    PurityReport rep;
    rep.spec = spec;
    rep.pure = false;
    rep.max_size = std::max(d.witness.size(), d.baseline.size());
    rep.min_maximal_size = std::min(d.witness.size(), d.baseline.size());
    if (d.witness < d.baseline)
      rep.witness = {d.witness, d.baseline};
    else
      rep.witness = {d.baseline, d.witness};
    return rep;
  }
  return report_from_complex(spec, groups::complex_of(spec, fixtures));
}

namespace {

std::vector<u64> scan_params(GroupSpec::Family family, u64 lo, u64 hi) {
  std::vector<u64> params;
  for (u64 v = lo; v <= hi; ++v) {
    if (family == GroupSpec::Family::PSL2) {
      if (v < 4 || !nt::prime_power_decompose(v)) continue;
    }
    params.push_back(v);
  }
  return params;
}

GroupSpec spec_for(GroupSpec::Family family, u64 v) {
  GroupSpec s;
  s.family = family;
  if (family == GroupSpec::Family::PSL2)
    s.q = v;
  else
    s.n = v;
  return s;
}

}  // namespace

std::vector<PurityReport> purity_scan_serial(GroupSpec::Family family, u64 lo, u64 hi) {
  std::vector<PurityReport> out;
  for (u64 v : scan_params(family, lo, hi)) out.push_back(purity_report(spec_for(family, v)));
  return out;
}

std::vector<PurityReport> purity_scan(GroupSpec::Family family, u64 lo, u64 hi) {
  auto params = scan_params(family, lo, hi);
  std::vector<PurityReport> out(params.size());
  std::exception_ptr err;
  std::mutex err_mu;
#ifdef PSC_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long i = 0; i < (long long)params.size(); ++i) {
    try {
      out[i] = purity_report(spec_for(family, params[i]));
    } catch (...) {
      std::lock_guard<std::mutex> lk(err_mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

PnCheck pn_check(u64 n) {
  if (n < 5) throw InvalidInput("pn_check: n >= 5 required");
  static std::mutex mu;
  static std::vector<u64> primes;
  static std::vector<u64> largest;  // largest[i] = largest prime <= i
  std::lock_guard<std::mutex> lk(mu);
  if (largest.size() <= n) {
    u64 limit = std::max<u64>(2 * n, 10'000);
    nt::Sieve sieve(limit);
    primes = sieve.primes();
    largest.assign(limit + 1, 0);
    u64 last = 0;
    for (u64 i = 2; i <= limit; ++i) {
      if (sieve.is_prime(i)) last = i;
      largest[i] = last;
    }
  }
  // k = largest count of initial primes with sum <= n
  PnCheck out;
  u64 sum = 0, prev_sum = 0;
  for (u64 p : primes) {
    if (sum + p > n) break;
    prev_sum = sum;
    sum += p;
    ++out.k;
  }
  out.f = prev_sum + largest[n];
  out.holds = n < out.f;
  return out;
}

std::optional<std::vector<PrimeSimplex>> doubling_witness(const PrimeComplex& c) {
  auto defect = doubling_defect(c);
  if (defect.empty()) return std::nullopt;
  return defect;
}

std::size_t power_unrecognisable_from(const GroupSpec& spec, const FixtureResolver& fixtures) {
  return cover_number(groups::complex_of(spec, fixtures));
}

namespace {

bool divides_out_to_one(const Nat& value, const std::vector<u64>& allowed) {
  Nat v = value;
  for (u64 p : allowed) {
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) v /= static_cast<unsigned long>(p);
  }
  return v == 1;
}

}  // namespace

std::vector<ScreenRow> characteristic_screen(const std::vector<u64>& allowed) {
  std::vector<u64> sorted = allowed;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (u64 p : sorted) {
    if (!nt::is_prime(p)) throw InvalidInput("characteristic_screen: non-prime in allowed set");
  }
  auto in_allowed = [&](u64 p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
  };
  std::vector<u64> candidates;
  for (u64 p : sorted) {
    bool ok = true;
    for (u64 r : nt::prime_set_u64(p - 1)) ok = ok && in_allowed(r);
    if (ok) candidates.push_back(p);
  }
  if (candidates.empty())
    throw InvalidInput("characteristic_screen: no candidate characteristic");
  std::vector<ScreenRow> rows;
  for (u64 p : candidates) {
    for (u64 r : sorted) {
      if (r == p) continue;
      ScreenRow row;
      row.p = p;
      row.r = r;
      row.order = nt::multiplicative_order(p, r);
      Nat pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                    static_cast<unsigned long>(row.order));
      row.bad = !divides_out_to_one(pw - 1, sorted);
      rows.push_back(row);
    }
  }
  return rows;
}

namespace {

bool pm2_mod5(u64 q) { return q % 5 == 2 || q % 5 == 3; }

bool is_prime_power(u64 q) { return nt::prime_power_decompose(q).has_value(); }

bool is_odd_power_of_3(u64 q) {
  auto pe = nt::prime_power_decompose(q);
  return pe && pe->first == 3 && pe->second % 2 == 1;
}

Nat np(u64 q, unsigned e) { return nt::pow_nat(q, e); }

}  // namespace

std::vector<SimpleGroupOrderEntry> coprime5_catalog() {
  return {
      {"PSL2(q)", [](u64 q) { return q > 3 && is_prime_power(q) && pm2_mod5(q); },
       [](u64 q) -> Nat { return np(q, 1) * (np(q, 2) - 1) / (q % 2 == 0 ? 1 : 2); }},
      {"PSL3(q)", [](u64 q) { return q > 2 && is_prime_power(q) && pm2_mod5(q); },
       [](u64 q) -> Nat {
         return np(q, 3) * (np(q, 3) - 1) * (np(q, 2) - 1) / ((q - 1) % 3 == 0 ? 3 : 1);
       }},
      {"PSU3(q)", [](u64 q) { return q > 2 && is_prime_power(q) && pm2_mod5(q); },
       [](u64 q) -> Nat {
         return np(q, 3) * (np(q, 3) + 1) * (np(q, 2) - 1) / ((q + 1) % 3 == 0 ? 3 : 1);
       }},
      {"G2(q)", [](u64 q) { return q > 2 && is_prime_power(q) && pm2_mod5(q); },
       [](u64 q) -> Nat { return np(q, 6) * (np(q, 6) - 1) * (np(q, 2) - 1); }},
      {"2G2(q)", [](u64 q) { return q > 3 && is_odd_power_of_3(q); },
       [](u64 q) -> Nat { return np(q, 3) * (np(q, 3) + 1) * (np(q, 1) - 1); }},
      {"3D4(q)", [](u64 q) { return is_prime_power(q) && pm2_mod5(q); },
       [](u64 q) -> Nat {
         return np(q, 12) * (np(q, 8) + np(q, 4) + 1) * (np(q, 6) - 1) * (np(q, 2) - 1);
       }},
  };
}

bool order_coprime_to(const SimpleGroupOrderEntry& entry, u64 q, u64 prime) {
  if (!entry.admits(q)) throw InvalidInput(entry.label + ": q fails table constraints");
  Nat ord = entry.order(q);
  return !mpz_divisible_ui_p(ord.get_mpz_t(), static_cast<unsigned long>(prime));
}

std::vector<SporadicSizeRow> table_sporadic_sizes(const std::vector<std::string>& names,
                                                  const FixtureResolver& fixtures) {
  if (!fixtures) throw MissingFixture("table_sporadic_sizes: no fixture resolver");
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  std::vector<SporadicSizeRow> rows;
  for (const auto& name : sorted) {
    PrimeComplex c = from_spectrum(fixtures(name));
    rows.push_back({name, c.max_size(), c.min_maximal_size()});
  }
  return rows;
}

const std::map<std::string, std::pair<std::size_t, std::size_t>>& published_sporadic_sizes() {
  static const std::map<std::string, std::pair<std::size_t, std::size_t>> table = {
      {"M12", {2, 1}}, {"J2", {2, 1}},  {"M24", {2, 1}}, {"M11", {2, 1}}, {"M22", {2, 1}},
      {"M23", {2, 1}}, {"J1", {2, 1}},  {"J3", {2, 1}},  {"HS", {2, 1}},  {"He", {2, 1}},
      {"Ru", {2, 1}},  {"Suz", {2, 1}}, {"ON", {2, 1}},  {"HN", {3, 2}},  {"Fi22", {3, 2}},
      {"Ly", {3, 1}},  {"McL", {3, 1}}, {"Fi23", {3, 1}}, {"Co2", {3, 1}}, {"Co1", {3, 1}},
      {"Co3", {3, 1}},
  };
  return table;
}

}  // namespace psc::analysis
