#include "psc/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace psc::groups {

namespace {

std::vector<u64> primes_upto(u64 n) {
  if (n < 2) return {};
  return nt::Sieve(n).primes();
}

// Generates maximal faces of the "weighted sum <= n" complexes shared by
// Sym and Alt: each prime p costs cost(p); a face is admissible when the
// total cost is <= n, maximal when no further prime fits.
PrimeComplex weighted_sum_complex(u64 n, const std::function<u64(u64)>& cost) {
  std::vector<std::pair<u64, u64>> weighted;  // (cost, prime), ascending by cost
  for (u64 p : primes_upto(n)) {
    if (cost(p) <= n) weighted.emplace_back(cost(p), p);
  }
  std::sort(weighted.begin(), weighted.end());
  std::vector<u64> suffix(weighted.size() + 1, 0);  // total cost of primes from index i on
  for (std::size_t i = weighted.size(); i-- > 0;) suffix[i] = suffix[i + 1] + weighted[i].first;

  std::vector<PrimeSimplex> maximal;
  std::vector<u64> cur;
  auto emit = [&] {
    PrimeSimplex f;
    f.primes = cur;
    std::sort(f.primes.begin(), f.primes.end());
    maximal.push_back(std::move(f));
  };
  // Include/exclude search over the cost-sorted primes. Since costs ascend
  // with the index, the cheapest possible extension of the current face is
  // either the cheapest prime skipped so far or weighted[i] itself, so
  // maximality at a leaf is a single comparison. Each maximal face is
  // reached exactly once, and maximal faces are pairwise incomparable.
  auto rec = [&](auto&& self, std::size_t i, u64 slack, u64 cheapest_skipped) -> void {
    if (suffix[i] <= slack) {
      // Skipping any remaining prime leaves enough slack to re-add it, so
      // the only maximal candidate below this node takes everything.
      if (cheapest_skipped > slack - suffix[i]) {
        std::size_t mark = cur.size();
        for (std::size_t j = i; j < weighted.size(); ++j) cur.push_back(weighted[j].second);
        emit();
        cur.resize(mark);
      }
      return;
    }
    if (weighted[i].first <= slack) {
      cur.push_back(weighted[i].second);
      self(self, i + 1, slack - weighted[i].first, cheapest_skipped);
      cur.pop_back();
      self(self, i + 1, slack, std::min(cheapest_skipped, weighted[i].first));
      return;
    }
    if (cheapest_skipped > slack) emit();
  };
  rec(rec, 0, n, n + 1);
  return PrimeComplex::from_antichain(std::move(maximal));
}

std::pair<u64, unsigned> require_prime_power(u64 q, const char* who) {
  auto pe = nt::prime_power_decompose(q);
  if (!pe) throw InvalidInput(std::string(who) + ": q = " + std::to_string(q) +
                              " is not a prime power");
  return *pe;
}

PrimeSimplex support(const Nat& value) {
  PrimeSimplex s;
  s.primes = nt::prime_set(value);
  return s;
}

PrimeSimplex support_u64(u64 value) {
  PrimeSimplex s;
  s.primes = nt::prime_set_u64(value);
  return s;
}

// Enumerates partitions of n (parts in descending order).
void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> parts;
  auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
    if (rest == 0) {
      fn(parts);
      return;
    }
    for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
      parts.push_back(p);
      self(self, rest - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
}

}  // namespace

PrimeComplex symmetric_complex(u64 n) {
  if (n < 1) throw InvalidInput("symmetric_complex: n >= 1 required");
  return weighted_sum_complex(n, [](u64 p) { return p; });
}

PrimeComplex alternating_complex(u64 n) {
  if (n < 1) throw InvalidInput("alternating_complex: n >= 1 required");
  // an involution moves 4 points (two transpositions), odd primes one p-cycle
  return weighted_sum_complex(n, [](u64 p) { return p == 2 ? u64{4} : p; });
}

PrimeComplex nilpotent_complex(const std::vector<u64>& primes) {
  if (primes.empty()) throw InvalidInput("nilpotent_complex: nonempty prime set required");
  return PrimeComplex::from_faces({PrimeSimplex(primes)});
}

PrimeComplex psl2_complex(u64 q) {
  auto [p, e] = require_prime_power(q, "psl2_complex");
  if (q < 4) throw InvalidInput("psl2_complex: q >= 4 required");
  u64 d = std::gcd<u64>(2, q - 1);
  PrimeSimplex char_face;
  char_face.primes = {p};
  return PrimeComplex::from_faces(
      {char_face, support_u64((q - 1) / d), support_u64((q + 1) / d)});
}

namespace {

// Shared PSL3/PSU3 builder; sign = +1 for linear, -1 for unitary.
PrimeComplex psl3_like_complex(u64 q, int sign, const char* who) {
  auto [p, e] = require_prime_power(q, who);
  if (q < (sign > 0 ? u64{2} : u64{3}))
    throw InvalidInput(std::string(who) + ": q out of range");
  Nat qe = Nat(static_cast<unsigned long>(q)) + (sign > 0 ? -1 : 1);  // q -+ 1
  u64 alpha = (qe % 3 == 0) ? 3 : 1;
  Nat q2m1 = Nat(static_cast<unsigned long>(q)) * q - 1;
  Nat phi3 = Nat(static_cast<unsigned long>(q)) * q + sign * Nat(static_cast<unsigned long>(q)) + 1;
  PrimeSimplex semisimple_char = support(qe / alpha).with(p);
  return PrimeComplex::from_faces({
      semisimple_char,
      support(qe * qe / alpha),
      support(q2m1 / alpha),
      support(phi3 / alpha),
  });
}

}  // namespace

PrimeComplex psl3_complex(u64 q) { return psl3_like_complex(q, +1, "psl3_complex"); }
PrimeComplex psu3_complex(u64 q) { return psl3_like_complex(q, -1, "psu3_complex"); }

PrimeComplex suzuki_complex(u64 m) {
  if (m < 1 || m > 30) throw InvalidInput("suzuki_complex: 1 <= m <= 30 required");
  u64 q = u64{1} << (2 * m + 1);
  u64 s = u64{1} << (m + 1);
  PrimeSimplex two;
  two.primes = {2};
  return PrimeComplex::from_faces(
      {two, support_u64(q - 1), support_u64(q - s + 1), support_u64(q + s + 1)});
}

Ree2G2Purity ree2g2_purity(u64 m) {
  if (m < 1) throw InvalidInput("ree2g2_purity: m >= 1 required");
  Nat q = nt::pow_nat(3, static_cast<unsigned>(2 * m + 1));
  Nat s = nt::pow_nat(3, static_cast<unsigned>(m + 1));
  Ree2G2Purity res;
  res.pure = false;
  res.baseline = PrimeSimplex({2, 3});
  // torus supports; q+-sqrt(3q)+1 are coprime to 6 and self-centralizing,
  // so a single-prime support there is a maximal simplex of size 1
  struct Torus {
    const char* label;
    Nat value;
    bool isolated;
  };
  std::vector<Torus> tori = {
      {"q-1", q - 1, false},
      {"q+1", q + 1, false},
      {"q-sqrt(3q)+1", q - s + 1, true},
      {"q+sqrt(3q)+1", q + s + 1, true},
  };
  for (const auto& t : tori) {
    PrimeSimplex sup = support(t.value);
    if (sup.size() >= 3) {
      res.witness = sup;
      res.description = std::string("torus ") + t.label + " has prime support " +
                        to_string(sup) + " of size >= 3, while {2,3} is maximal of size 2";
      return res;
    }
  }
  for (const auto& t : tori) {
    if (!t.isolated) continue;
    PrimeSimplex sup = support(t.value);
    if (sup.size() == 1) {
      res.witness = sup;
      res.description = std::string("torus ") + t.label + " = " + t.value.get_str() +
                        " has single prime support " + to_string(sup) +
                        ", a maximal simplex of size 1 against the maximal simplex {2,3}";
      return res;
    }
  }
  throw InvariantViolation("ree2g2_purity: no impurity witness among the maximal tori for m = " +
                           std::to_string(m));
}

TorusOrder torus_order(unsigned n, u64 q, const std::vector<unsigned>& partition) {
  unsigned sum = std::accumulate(partition.begin(), partition.end(), 0u);
  if (sum != n || partition.empty())
    throw InvalidInput("torus_order: parts must form a partition of n");
  require_prime_power(q, "torus_order");
  TorusOrder t;
  t.n = n;
  t.q = q;
  t.partition = partition;
  std::sort(t.partition.rbegin(), t.partition.rend());
  Nat num = 1;
  for (unsigned part : partition) num *= nt::pow_nat(q, part) - 1;
  Nat den = Nat(static_cast<unsigned long>(std::gcd<u64>(n, q - 1))) * (q - 1);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw InvalidInput("torus_order: inexact division");
  t.value = num / den;
  return t;
}

TorusCriterionDiag torus_simplex_criterion_diag(unsigned n, u64 q, const std::vector<u64>& rs) {
  if (n < 2) throw InvalidInput("torus_simplex_criterion: n >= 2 required");
  require_prime_power(q, "torus_simplex_criterion");
  std::vector<u64> orders;
  for (u64 r : rs) {
    if (r == 2 || !nt::is_prime(r) || q % r == 0)
      throw InvalidInput("torus_simplex_criterion: primes must be odd and coprime to q");
    u64 e = nt::multiplicative_order(q, r);
    if (e < 2) throw InvalidInput("torus_simplex_criterion: e(r,q) >= 2 required");
    orders.push_back(e);
  }
  TorusCriterionDiag diag;
  auto check = [&](const std::vector<u64>& divisors) {
    bool found = false;
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
      if (found) return;
      for (u64 d : divisors) {
        bool hit = false;
        for (unsigned part : parts) {
          if (part % d == 0) {
            hit = true;
            break;
          }
        }
        if (!hit) return;
      }
      found = true;
    });
    return found;
  };
  diag.via_order = check(orders);
  diag.via_prime = check(rs);
  return diag;
}

bool torus_simplex_criterion(unsigned n, u64 q, const std::vector<u64>& rs) {
  return torus_simplex_criterion_diag(n, q, rs).via_order;
}

std::vector<u64> pure2_parameter_screen(Pure2Kind kind, u64 limit) {
  if (limit < 1) throw InvalidInput("pure2_parameter_screen: limit >= 1 required");
  std::vector<u64> out;
  switch (kind) {
    case Pure2Kind::PSL3Odd:  // q = 3*2^k + 1 prime, k >= 1, k != 1 mod 3
      for (u64 k = 1; (u64{3} << k) + 1 <= limit; ++k) {
        u64 q = (u64{3} << k) + 1;
        if (k % 3 != 1 && nt::is_prime(q)) out.push_back(q);
      }
      break;
    case Pure2Kind::PSU3Odd:  // q = 3*2^k - 1 prime, k >= 1
      for (u64 k = 1; (u64{3} << k) - 1 <= limit; ++k) {
        u64 q = (u64{3} << k) - 1;
        if (nt::is_prime(q)) out.push_back(q);
      }
      break;
    case Pure2Kind::PSU3Char2:  // q = 2^e, e prime, 2^e - 1 Mersenne, 3 | q+1
      for (u64 e = 2; (u64{1} << e) <= limit; ++e) {
        u64 q = u64{1} << e;
        if (nt::is_prime(e) && nt::is_mersenne_prime(q - 1) && (q + 1) % 3 == 0)
          out.push_back(q);
      }
      break;
  }
  return out;
}

u64 rank_bound(u64 k, bool small_field) {
  if (k < 1) throw InvalidInput("rank_bound: k >= 1 required");
  if (small_field) return (k + 4) * (k + 5) / 2 - 1;
  return (k + 1) * (k + 2) / 2 - 1;
}

PrimeComplex complex_of(const GroupSpec& spec, const FixtureResolver& fixtures) {
  using F = GroupSpec::Family;
  switch (spec.family) {
    case F::Symmetric:
      return symmetric_complex(spec.n);
    case F::Alternating:
      return alternating_complex(spec.n);
    case F::Nilpotent:
      return nilpotent_complex(spec.primes);
    case F::PSL2:
      return psl2_complex(spec.q);
    case F::PSL3:
      return psl3_complex(spec.q);
    case F::PSU3:
      return psu3_complex(spec.q);
    case F::Suzuki:
      return suzuki_complex(spec.n);
    case F::Ree2G2:
      throw UnsupportedFamily(
          "complex_of: the full complex of 2G2 is not constructed; use the purity analysis");
    case F::PSLn:
      throw UnsupportedFamily(
          "complex_of: general PSLn supports only the torus simplex criterion");
    case F::Product: {
      PrimeComplex c;
      for (const auto& f : spec.factors) c = join(c, complex_of(f, fixtures));
      return c;
    }
    case F::Fixture:
      if (!fixtures) throw MissingFixture("complex_of: no fixture resolver supplied");
      return from_spectrum(fixtures(spec.fixture));
  }
  throw InvalidInput("complex_of: unknown family");
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

void validate(const GroupSpec& g) {
  using F = GroupSpec::Family;
  switch (g.family) {
    case F::Symmetric:
    case F::Alternating:
      if (g.n < 1) throw InvalidInput("GroupSpec: degree must be positive");
      break;
    case F::Nilpotent:
      for (u64 p : g.primes) {
        if (!nt::is_prime(p)) throw InvalidInput("GroupSpec: Nil arguments must be prime");
      }
      break;
    case F::PSL2:
      if (g.q < 4 || !nt::prime_power_decompose(g.q))
        throw InvalidInput("GroupSpec: PSL2 needs a prime power q >= 4");
      break;
    case F::PSL3:
      if (g.q < 2 || !nt::prime_power_decompose(g.q))
        throw InvalidInput("GroupSpec: PSL3 needs a prime power q >= 2");
      break;
    case F::PSU3:
      if (g.q < 3 || !nt::prime_power_decompose(g.q))
        throw InvalidInput("GroupSpec: PSU3 needs a prime power q >= 3");
      break;
    case F::Suzuki:
    case F::Ree2G2:
      if (g.n < 1) throw InvalidInput("GroupSpec: parameter m must be at least 1");
      break;
    case F::PSLn:
      if (g.n < 2 || g.q < 2 || !nt::prime_power_decompose(g.q))
        throw InvalidInput("GroupSpec: PSLn needs n >= 2 and a prime power q");
      break;
    default:
      break;
  }
}

std::vector<u64> parse_args(const std::string& inside) {
  std::vector<u64> out;
  std::stringstream ss(inside);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = strip(tok);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("GroupSpec: bad numeric argument '" + tok + "'");
    out.push_back(std::stoull(tok));
  }
  return out;
}

GroupSpec parse_atom(const std::string& raw) {
  std::string text = strip(raw);
  GroupSpec g;
  if (text.rfind("fixture:", 0) == 0) {
    g.family = GroupSpec::Family::Fixture;
    g.fixture = strip(text.substr(8));
    if (g.fixture.empty()) throw InvalidInput("GroupSpec: empty fixture name");
    return g;
  }
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw InvalidInput("GroupSpec: cannot parse '" + text + "'");
  std::string head = strip(text.substr(0, open));
  std::vector<u64> args = parse_args(text.substr(open + 1, text.size() - open - 2));
  auto one = [&](GroupSpec::Family f, u64& slot) {
    if (args.size() != 1) throw InvalidInput("GroupSpec: " + head + " takes one argument");
    g.family = f;
    slot = args[0];
  };
  if (head == "Sym" || head == "S")
    one(GroupSpec::Family::Symmetric, g.n);
  else if (head == "Alt" || head == "A")
    one(GroupSpec::Family::Alternating, g.n);
  else if (head == "PSL2")
    one(GroupSpec::Family::PSL2, g.q);
  else if (head == "PSL3")
    one(GroupSpec::Family::PSL3, g.q);
  else if (head == "PSU3")
    one(GroupSpec::Family::PSU3, g.q);
  else if (head == "Sz")
    one(GroupSpec::Family::Suzuki, g.n);
  else if (head == "2G2")
    one(GroupSpec::Family::Ree2G2, g.n);
  else if (head == "Nil" || head == "Nilpotent") {
    if (args.empty()) throw InvalidInput("GroupSpec: Nil needs at least one prime");
    g.family = GroupSpec::Family::Nilpotent;
    g.primes = args;
  } else if (head == "PSLn") {
    if (args.size() != 2) throw InvalidInput("GroupSpec: PSLn takes (n, q)");
    g.family = GroupSpec::Family::PSLn;
    g.n = args[0];
    g.q = args[1];
  } else {
    throw InvalidInput("GroupSpec: unknown family '" + head + "'");
  }
  validate(g);
  return g;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  // split on '*' at depth 0
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '*' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1) return parse_atom(parts[0]);
  GroupSpec g;
  g.family = Family::Product;
  for (const auto& p : parts) g.factors.push_back(parse_atom(p));
  return g;
}

std::string GroupSpec::str() const {
  using F = Family;
  std::ostringstream os;
  switch (family) {
    case F::Symmetric: os << "Sym(" << n << ")"; break;
    case F::Alternating: os << "Alt(" << n << ")"; break;
    case F::Nilpotent: {
      os << "Nil(";
      for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? "," : "") << primes[i];
      os << ")";
      break;
    }
    case F::PSL2: os << "PSL2(" << q << ")"; break;
    case F::PSL3: os << "PSL3(" << q << ")"; break;
    case F::PSU3: os << "PSU3(" << q << ")"; break;
    case F::Suzuki: os << "Sz(" << n << ")"; break;
    case F::Ree2G2: os << "2G2(" << n << ")"; break;
    case F::PSLn: os << "PSLn(" << n << "," << q << ")"; break;
    case F::Product: {
      for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i].str();
      break;
    }
    case F::Fixture: os << "fixture:" << fixture; break;
  }
  return os.str();
}

}  // namespace psc::groups
