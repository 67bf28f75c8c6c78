#pragma once

#include <functional>
#include <string>
#include <vector>

#include "psc/complexes.hpp"
#include "psc/numtheory.hpp"

namespace psc::groups {

using nt::Nat;

struct GroupSpec {
  enum class Family {
    Symmetric,
    Alternating,
    Nilpotent,
    PSL2,
    PSL3,
    PSU3,
    Suzuki,
    Ree2G2,
    PSLn,  // torus-criterion only; no full complex
    Product,
    Fixture
  };

  Family family = Family::Symmetric;
  u64 n = 0;                       // Sym/Alt degree, Suzuki/Ree parameter m, PSLn rank
  u64 q = 0;                       // field size
  std::vector<u64> primes;         // Nilpotent
  std::vector<GroupSpec> factors;  // Product
  std::string fixture;             // Fixture

  /// Accepts e.g. Sym(9), Alt(10), Nil(2,3,5), PSL2(173), PSL3(9), PSU3(8),
  /// Sz(1), 2G2(2), PSLn(4,2), fixture:M12 and '*'-separated products.
  static GroupSpec parse(const std::string& text);
  std::string str() const;
};

/// Maps a fixture name to its spectrum; supplied by the io layer.
using FixtureResolver = std::function<Spectrum(const std::string&)>;

PrimeComplex symmetric_complex(u64 n);
PrimeComplex alternating_complex(u64 n);
PrimeComplex nilpotent_complex(const std::vector<u64>& primes);
PrimeComplex psl2_complex(u64 q);
PrimeComplex psl3_complex(u64 q);
PrimeComplex psu3_complex(u64 q);
PrimeComplex suzuki_complex(u64 m);

struct Ree2G2Purity {
  bool pure = false;  // always false
  PrimeSimplex witness;           // maximal simplex of size != 2
  PrimeSimplex baseline;          // the {2,3} maximal simplex
  std::string description;
};

/// Impurity decision for 2G2(3^(2m+1)); the full complex is not constructed.
Ree2G2Purity ree2g2_purity(u64 m);

struct TorusOrder {
  unsigned n = 0;
  u64 q = 0;
  std::vector<unsigned> partition;
  Nat value;
};

TorusOrder torus_order(unsigned n, u64 q, const std::vector<unsigned>& partition);

/// True iff some partition of n has, for every r in rs, a part divisible by
/// the multiplicative order e(r, q). Preconditions: each r odd, coprime to
/// q, with e(r, q) >= 2.
bool torus_simplex_criterion(unsigned n, u64 q, const std::vector<u64>& rs);

struct TorusCriterionDiag {
  bool via_order = false;   // part divisible by e(r, q)  (the proof's reading)
  bool via_prime = false;   // part divisible by r itself (the statement's literal reading)
};
TorusCriterionDiag torus_simplex_criterion_diag(unsigned n, u64 q, const std::vector<u64>& rs);

enum class Pure2Kind { PSL3Odd, PSU3Odd, PSU3Char2 };

/// Parameter screens for the size-2 purity classification.
std::vector<u64> pure2_parameter_screen(Pure2Kind kind, u64 limit);

u64 rank_bound(u64 k, bool small_field);

PrimeComplex complex_of(const GroupSpec& spec, const FixtureResolver& fixtures = {});

}  // namespace psc::groups
