#pragma once

#include <cstdint>
#include <vector>

#include "psc/complexes.hpp"

namespace psc::oracle {

/// A bijection on {0, ..., n-1}.
struct Permutation {
  std::vector<std::uint16_t> images;

  static Permutation identity(std::size_t n);
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<std::uint16_t>>& cycles);
  Permutation compose(const Permutation& other) const;  // this after other
  bool is_identity() const;
  u64 order() const;

  auto operator<=>(const Permutation&) const = default;
};

/// Element orders of S_n via lcms of partitions of n.
Spectrum sn_spectrum(unsigned n);

/// Element orders of A_n: partitions with an even number of even parts.
Spectrum an_spectrum(unsigned n);

enum class MatrixVariant { GL, SL, PSL };

/// Exhaustive enumeration of n x n matrices over GF(q); element orders in
/// the chosen quotient. Requires q^(n^2) <= 2^24.
Spectrum matrix_group_spectrum(unsigned n, unsigned q, MatrixVariant variant);

/// Spectrum of the closure of the generators; throws ResourceLimit if the
/// group exceeds order_cap.
Spectrum perm_group_spectrum(const std::vector<Permutation>& generators,
                             std::size_t order_cap = 1'000'000);

/// Order set of the centralizer of g inside the generated group.
Spectrum centralizer_spectrum(const std::vector<Permutation>& generators, const Permutation& g,
                              std::size_t order_cap = 1'000'000);

/// Full element list of the generated permutation group.
std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators,
                                         std::size_t order_cap = 1'000'000);

/// Standard generators: S_n = <(0 1), (0 1 ... n-1)>, A_n = <3-cycles>.
std::vector<Permutation> symmetric_generators(unsigned n);
std::vector<Permutation> alternating_generators(unsigned n);

/// PSL3(2) acting on the 7 nonzero vectors of F_2^3.
std::vector<Permutation> psl3_2_generators();

}  // namespace psc::oracle
