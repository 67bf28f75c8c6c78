#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psc/errors.hpp"

namespace psc {

using u64 = std::uint64_t;

/// A face: a strictly increasing set of distinct primes. May be empty.
struct PrimeSimplex {
  std::vector<u64> primes;

  PrimeSimplex() = default;
  explicit PrimeSimplex(std::vector<u64> ps);

  std::size_t size() const { return primes.size(); }
  bool empty() const { return primes.empty(); }
  bool contains(u64 p) const;
  bool subset_of(const PrimeSimplex& other) const;
  PrimeSimplex united(const PrimeSimplex& other) const;
  PrimeSimplex with(u64 p) const;

  auto operator<=>(const PrimeSimplex&) const = default;
};

std::string to_string(const PrimeSimplex& s);

struct PrimeGraph {
  std::vector<u64> vertices;                    // sorted
  std::vector<std::pair<u64, u64>> edges;       // p < r, sorted

  bool adjacent(u64 p, u64 r) const;
};

/// Set of element orders; normalized to contain 1 and be divisor-closed.
struct Spectrum {
  std::vector<u64> orders;  // sorted

  static Spectrum from_orders(std::vector<u64> orders);  // normalizes
  bool contains(u64 m) const;
};

/// Divisor-closure union of two order sets under lcm: {lcm(a,b)}.
Spectrum product_spectrum(const Spectrum& a, const Spectrum& b);

/// Stored as the antichain of maximal faces; membership is inclusion.
class PrimeComplex {
 public:
  PrimeComplex() = default;

  /// Builds from an arbitrary family of faces; reduces to the maximal
  /// antichain and derives the vertex set. Empty faces are dropped.
  static PrimeComplex from_faces(std::vector<PrimeSimplex> faces);

  /// Builds from faces already known to be pairwise incomparable (e.g. the
  /// maximal faces of an existing complex); skips the quadratic reduction.
  static PrimeComplex from_antichain(std::vector<PrimeSimplex> faces);

  /// Constructs with explicit vertices; throws InvariantViolation if some
  /// vertex is missing from every face.
  static PrimeComplex from_vertices_and_faces(std::vector<u64> vertices,
                                              std::vector<PrimeSimplex> faces,
                                              bool* reduced = nullptr);

  const std::vector<u64>& vertices() const { return vertices_; }
  const std::vector<PrimeSimplex>& maximal() const { return maximal_; }

  bool contains(const PrimeSimplex& s) const;
  bool empty() const { return maximal_.empty(); }

  bool is_pure() const;
  std::size_t max_size() const;
  std::size_t min_maximal_size() const;

  bool operator==(const PrimeComplex& other) const = default;

 private:
  std::vector<u64> vertices_;          // sorted ascending
  std::vector<PrimeSimplex> maximal_;  // lexicographically sorted antichain
};

/// Complex of a direct product: antichain reduction of pairwise unions.
PrimeComplex join(const PrimeComplex& a, const PrimeComplex& b);

/// Complex whose faces are the radicals of the spectrum's members.
PrimeComplex from_spectrum(const Spectrum& s);

/// 2-skeleton.
PrimeGraph prime_graph(const PrimeComplex& c);

/// Maximal simplices s with 2 not in s whose extension {2} u s is absent.
/// An empty result certifies Pi(C_2^k x G) = Pi(G).
std::vector<PrimeSimplex> doubling_defect(const PrimeComplex& c);

/// Exact minimum number of maximal simplices covering the vertex set.
std::size_t cover_number(const PrimeComplex& c);

/// True iff the complement graph is triangle-free and 3-colourable.
bool is_solvable_realizable(const PrimeGraph& g);

std::size_t coclique_max(const PrimeGraph& g);
std::vector<u64> universal_vertices(const PrimeGraph& g);

}  // namespace psc
