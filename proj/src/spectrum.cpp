#include <algorithm>
#include <numeric>
#include <set>

#include "psc/complexes.hpp"
#include "psc/numtheory.hpp"

namespace psc {

namespace {

void add_divisors(u64 m, std::set<u64>& out) {
  for (u64 d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.insert(d);
      out.insert(m / d);
    }
  }
}

}  // namespace

Spectrum Spectrum::from_orders(std::vector<u64> orders) {
  std::set<u64> closed{1};
  for (u64 m : orders) {
    if (m == 0) throw InvalidInput("Spectrum: orders must be positive");
    add_divisors(m, closed);
  }
  Spectrum s;
  s.orders.assign(closed.begin(), closed.end());
  return s;
}

bool Spectrum::contains(u64 m) const {
  return std::binary_search(orders.begin(), orders.end(), m);
}

Spectrum product_spectrum(const Spectrum& a, const Spectrum& b) {
  std::vector<u64> out;
  out.reserve(a.orders.size() * b.orders.size());
  for (u64 x : a.orders) {
    for (u64 y : b.orders) out.push_back(std::lcm(x, y));
  }
  return Spectrum::from_orders(std::move(out));
}

PrimeComplex from_spectrum(const Spectrum& s) {
  if (s.orders.empty()) throw InvalidInput("from_spectrum: empty spectrum");
  std::vector<PrimeSimplex> faces;
  for (u64 m : s.orders) {
    PrimeSimplex f;
    f.primes = nt::prime_set_u64(m);
    faces.push_back(std::move(f));
  }
  return PrimeComplex::from_faces(std::move(faces));
}

}  // namespace psc
