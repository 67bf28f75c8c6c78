#include "psc/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "psc/errors.hpp"
#include "psc/numtheory.hpp"

namespace psc::oracle {

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<std::uint16_t>>& cycles) {
  Permutation p = identity(n);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] >= n) throw InvalidInput("Permutation: point out of range");
      p.images[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  }
  // verify bijection
  std::vector<char> seen(n, 0);
  for (auto v : p.images) {
    if (seen[v]) throw InvalidInput("Permutation: cycles overlap");
    seen[v] = 1;
  }
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation p;
  p.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) p.images[i] = images[other.images[i]];
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] != i) return false;
  }
  return true;
}

u64 Permutation::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(images.size(), 0);
  u64 ord = 1;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    u64 len = 0;
    std::size_t j = i;
    do {
      seen[j] = 1;
      j = images[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

namespace {

void partitions_with(unsigned n, unsigned maxpart, std::vector<unsigned>& parts,
                     const std::function<void(const std::vector<unsigned>&)>& fn) {
  if (n == 0) {
    fn(parts);
    return;
  }
  for (unsigned p = std::min(n, maxpart); p >= 1; --p) {
    parts.push_back(p);
    partitions_with(n - p, p, parts, fn);
    parts.pop_back();
  }
}

}  // namespace

Spectrum sn_spectrum(unsigned n) {
  if (n < 1 || n > 30) throw InvalidInput("sn_spectrum: 1 <= n <= 30 required");
  std::set<u64> orders;
  std::vector<unsigned> parts;
  partitions_with(n, n, parts, [&](const std::vector<unsigned>& ps) {
    u64 l = 1;
    for (unsigned p : ps) l = std::lcm<u64>(l, p);
    orders.insert(l);
  });
  return Spectrum::from_orders({orders.begin(), orders.end()});
}

Spectrum an_spectrum(unsigned n) {
  if (n < 1 || n > 30) throw InvalidInput("an_spectrum: 1 <= n <= 30 required");
  std::set<u64> orders;
  std::vector<unsigned> parts;
  partitions_with(n, n, parts, [&](const std::vector<unsigned>& ps) {
    unsigned evens = 0;
    u64 l = 1;
    for (unsigned p : ps) {
      if (p % 2 == 0) ++evens;
      l = std::lcm<u64>(l, p);
    }
    if (evens % 2 == 0) orders.insert(l);
  });
  return Spectrum::from_orders({orders.begin(), orders.end()});
}

namespace {

// Arithmetic tables for GF(q), q = p^e <= 16.
class SmallField {
 public:
  explicit SmallField(unsigned q) : q_(q) {
    auto pe = nt::prime_power_decompose(q);
    if (!pe || q > 16) throw InvalidInput("SmallField: q must be a prime power <= 16");
    p_ = unsigned(pe->first);
    e_ = pe->second;
    unsigned poly = irreducible_poly();
    mul_.assign(q_ * q_, 0);
    add_.assign(q_ * q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      for (unsigned b = 0; b < q_; ++b) {
        add_[a * q_ + b] = add_elems(a, b);
        mul_[a * q_ + b] = mul_elems(a, b, poly);
      }
    }
    inv_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a) {
      for (unsigned b = 1; b < q_; ++b) {
        if (mul(a, b) == 1) inv_[a] = b;
      }
    }
  }

  unsigned size() const { return q_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned inv(unsigned a) const { return inv_[a]; }
  unsigned neg(unsigned a) const {
    for (unsigned b = 0; b < q_; ++b) {
      if (add(a, b) == 0) return b;
    }
    return 0;
  }

 private:
  // elements are base-p digit strings of length e
  unsigned add_elems(unsigned a, unsigned b) const {
    unsigned out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
      out += ((a % p_ + b % p_) % p_) * mult;
      a /= p_;
      b /= p_;
      mult *= p_;
    }
    return out;
  }
  unsigned irreducible_poly() const {
    // monic irreducible of degree e over F_p, digits base p (x^e coefficient implicit)
    if (e_ == 1) return 0;
    switch (q_) {
      case 4: return 0b11;        // x^2 + x + 1
      case 8: return 0b011;       // x^3 + x + 1
      case 9: return 1 * 1 + 0;   // x^2 + 1 over F_3: digits (c0=1, c1=0)
      case 16: return 0b0011;     // x^4 + x + 1
      default: throw InvalidInput("SmallField: unsupported extension");
    }
  }
  unsigned mul_elems(unsigned a, unsigned b, unsigned poly) const {
    if (e_ == 1) return (a * b) % p_;
    // polynomial multiplication with digit vectors base p
    std::array<unsigned, 8> prod{};
    for (unsigned i = 0, ai = a; i < e_; ++i, ai /= p_) {
      for (unsigned j = 0, bj = b; j < e_; ++j, bj /= p_) {
        prod[i + j] = (prod[i + j] + (ai % p_) * (bj % p_)) % p_;
      }
    }
    // reduce: x^e = -poly
    std::array<unsigned, 8> red{};
    for (unsigned i = 0, pi = poly; i < e_; ++i, pi /= p_) red[i] = pi % p_;
    for (int d = 2 * int(e_) - 2; d >= int(e_); --d) {
      unsigned c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < e_; ++i) {
        unsigned sub = (c * red[i]) % p_;
        prod[d - e_ + i] = (prod[d - e_ + i] + p_ - sub) % p_;
      }
    }
    unsigned out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
      out += prod[i] * mult;
      mult *= p_;
    }
    return out;
  }

  unsigned q_, p_, e_;
  std::vector<unsigned> add_, mul_, inv_;
};

using Matrix = std::vector<std::uint8_t>;  // row-major n x n

Matrix mat_mul(const SmallField& f, unsigned n, const Matrix& a, const Matrix& b) {
  Matrix c(n * n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 0; k < n; ++k) {
      unsigned aik = a[i * n + k];
      if (!aik) continue;
      for (unsigned j = 0; j < n; ++j) {
        c[i * n + j] = std::uint8_t(f.add(c[i * n + j], f.mul(aik, b[k * n + j])));
      }
    }
  }
  return c;
}

unsigned mat_det(const SmallField& f, unsigned n, Matrix m) {
  unsigned det = 1;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) std::swap(m[col * n + j], m[pivot * n + j]);
      det = f.mul(det, f.neg(1));
    }
    unsigned pv = m[col * n + col];
    det = f.mul(det, pv);
    unsigned pv_inv = f.inv(pv);
    for (unsigned r = col + 1; r < n; ++r) {
      unsigned factor = f.mul(m[r * n + col], pv_inv);
      if (!factor) continue;
      for (unsigned j = col; j < n; ++j) {
        unsigned sub = f.mul(factor, m[col * n + j]);
        m[r * n + j] = std::uint8_t(f.add(m[r * n + j], f.neg(sub)));
      }
    }
  }
  return det;
}

bool is_identity_mat(unsigned n, const Matrix& m) {
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (m[i * n + j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool is_scalar_mat(unsigned n, const Matrix& m) {
  unsigned d = m[0];
  if (d == 0) return false;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (m[i * n + j] != (i == j ? d : 0)) return false;
    }
  }
  return true;
}

}  // namespace

Spectrum matrix_group_spectrum(unsigned n, unsigned q, MatrixVariant variant) {
  if (n < 1 || n > 4) throw InvalidInput("matrix_group_spectrum: 1 <= n <= 4 required");
  double total = std::pow(double(q), double(n) * n);
  if (total > double(1 << 24))
    throw ResourceLimit("matrix_group_spectrum: q^(n^2) exceeds 2^24");
  SmallField f(q);
  const u64 count = u64(llround(total));
  std::set<u64> orders{1};
  Matrix m(n * n);
  for (u64 code = 0; code < count; ++code) {
    u64 c = code;
    for (unsigned i = 0; i < n * n; ++i) {
      m[i] = std::uint8_t(c % q);
      c /= q;
    }
    unsigned det = mat_det(f, n, m);
    if (det == 0) continue;
    if (variant != MatrixVariant::GL && det != 1) continue;
    // order by repeated multiplication
    Matrix pow = m;
    u64 k = 1;
    u64 proj_order = 0;
    const u64 cap = 1'000'000;
    while (k <= cap) {
      if (variant == MatrixVariant::PSL && proj_order == 0 && is_scalar_mat(n, pow))
        proj_order = k;
      if (is_identity_mat(n, pow)) break;
      pow = mat_mul(f, n, pow, m);
      ++k;
    }
    if (k > cap) throw ResourceLimit("matrix_group_spectrum: order iteration cap hit");
    orders.insert(variant == MatrixVariant::PSL ? proj_order : k);
  }
  return Spectrum::from_orders({orders.begin(), orders.end()});
}

std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators,
                                         std::size_t order_cap) {
  if (generators.empty()) throw InvalidInput("enumerate_group: no generators");
  std::set<Permutation> seen;
  std::vector<Permutation> frontier{Permutation::identity(generators.front().images.size())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& s : generators) {
        Permutation h = s.compose(g);
        if (seen.insert(h).second) {
          next.push_back(std::move(h));
          if (seen.size() > order_cap)
            throw ResourceLimit("enumerate_group: order cap " + std::to_string(order_cap) +
                                " exceeded");
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Spectrum perm_group_spectrum(const std::vector<Permutation>& generators, std::size_t order_cap) {
  std::set<u64> orders;
  for (const auto& g : enumerate_group(generators, order_cap)) orders.insert(g.order());
  return Spectrum::from_orders({orders.begin(), orders.end()});
}

Spectrum centralizer_spectrum(const std::vector<Permutation>& generators, const Permutation& g,
                              std::size_t order_cap) {
  std::set<u64> orders;
  for (const auto& h : enumerate_group(generators, order_cap)) {
    if (h.compose(g) == g.compose(h)) orders.insert(h.order());
  }
  return Spectrum::from_orders({orders.begin(), orders.end()});
}

std::vector<Permutation> symmetric_generators(unsigned n) {
  if (n < 2) return {Permutation::identity(n)};
  std::vector<std::uint16_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  return {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})};
}

std::vector<Permutation> alternating_generators(unsigned n) {
  if (n < 3) return {Permutation::identity(n)};
  std::vector<Permutation> gens;
  for (std::uint16_t i = 0; i + 2 < n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{i, std::uint16_t(i + 1), std::uint16_t(i + 2)}}));
  return gens;
}

std::vector<Permutation> psl3_2_generators() {
  // SL3(2) acting on the 7 nonzero vectors of F_2^3, vectors coded 1..7 -> points 0..6
  SmallField f(2);
  auto act = [&](const Matrix& m) {
    Permutation p;
    p.images.resize(7);
    for (unsigned v = 1; v <= 7; ++v) {
      unsigned in[3] = {v & 1u, (v >> 1) & 1u, (v >> 2) & 1u};
      unsigned out = 0;
      for (unsigned i = 0; i < 3; ++i) {
        unsigned s = 0;
        for (unsigned j = 0; j < 3; ++j) s ^= m[i * 3 + j] & in[j];
        out |= (s & 1u) << i;
      }
      p.images[v - 1] = std::uint16_t(out - 1);
    }
    return p;
  };
  // generators of SL3(2): an elementary transvection and a cyclic shift
  Matrix t = {1, 1, 0, 0, 1, 0, 0, 0, 1};
  Matrix c = {0, 0, 1, 1, 0, 0, 0, 1, 0};
  return {act(t), act(c)};
}

}  // namespace psc::oracle
