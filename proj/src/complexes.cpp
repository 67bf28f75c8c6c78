#include "psc/complexes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "psc/numtheory.hpp"

namespace psc {

PrimeSimplex::PrimeSimplex(std::vector<u64> ps) : primes(std::move(ps)) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (u64 p : primes) {
    if (!nt::is_prime(p)) throw InvalidInput("PrimeSimplex: " + std::to_string(p) + " is not prime");
  }
}

bool PrimeSimplex::contains(u64 p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

bool PrimeSimplex::subset_of(const PrimeSimplex& other) const {
  return std::includes(other.primes.begin(), other.primes.end(), primes.begin(), primes.end());
}

PrimeSimplex PrimeSimplex::united(const PrimeSimplex& other) const {
  PrimeSimplex out;
  std::set_union(primes.begin(), primes.end(), other.primes.begin(), other.primes.end(),
                 std::back_inserter(out.primes));
  return out;
}

PrimeSimplex PrimeSimplex::with(u64 p) const {
  PrimeSimplex out = *this;
  if (!contains(p)) {
    out.primes.push_back(p);
    std::sort(out.primes.begin(), out.primes.end());
  }
  return out;
}

std::string to_string(const PrimeSimplex& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.primes.size(); ++i) os << (i ? "," : "") << s.primes[i];
  os << '}';
  return os.str();
}

bool PrimeGraph::adjacent(u64 p, u64 r) const {
  if (p == r) return false;
  auto e = std::minmax(p, r);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(e.first, e.second));
}

namespace {

// Reduce a face family to its maximal antichain, sorted lexicographically.
std::vector<PrimeSimplex> antichain(std::vector<PrimeSimplex> faces, bool* reduced = nullptr) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<PrimeSimplex> out;
  bool dropped = false;
  for (const auto& f : faces) {
    if (f.empty()) continue;
    bool dominated = false;
    for (const auto& g : faces) {
      if (&f != &g && f != g && f.subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (dominated)
      dropped = true;
    else
      out.push_back(f);
  }
  if (reduced) *reduced = dropped;
  return out;
}

}  // namespace

PrimeComplex PrimeComplex::from_faces(std::vector<PrimeSimplex> faces) {
  PrimeComplex c;
  c.maximal_ = antichain(std::move(faces));
  std::vector<u64> verts;
  for (const auto& m : c.maximal_) verts.insert(verts.end(), m.primes.begin(), m.primes.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  c.vertices_ = std::move(verts);
  return c;
}

PrimeComplex PrimeComplex::from_antichain(std::vector<PrimeSimplex> faces) {
  faces.erase(std::remove_if(faces.begin(), faces.end(),
                             [](const PrimeSimplex& f) { return f.empty(); }),
              faces.end());
  std::sort(faces.begin(), faces.end());
  PrimeComplex c;
  c.maximal_ = std::move(faces);
  std::vector<u64> verts;
  for (const auto& m : c.maximal_) verts.insert(verts.end(), m.primes.begin(), m.primes.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  c.vertices_ = std::move(verts);
  return c;
}

PrimeComplex PrimeComplex::from_vertices_and_faces(std::vector<u64> vertices,
                                                   std::vector<PrimeSimplex> faces,
                                                   bool* reduced) {
  bool dropped = false;
  PrimeComplex c;
  c.maximal_ = antichain(std::move(faces), &dropped);
  if (reduced) *reduced = dropped;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (u64 v : vertices) {
    bool covered = false;
    for (const auto& m : c.maximal_) {
      if (m.contains(v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      throw InvariantViolation("PrimeComplex: vertex " + std::to_string(v) +
                               " appears in no maximal simplex");
  }
  for (const auto& m : c.maximal_) {
    for (u64 p : m.primes) {
      if (!std::binary_search(vertices.begin(), vertices.end(), p))
        throw InvariantViolation("PrimeComplex: face prime " + std::to_string(p) +
                                 " not in vertex set");
    }
  }
  c.vertices_ = std::move(vertices);
  return c;
}

bool PrimeComplex::contains(const PrimeSimplex& s) const {
  if (s.empty()) return true;
  for (const auto& m : maximal_) {
    if (s.subset_of(m)) return true;
  }
  return false;
}

bool PrimeComplex::is_pure() const {
  std::size_t k = max_size();
  for (const auto& m : maximal_) {
    if (m.size() != k) return false;
  }
  return true;
}

std::size_t PrimeComplex::max_size() const {
  std::size_t k = 0;
  for (const auto& m : maximal_) k = std::max(k, m.size());
  return k;
}

std::size_t PrimeComplex::min_maximal_size() const {
  if (maximal_.empty()) return 0;
  std::size_t k = maximal_.front().size();
  for (const auto& m : maximal_) k = std::min(k, m.size());
  return k;
}

PrimeComplex join(const PrimeComplex& a, const PrimeComplex& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<PrimeSimplex> faces;
  faces.reserve(a.maximal().size() * b.maximal().size());
  for (const auto& ma : a.maximal()) {
    for (const auto& mb : b.maximal()) faces.push_back(ma.united(mb));
  }
  return PrimeComplex::from_faces(std::move(faces));
}

PrimeGraph prime_graph(const PrimeComplex& c) {
  PrimeGraph g;
  g.vertices = c.vertices();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      PrimeSimplex e;
      e.primes = {g.vertices[i], g.vertices[j]};
      if (c.contains(e)) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
    }
  }
  return g;
}

std::vector<PrimeSimplex> doubling_defect(const PrimeComplex& c) {
  if (!std::binary_search(c.vertices().begin(), c.vertices().end(), u64{2}))
    throw InvalidInput("doubling_defect: 2 is not a vertex");
  std::vector<PrimeSimplex> out;
  for (const auto& m : c.maximal()) {
    if (m.contains(2)) continue;
    if (!c.contains(m.with(2))) out.push_back(m);
  }
  return out;
}

std::size_t cover_number(const PrimeComplex& c) {
  const auto& verts = c.vertices();
  if (verts.empty()) throw InvalidInput("cover_number: empty vertex set");
  if (verts.size() > 64) throw InvalidInput("cover_number: more than 64 vertices");
  auto index_of = [&](u64 p) {
    return std::size_t(std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
  };
  std::vector<std::uint64_t> masks;
  for (const auto& m : c.maximal()) {
    std::uint64_t mask = 0;
    for (u64 p : m.primes) mask |= std::uint64_t{1} << index_of(p);
    masks.push_back(mask);
  }
  const std::uint64_t full = verts.size() == 64 ? ~std::uint64_t{0}
                                                : (std::uint64_t{1} << verts.size()) - 1;
  // exact search, smallest cover first
  for (std::size_t k = 1; k <= masks.size(); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::uint64_t u = 0;
      for (std::size_t i : idx) u |= masks[i];
      if (u == full) return k;
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == masks.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InvariantViolation("cover_number: maximal simplices do not cover the vertices");
}

namespace {

bool three_colorable(const std::vector<std::uint64_t>& adj, std::vector<int>& color,
                     std::size_t v) {
  if (v == adj.size()) return true;
  for (int c = 0; c < 3; ++c) {
    bool ok = true;
    for (std::size_t u = 0; u < v; ++u) {
      if ((adj[v] >> u & 1) && color[u] == c) {
        ok = false;
        break;
      }
    }
    if (ok) {
      color[v] = c;
      if (three_colorable(adj, color, v + 1)) return true;
    }
  }
  color[v] = -1;
  return false;
}

}  // namespace

bool is_solvable_realizable(const PrimeGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n > 64) throw InvalidInput("is_solvable_realizable: more than 64 vertices");
  std::vector<std::uint64_t> comp(n, 0);  // complement adjacency
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !g.adjacent(g.vertices[i], g.vertices[j])) comp[i] |= std::uint64_t{1} << j;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(comp[i] >> j & 1)) continue;
      if (comp[i] & comp[j] & ~((std::uint64_t{1} << i) | (std::uint64_t{1} << j)))
        return false;  // triangle in the complement
    }
  }
  std::vector<int> color(n, -1);
  return three_colorable(comp, color, 0);
}

std::size_t coclique_max(const PrimeGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n > 64) throw InvalidInput("coclique_max: more than 64 vertices");
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [p, r] : g.edges) {
    auto ip = std::size_t(std::lower_bound(g.vertices.begin(), g.vertices.end(), p) -
                          g.vertices.begin());
    auto ir = std::size_t(std::lower_bound(g.vertices.begin(), g.vertices.end(), r) -
                          g.vertices.begin());
    adj[ip] |= std::uint64_t{1} << ir;
    adj[ir] |= std::uint64_t{1} << ip;
  }
  std::size_t best = 0;
  // branch and bound over candidate vertices
  auto rec = [&](auto&& self, std::uint64_t chosen, std::uint64_t cand, std::size_t count) -> void {
    best = std::max(best, count);
    while (cand) {
      if (count + std::size_t(__builtin_popcountll(cand)) <= best) return;
      std::size_t v = std::size_t(__builtin_ctzll(cand));
      cand &= cand - 1;
      self(self, chosen | (std::uint64_t{1} << v), cand & ~adj[v], count + 1);
    }
  };
  rec(rec, 0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
  return best;
}

std::vector<u64> universal_vertices(const PrimeGraph& g) {
  std::vector<u64> out;
  for (u64 v : g.vertices) {
    bool universal = true;
    for (u64 u : g.vertices) {
      if (u != v && !g.adjacent(u, v)) {
        universal = false;
        break;
      }
    }
    if (universal) out.push_back(v);
  }
  return out;
}

}  // namespace psc
