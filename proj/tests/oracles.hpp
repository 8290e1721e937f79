#pragma once

// Deliberately naive reimplementations used only as test oracles. None of
// them call into the library code they are compared against.

#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "vkb/diagram.hpp"
#include "vkb/ribbon.hpp"

namespace oracle {

// Polynomial as exponent vector -> coefficient, machine integers.
using Poly = std::map<std::vector<std::int64_t>, std::int64_t>;

inline void normalize(Poly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b) r[m] += c;
  normalize(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<std::int64_t> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r[m] += ca * cb;
    }
  normalize(r);
  return r;
}

struct Uf {
  std::vector<std::size_t> p;
  explicit Uf(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t f(std::size_t x) {
    while (p[x] != x) x = p[x];
    return x;
  }
  void u(std::size_t a, std::size_t b) { p[f(a)] = f(b); }
  std::size_t count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) c += f(i) == i;
    return c;
  }
};

// delta(S) by walking curves through the raw arc labels. Splitting A joins
// slots (0,1),(2,3); B joins (0,3),(1,2).
inline std::size_t walk_circles(const vkb::VirtualLinkDiagram& d, std::uint64_t index) {
  const std::size_t n = d.crossing_count();
  std::map<vkb::ArcId, std::vector<std::pair<std::size_t, int>>> ends;
  for (std::size_t c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) ends[d.crossing(c).slots[static_cast<std::size_t>(s)]].push_back({c, s});
  auto partner = [&](std::size_t c, int s) {
    const bool b = (index >> (n - 1 - c)) & 1U;
    if (!b) return s ^ 1;
    return 3 - s;
  };
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(4, false));
  std::size_t circles = 0;
  for (std::size_t c0 = 0; c0 < n; ++c0)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (seen[c0][static_cast<std::size_t>(s0)]) continue;
      ++circles;
      std::size_t c = c0;
      int s = s0;
      while (!seen[c][static_cast<std::size_t>(s)]) {
        seen[c][static_cast<std::size_t>(s)] = true;
        const int t = partner(c, s);
        seen[c][static_cast<std::size_t>(t)] = true;
        // Leave through slot t along its arc to the other end.
        const auto& e = ends[d.crossing(c).slots[static_cast<std::size_t>(t)]];
        std::pair<std::size_t, int> next = e[0] == std::make_pair(c, t) ? e[1] : e[0];
        c = next.first;
        s = next.second;
      }
    }
  return circles + d.free_loops();
}

// (alpha, beta, delta) -> number of states.
inline std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::uint64_t> state_census(
    const vkb::VirtualLinkDiagram& d) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::uint64_t> out;
  const std::size_t n = d.crossing_count();
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    const auto beta = static_cast<std::size_t>(__builtin_popcountll(idx));
    ++out[{n - beta, beta, walk_circles(d, idx)}];
  }
  return out;
}

// Boundary components by tracing faces of a signed rotation system: a walk
// leaves along half-edge h, crosses the band (flipping the orientation flag
// on a twisted band) and continues with the successor or predecessor of the
// arrival half-edge depending on the flag. Every boundary circle is traced
// once in each direction.
inline std::size_t traced_boundary(const vkb::RibbonGraph& g, const std::vector<bool>& included) {
  std::map<vkb::HalfEdgeId, std::pair<std::size_t, std::size_t>> where;  // vertex, position
  std::vector<std::vector<vkb::HalfEdgeId>> rot(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (vkb::HalfEdgeId h : g.vertices()[v]) {
      bool keep = false;
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (included[e] && (g.edges()[e].a == h || g.edges()[e].b == h)) keep = true;
      if (keep) rot[v].push_back(h);
    }
    for (std::size_t i = 0; i < rot[v].size(); ++i) where[rot[v][i]] = {v, i};
  }
  std::map<vkb::HalfEdgeId, std::pair<vkb::HalfEdgeId, bool>> other;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!included[e]) continue;
    const auto& ed = g.edges()[e];
    other[ed.a] = {ed.b, ed.twisted};
    other[ed.b] = {ed.a, ed.twisted};
  }

  std::map<std::pair<vkb::HalfEdgeId, bool>, bool> seen;
  std::size_t orbits = 0;
  for (const auto& [h0, _] : where)
    for (bool f0 : {true, false}) {
      if (seen[{h0, f0}]) continue;
      ++orbits;
      vkb::HalfEdgeId h = h0;
      bool f = f0;
      while (!seen[{h, f}]) {
        seen[{h, f}] = true;
        const auto [arrive, twisted] = other[h];
        if (twisted) f = !f;
        const auto [v, pos] = where[arrive];
        const std::size_t m = rot[v].size();
        h = rot[v][f ? (pos + 1) % m : (pos + m - 1) % m];
      }
    }
  std::size_t bare = 0;
  for (const auto& r : rot) bare += r.empty() ? 1 : 0;
  return orbits / 2 + bare;
}

inline std::size_t core_components(const vkb::RibbonGraph& g, const std::vector<bool>& included) {
  Uf uf(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (included[e]) uf.u(g.edge_tail(e), g.edge_head(e));
  return uf.count();
}

// Tutte polynomial as the rank-nullity expansion
//   T(x, y) = sum_F (x-1)^(r(G)-r(F)) (y-1)^(n(F)),
// returned as coefficients of x^i y^j.
inline std::map<std::pair<int, int>, std::int64_t> tutte_rank_expansion(const vkb::RibbonGraph& g) {
  const std::size_t e = g.edge_count();
  const std::size_t v = g.vertex_count();
  const auto r_g = static_cast<int>(v - core_components(g, std::vector<bool>(e, true)));
  std::vector<std::vector<std::int64_t>> binom(e + v + 2, std::vector<std::int64_t>(e + v + 2, 0));
  for (std::size_t i = 0; i < binom.size(); ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  std::map<std::pair<int, int>, std::int64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    std::vector<bool> inc(e);
    int size = 0;
    for (std::size_t i = 0; i < e; ++i) {
      inc[i] = (mask >> i) & 1U;
      size += inc[i] ? 1 : 0;
    }
    const auto r_f = static_cast<int>(v - core_components(g, inc));
    const int a = r_g - r_f;
    const int b = size - r_f;
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) {
        const std::int64_t sign = ((a - i) + (b - j)) % 2 == 0 ? 1 : -1;
        out[{i, j}] += sign * binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
                       binom[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
      }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace oracle
