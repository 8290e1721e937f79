#include "vkb/ribbon.hpp"

#include <array>
#include <charconv>
#include <map>
#include <sstream>

#include "vkb/detail/disjoint_sets.hpp"
#include "vkb/detail/parallel.hpp"
#include "vkb/detail/random.hpp"
#include "vkb/error.hpp"

namespace vkb {

// ---------------------------------------------------------------- RibbonGraph

// ValidationError::item() numbers vertices first, then edges.
RibbonGraph RibbonGraph::from_parts(std::vector<std::vector<HalfEdgeId>> vertices, std::vector<RibbonEdge> edges) {
  RibbonGraph g;
  const std::size_t nv = vertices.size();
  std::map<HalfEdgeId, std::size_t> dense;
  g.rotation_.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    for (HalfEdgeId h : vertices[v]) {
      auto [it, inserted] = dense.try_emplace(h, g.he_vertex_.size());
      if (!inserted) throw ValidationError("half-edge " + std::to_string(h) + " appears twice among vertices", v);
      g.rotation_[v].push_back(it->second);
      g.he_vertex_.push_back(v);
    }
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  g.he_edge_.assign(g.he_vertex_.size(), kUnset);
  g.edge_he_.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const RibbonEdge& edge = edges[e];
    if (edge.a == edge.b)
      throw ValidationError("edge uses half-edge " + std::to_string(edge.a) + " at both ends", nv + e);
    if (edge.sign != 1 && edge.sign != -1) throw ValidationError("edge sign must be +1 or -1", nv + e);
    for (int end = 0; end < 2; ++end) {
      const HalfEdgeId h = end == 0 ? edge.a : edge.b;
      auto it = dense.find(h);
      if (it == dense.end())
        throw ValidationError("half-edge " + std::to_string(h) + " is not on any vertex", nv + e);
      if (g.he_edge_[it->second] != kUnset)
        throw ValidationError("half-edge " + std::to_string(h) + " appears in two edges", nv + e);
      g.he_edge_[it->second] = e;
      g.edge_he_[e][static_cast<std::size_t>(end)] = it->second;
    }
  }
  for (const auto& [h, idx] : dense)
    if (g.he_edge_[idx] == kUnset)
      throw ValidationError("half-edge " + std::to_string(h) + " is not on any edge", g.he_vertex_[idx]);

  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  return g;
}

std::size_t RibbonGraph::negative_edge_count() const noexcept {
  std::size_t count = 0;
  for (const RibbonEdge& e : edges_) count += e.sign < 0 ? 1 : 0;
  return count;
}

// ---------------------------------------------------------------- SpanningSubgraph

SpanningSubgraph::SpanningSubgraph(const RibbonGraph& parent, std::vector<bool> included)
    : parent_(&parent), included_(std::move(included)) {
  if (included_.size() != parent.edge_count())
    throw ValidationError("subgraph edge set has the wrong length for its parent graph");
}

SpanningSubgraph SpanningSubgraph::from_mask(const RibbonGraph& parent, std::uint64_t mask) {
  if (parent.edge_count() > 64) throw ValidationError("edge mask supports at most 64 edges");
  std::vector<bool> included(parent.edge_count());
  for (std::size_t e = 0; e < included.size(); ++e) included[e] = (mask >> e) & 1U;
  return SpanningSubgraph(parent, std::move(included));
}

SpanningSubgraph SpanningSubgraph::empty(const RibbonGraph& parent) {
  return SpanningSubgraph(parent, std::vector<bool>(parent.edge_count(), false));
}

SpanningSubgraph SpanningSubgraph::full(const RibbonGraph& parent) {
  return SpanningSubgraph(parent, std::vector<bool>(parent.edge_count(), true));
}

std::size_t SpanningSubgraph::edge_count() const noexcept {
  std::size_t n = 0;
  for (bool b : included_) n += b ? 1 : 0;
  return n;
}

std::vector<std::size_t> SpanningSubgraph::edge_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < included_.size(); ++e)
    if (included_[e]) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------- statistics

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Scratch buffers for repeated subgraph statistics on one graph.
class SubgraphCounter {
 public:
  explicit SubgraphCounter(const RibbonGraph& g)
      : g_(g), vertex_match_(2 * g.half_edge_count()), visited_(2 * g.half_edge_count()) {}

  template <class Included>
  std::size_t components(Included included) {
    sets_.reset(g_.vertex_count());
    for (std::size_t e = 0; e < g_.edge_count(); ++e)
      if (included(e)) sets_.unite(g_.edge_tail(e), g_.edge_head(e));
    return sets_.set_count();
  }

  // Each included attachment contributes two boundary points: 2h (where the
  // segment starts, going counterclockwise) and 2h+1 (where it ends). The
  // vertex boundary joins the end of one attachment to the start of the next
  // included one; a band joins its two attachments' points, crossing the
  // sides over unless it is twisted. Boundary circles are the cycles of the
  // two alternating matchings.
  template <class Included>
  std::size_t boundary_components(Included included) {
    std::fill(vertex_match_.begin(), vertex_match_.end(), kNone);
    std::size_t bare_vertices = 0;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      std::size_t first = kNone;
      std::size_t prev = kNone;
      for (std::size_t h : g_.rotation(v)) {
        if (!included(g_.half_edge_edge(h))) continue;
        if (prev == kNone) {
          first = h;
        } else {
          link_vertex(prev, h);
        }
        prev = h;
      }
      if (first == kNone) {
        ++bare_vertices;
      } else {
        link_vertex(prev, first);
      }
    }

    std::fill(visited_.begin(), visited_.end(), 0);
    std::size_t circles = 0;
    for (std::size_t p = 0; p < vertex_match_.size(); ++p) {
      if (vertex_match_[p] == kNone || visited_[p]) continue;
      ++circles;
      std::size_t q = p;
      do {
        visited_[q] = 1;
        const std::size_t across = vertex_match_[q];
        visited_[across] = 1;
        q = band_match(across);
      } while (q != p);
    }
    return circles + bare_vertices;
  }

 private:
  void link_vertex(std::size_t h, std::size_t next) {
    vertex_match_[2 * h + 1] = 2 * next;
    vertex_match_[2 * next] = 2 * h + 1;
  }

  std::size_t band_match(std::size_t point) const {
    const std::size_t h = point / 2;
    const std::size_t side = point % 2;
    const std::size_t e = g_.half_edge_edge(h);
    const auto& ends = g_.edge_half_edges(e);
    const std::size_t other = ends[0] == h ? ends[1] : ends[0];
    return g_.edge(e).twisted ? 2 * other + side : 2 * other + (1 - side);
  }

  const RibbonGraph& g_;
  detail::DisjointSets sets_;
  std::vector<std::size_t> vertex_match_;
  std::vector<char> visited_;
};

template <class Included>
SubgraphStats compute_stats(const RibbonGraph& g, SubgraphCounter& counter, Included included) {
  SubgraphStats s;
  s.v = g.vertex_count();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const bool neg = g.edge(e).sign < 0;
    if (included(e)) {
      ++s.e;
      s.e_minus += neg ? 1 : 0;
    } else {
      s.e_minus_complement += neg ? 1 : 0;
    }
  }
  s.k = counter.components(included);
  s.r = s.v - s.k;
  s.n = static_cast<std::int64_t>(s.e) - static_cast<std::int64_t>(s.r);
  s.bc = counter.boundary_components(included);
  s.twice_s = static_cast<std::int64_t>(s.e_minus) - static_cast<std::int64_t>(s.e_minus_complement);
  return s;
}

std::size_t graph_rank(const RibbonGraph& g) {
  SubgraphCounter counter(g);
  return g.vertex_count() - counter.components([](std::size_t) { return true; });
}

}  // namespace

std::size_t components(const SpanningSubgraph& f) {
  SubgraphCounter counter(f.parent());
  return counter.components([&](std::size_t e) { return f.contains(e); });
}

std::size_t boundary_components(const SpanningSubgraph& f) {
  SubgraphCounter counter(f.parent());
  return counter.boundary_components([&](std::size_t e) { return f.contains(e); });
}

SubgraphStats stats(const SpanningSubgraph& f) {
  SubgraphCounter counter(f.parent());
  return compute_stats(f.parent(), counter, [&](std::size_t e) { return f.contains(e); });
}

bool orientable(const SpanningSubgraph& f) {
  // Two-colour the vertex discs by orientation; a twisted band must join
  // discs of opposite colour, an untwisted one discs of the same colour.
  const RibbonGraph& g = f.parent();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!f.contains(e)) continue;
    const int t = g.edge(e).twisted ? 1 : 0;
    adj[g.edge_tail(e)].push_back({g.edge_head(e), t});
    adj[g.edge_head(e)].push_back({g.edge_tail(e), t});
  }
  std::vector<int> colour(g.vertex_count(), -1);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (auto [w, t] : adj[u]) {
        const int want = colour[u] ^ t;
        if (colour[w] < 0) {
          colour[w] = want;
          stack.push_back(w);
        } else if (colour[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- polynomials

namespace {

std::array<std::int64_t, 3> term_units(std::size_t rank_g, const SubgraphStats& s) {
  const std::int64_t x = 2 * (static_cast<std::int64_t>(rank_g) - static_cast<std::int64_t>(s.r)) + s.twice_s;
  const std::int64_t y = 2 * s.n - s.twice_s;
  return {x, y, s.z_exponent()};
}

}  // namespace

LaurentPoly bollobas_riordan_term(const RibbonGraph& g, const SubgraphStats& f) {
  const auto u = term_units(graph_rank(g), f);
  return LaurentPoly::monomial(bollobas_ring(), Monomial({u[0], u[1], u[2]}));
}

LaurentPoly bollobas_riordan(const RibbonGraph& g, const EnumerationOptions& opts) {
  const std::size_t e = g.edge_count();
  if (e > opts.max_bits || e > 62)
    throw EnumerationLimitError("bollobas-riordan: 2^" + std::to_string(e) +
                                " subgraphs exceed the enumeration cap of 2^" + std::to_string(opts.max_bits));
  const std::size_t rank_g = graph_rank(g);
  using Counts = std::map<std::array<std::int64_t, 3>, std::uint64_t>;

  Counts counts = detail::parallel_reduce<Counts>(
      std::uint64_t{1} << e, opts.threads, [] { return Counts{}; },
      [&](Counts& acc, std::uint64_t begin, std::uint64_t end) {
        SubgraphCounter counter(g);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const auto s = compute_stats(g, counter, [mask](std::size_t i) { return ((mask >> i) & 1U) != 0; });
          ++acc[term_units(rank_g, s)];
        }
      },
      [](Counts& into, Counts&& from) {
        for (const auto& [k, c] : from) into[k] += c;
      });

  LaurentPoly result(bollobas_ring());
  for (const auto& [u, c] : counts) result.add_term(Monomial({u[0], u[1], u[2]}), Integer(c));
  return result;
}

namespace {

using CoreEdges = std::vector<std::pair<std::size_t, std::size_t>>;

bool connected_without(const CoreEdges& edges, std::size_t vertices, std::size_t u, std::size_t v) {
  detail::DisjointSets sets(vertices);
  for (const auto& [a, b] : edges) sets.unite(a, b);
  return sets.find(u) == sets.find(v);
}

LaurentPoly tutte_rec(CoreEdges edges, std::size_t vertices) {
  const RingPtr ring = tutte_ring();
  if (edges.empty()) return LaurentPoly::constant(ring, 1);
  const auto [u, v] = edges.back();
  edges.pop_back();
  const LaurentPoly x = LaurentPoly::variable(ring, "x");
  const LaurentPoly y = LaurentPoly::variable(ring, "y");
  if (u == v) return y * tutte_rec(std::move(edges), vertices);

  CoreEdges contracted = edges;
  for (auto& [a, b] : contracted) {
    if (a == v) a = u;
    if (b == v) b = u;
  }
  if (!connected_without(edges, vertices, u, v)) return x * tutte_rec(std::move(contracted), vertices);
  return tutte_rec(std::move(edges), vertices) + tutte_rec(std::move(contracted), vertices);
}

}  // namespace

LaurentPoly tutte(const RibbonGraph& g) {
  CoreEdges edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).sign < 0)
      throw ValidationError("tutte polynomial is only defined here for all-positive graphs",
                            g.vertex_count() + e);
    edges.emplace_back(g.edge_tail(e), g.edge_head(e));
  }
  return tutte_rec(std::move(edges), g.vertex_count());
}

// ---------------------------------------------------------------- from_diagram

RibbonGraph from_diagram(const VirtualLinkDiagram& d) {
  const std::size_t n = d.crossing_count();
  const State seifert = seifert_state(d);

  // Strand 0 of a crossing enters through s0, strand 1 through the other
  // incoming slot. The Seifert splitting decides where each strand leaves.
  auto entry_slot = [&](std::size_t c, int strand) {
    if (strand == 0) return 0;
    return d.is_outgoing(c, 1) ? 3 : 1;
  };
  auto exit_slot = [&](std::size_t c, int strand) {
    const int in = entry_slot(c, strand);
    for (const auto& pair : splitting_pairs(seifert[c])) {
      if (pair[0] == in) return pair[1];
      if (pair[1] == in) return pair[0];
    }
    throw ValidationError("seifert splitting does not contain entry slot", c);
  };

  std::vector<std::vector<HalfEdgeId>> vertices;
  std::vector<std::array<bool, 2>> seen(n, {false, false});
  for (std::size_t c0 = 0; c0 < n; ++c0) {
    for (int s0 = 0; s0 < 2; ++s0) {
      if (seen[c0][static_cast<std::size_t>(s0)]) continue;
      std::vector<HalfEdgeId> circle;
      std::size_t c = c0;
      int strand = s0;
      while (!seen[c][static_cast<std::size_t>(strand)]) {
        seen[c][static_cast<std::size_t>(strand)] = true;
        circle.push_back(static_cast<HalfEdgeId>(2 * c + 1 + static_cast<std::size_t>(strand)));
        const ArcEnd head = d.arc_head(d.dense_arc(c, exit_slot(c, strand)));
        c = head.crossing;
        strand = head.slot == 0 ? 0 : 1;
      }
      vertices.push_back(std::move(circle));
    }
  }
  for (std::size_t i = 0; i < d.free_loops(); ++i) vertices.emplace_back();

  std::vector<RibbonEdge> edges;
  edges.reserve(n);
  for (std::size_t c = 0; c < n; ++c)
    edges.push_back({static_cast<HalfEdgeId>(2 * c + 1), static_cast<HalfEdgeId>(2 * c + 2), true, sign(d, c)});
  return RibbonGraph::from_parts(std::move(vertices), std::move(edges));
}

// ---------------------------------------------------------------- text format

namespace {

bool parse_int(std::string_view token, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

RibbonGraph parse_ribbon(std::string_view text) {
  std::vector<std::vector<HalfEdgeId>> vertices;
  std::vector<RibbonEdge> edges;
  std::vector<std::size_t> vertex_line;
  std::vector<std::size_t> edge_line;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;

    if (tokens[0] == "V") {
      std::vector<HalfEdgeId> rotation;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::int64_t h = 0;
        if (!parse_int(tokens[i], h)) throw ParseError("half-edge id '" + tokens[i] + "' is not an integer", line_no);
        rotation.push_back(h);
      }
      vertices.push_back(std::move(rotation));
      vertex_line.push_back(line_no);
    } else if (tokens[0] == "E") {
      if (tokens.size() != 5) throw ParseError("edge line needs: E a b twist sign", line_no);
      RibbonEdge e;
      if (!parse_int(tokens[1], e.a) || !parse_int(tokens[2], e.b))
        throw ParseError("edge half-edge ids must be integers", line_no);
      if (tokens[3] == "0") {
        e.twisted = false;
      } else if (tokens[3] == "1") {
        e.twisted = true;
      } else {
        throw ParseError("edge twist must be 0 or 1", line_no);
      }
      if (tokens[4] == "+") {
        e.sign = 1;
      } else if (tokens[4] == "-") {
        e.sign = -1;
      } else {
        throw ParseError("edge sign must be + or -", line_no);
      }
      edges.push_back(e);
      edge_line.push_back(line_no);
    } else {
      throw ParseError("unknown record '" + tokens[0] + "'", line_no);
    }
  }

  try {
    return RibbonGraph::from_parts(std::move(vertices), std::move(edges));
  } catch (const ValidationError& e) {
    if (e.item()) {
      const std::size_t i = *e.item();
      if (i < vertex_line.size()) throw ParseError(e.what(), vertex_line[i]);
      if (i - vertex_line.size() < edge_line.size()) throw ParseError(e.what(), edge_line[i - vertex_line.size()]);
    }
    throw ParseError(e.what());
  }
}

std::string print_ribbon(const RibbonGraph& g) {
  std::ostringstream os;
  for (const auto& rotation : g.vertices()) {
    os << 'V';
    for (HalfEdgeId h : rotation) os << ' ' << h;
    os << '\n';
  }
  for (const RibbonEdge& e : g.edges())
    os << "E " << e.a << ' ' << e.b << ' ' << (e.twisted ? 1 : 0) << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  return os.str();
}

// ---------------------------------------------------------------- random graphs

RibbonGraph random_ribbon_graph(const RandomRibbonOptions& opts, std::uint64_t seed) {
  if (opts.vertices == 0) throw ValidationError("random ribbon graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<HalfEdgeId>> vertices(opts.vertices);
  std::vector<RibbonEdge> edges;
  for (std::size_t e = 0; e < opts.edges; ++e) {
    RibbonEdge edge;
    edge.a = static_cast<HalfEdgeId>(2 * e + 1);
    edge.b = static_cast<HalfEdgeId>(2 * e + 2);
    vertices[detail::uniform_below(rng, opts.vertices)].push_back(edge.a);
    vertices[detail::uniform_below(rng, opts.vertices)].push_back(edge.b);
    edge.twisted = opts.allow_twisted && detail::uniform_below(rng, 2) == 1;
    edge.sign = opts.allow_negative && detail::uniform_below(rng, 2) == 1 ? -1 : 1;
    edges.push_back(edge);
  }
  for (auto& rotation : vertices) detail::shuffle(rotation, rng);
  return RibbonGraph::from_parts(std::move(vertices), std::move(edges));
}

void for_each_subgraph(const RibbonGraph& g, const std::function<void(const SpanningSubgraph&)>& visit,
                       const EnumerationOptions& opts) {
  const std::size_t e = g.edge_count();
  if (e > opts.max_bits || e > 62)
    throw EnumerationLimitError("subgraph enumeration: 2^" + std::to_string(e) +
                                " subgraphs exceed the enumeration cap of 2^" + std::to_string(opts.max_bits));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) visit(SpanningSubgraph::from_mask(g, mask));
}

}  // namespace vkb
