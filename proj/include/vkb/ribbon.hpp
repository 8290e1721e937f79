#pragma once

// Signed ribbon graphs stored as rotation systems with twist bits.
//
// Each vertex is a disc with a counterclockwise cyclic list of half-edge
// attachments. Each edge joins two half-edges and carries a twist bit and a
// sign. With both end discs read counterclockwise, an untwisted band glues
// the surface orientably; a twisted band reverses orientation across it.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vkb/diagram.hpp"
#include "vkb/polyring.hpp"

namespace vkb {

using HalfEdgeId = std::int64_t;

struct RibbonEdge {
  HalfEdgeId a = 0;
  HalfEdgeId b = 0;
  bool twisted = false;
  int sign = +1;

  friend bool operator==(const RibbonEdge&, const RibbonEdge&) = default;
};

class RibbonGraph {
 public:
  /// Validates that every half-edge sits on exactly one vertex and exactly
  /// one edge. Throws ValidationError.
  static RibbonGraph from_parts(std::vector<std::vector<HalfEdgeId>> vertices, std::vector<RibbonEdge> edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::vector<HalfEdgeId>>& vertices() const noexcept { return vertices_; }
  const std::vector<RibbonEdge>& edges() const noexcept { return edges_; }
  const RibbonEdge& edge(std::size_t e) const { return edges_.at(e); }

  /// Vertex indices joined by edge e (equal for a loop).
  std::size_t edge_tail(std::size_t e) const { return he_vertex_[edge_he_[e][0]]; }
  std::size_t edge_head(std::size_t e) const { return he_vertex_[edge_he_[e][1]]; }
  std::size_t negative_edge_count() const noexcept;

  // Dense half-edge view: half-edges are numbered in vertex-rotation order.
  std::size_t half_edge_count() const noexcept { return he_vertex_.size(); }
  std::size_t half_edge_vertex(std::size_t h) const { return he_vertex_[h]; }
  std::size_t half_edge_edge(std::size_t h) const { return he_edge_[h]; }
  /// Dense half-edges of vertex v in rotation order.
  const std::vector<std::size_t>& rotation(std::size_t v) const { return rotation_[v]; }
  /// Dense half-edges of edge e, in (a, b) order.
  const std::array<std::size_t, 2>& edge_half_edges(std::size_t e) const { return edge_he_[e]; }

  friend bool operator==(const RibbonGraph& x, const RibbonGraph& y) {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
  }

 private:
  std::vector<std::vector<HalfEdgeId>> vertices_;
  std::vector<RibbonEdge> edges_;
  std::vector<std::size_t> he_vertex_;
  std::vector<std::size_t> he_edge_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::array<std::size_t, 2>> edge_he_;
};

/// All vertices of a parent graph plus a subset of its edges. The parent must
/// outlive the subgraph.
class SpanningSubgraph {
 public:
  SpanningSubgraph(const RibbonGraph& parent, std::vector<bool> included);
  /// Edge e is included iff bit e of `mask` is set.
  static SpanningSubgraph from_mask(const RibbonGraph& parent, std::uint64_t mask);
  static SpanningSubgraph empty(const RibbonGraph& parent);
  static SpanningSubgraph full(const RibbonGraph& parent);

  const RibbonGraph& parent() const noexcept { return *parent_; }
  const std::vector<bool>& included() const noexcept { return included_; }
  bool contains(std::size_t e) const { return included_.at(e); }
  std::size_t edge_count() const noexcept;
  /// Included edge indices in increasing order.
  std::vector<std::size_t> edge_indices() const;

  friend bool operator==(const SpanningSubgraph& x, const SpanningSubgraph& y) {
    return x.parent_ == y.parent_ && x.included_ == y.included_;
  }

 private:
  const RibbonGraph* parent_;
  std::vector<bool> included_;
};

struct SubgraphStats {
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::int64_t n = 0;
  std::size_t bc = 0;
  std::size_t e_minus = 0;
  std::size_t e_minus_complement = 0;
  /// s(F) in half-units: 2*s = e_minus - e_minus_complement.
  std::int64_t twice_s = 0;

  /// Exponent of z in the Bollobas-Riordan term: k - bc + n.
  std::int64_t z_exponent() const noexcept {
    return static_cast<std::int64_t>(k) - static_cast<std::int64_t>(bc) + n;
  }
  /// Euler characteristic after capping every boundary circle with a disc.
  std::int64_t capped_euler_characteristic() const noexcept {
    return static_cast<std::int64_t>(v) - static_cast<std::int64_t>(e) + static_cast<std::int64_t>(bc);
  }

  friend bool operator==(const SubgraphStats&, const SubgraphStats&) = default;
};

std::size_t components(const SpanningSubgraph& f);
std::size_t boundary_components(const SpanningSubgraph& f);
SubgraphStats stats(const SpanningSubgraph& f);
bool orientable(const SpanningSubgraph& f);

/// Signed Bollobas-Riordan polynomial, summed over all 2^e spanning
/// subgraphs, in bollobas_ring().
LaurentPoly bollobas_riordan(const RibbonGraph& g, const EnumerationOptions& opts = {});

/// The single Bollobas-Riordan term of spanning subgraph f (coefficient 1).
LaurentPoly bollobas_riordan_term(const RibbonGraph& g, const SubgraphStats& f);

/// Tutte polynomial of the core graph by deletion-contraction, in
/// tutte_ring(). Twists and rotations are ignored. Throws ValidationError if
/// any edge is negative.
LaurentPoly tutte(const RibbonGraph& g);

/// Ribbon graph of a diagram: one vertex per Seifert circle (plus an isolated
/// vertex per free loop), one half-twisted edge per crossing with the
/// crossing's sign. Crossing c gives edge c with half-edges 2c+1 (the strand
/// entering through s0) and 2c+2.
RibbonGraph from_diagram(const VirtualLinkDiagram& d);

/// Line-oriented format: `V h1 h2 ...` per vertex (counterclockwise), `E a b
/// t s` per edge with t in {0,1} and s in {+,-}; `#` comments.
RibbonGraph parse_ribbon(std::string_view text);
std::string print_ribbon(const RibbonGraph& g);

struct RandomRibbonOptions {
  std::size_t vertices = 1;
  std::size_t edges = 0;
  bool allow_negative = true;
  bool allow_twisted = true;
};

/// Deterministic pseudo-random ribbon graph: half-edges attached to uniformly
/// chosen vertices, rotations shuffled, twists and signs drawn per edge.
RibbonGraph random_ribbon_graph(const RandomRibbonOptions& opts, std::uint64_t seed);

/// Calls `visit` on every spanning subgraph of g, in mask order.
void for_each_subgraph(const RibbonGraph& g, const std::function<void(const SpanningSubgraph&)>& visit,
                       const EnumerationOptions& opts = {});

}  // namespace vkb
