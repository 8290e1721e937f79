#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "vkb/error.hpp"
#include "vkb/ribbon.hpp"
#include "vkb/verify.hpp"

using namespace vkb;

namespace {

LaurentPoly R(const char* text) { return parse_poly(bollobas_ring(), text); }
LaurentPoly T(const char* text) { return parse_poly(tutte_ring(), text); }

RibbonGraph G(const char* text) { return parse_ribbon(text); }

LaurentPoly tutte_from_expansion(const RibbonGraph& g) {
  LaurentPoly p(tutte_ring());
  for (const auto& [ij, c] : oracle::tutte_rank_expansion(g)) p.add_term(Monomial({ij.first, ij.second}), c);
  return p;
}

LaurentPoly tutte_specialization(const RibbonGraph& g) {
  const RingPtr t = tutte_ring();
  return substitute(bollobas_riordan(g), {{"x", T("x - 1")}, {"y", T("y - 1")}, {"z", T("1")}}, t);
}

}  // namespace

TEST_CASE("three-edge graph: subgraph statistics table") {
  const RibbonGraph g = support::ribbon("paper_graph.rg");
  REQUIRE(g.vertex_count() == 2);
  REQUIRE(g.edge_count() == 3);
  // Edge sets in the table's column order; edge 0 is the positive loop.
  const std::vector<std::vector<bool>> columns{{false, true, true}, {false, true, false}, {false, false, true},
                                               {false, false, false}, {true, true, true}, {true, true, false},
                                               {true, false, true},  {true, false, false}};
  struct Row {
    std::size_t k, r;
    std::int64_t n;
    std::size_t bc;
    std::int64_t twice_s;
  };
  const Row rows[] = {{1, 1, 1, 2, 2}, {1, 1, 0, 1, 0}, {1, 1, 0, 1, 0}, {2, 0, 0, 2, -2},
                      {1, 1, 2, 1, 2}, {1, 1, 1, 1, 0}, {1, 1, 1, 1, 0}, {2, 0, 1, 2, -2}};
  for (std::size_t i = 0; i < 8; ++i) {
    CAPTURE(i);
    const SubgraphStats s = stats(SpanningSubgraph(g, columns[i]));
    CHECK(s.k == rows[i].k);
    CHECK(s.r == rows[i].r);
    CHECK(s.n == rows[i].n);
    CHECK(s.bc == rows[i].bc);
    CHECK(s.twice_s == rows[i].twice_s);
  }
  CHECK(bollobas_riordan(g) == R("x + 2 + y + x*y*z^2 + 2*y*z + y^2*z"));
  CHECK(components(SpanningSubgraph::empty(g)) == 2);
  CHECK(components(SpanningSubgraph::full(g)) == 1);
  CHECK(boundary_components(SpanningSubgraph::full(g)) == 1);
  const SubgraphStats full = stats(SpanningSubgraph::full(g));
  CHECK(full.z_exponent() == 2);
  // The twisted loop makes the surface non-orientable even though the
  // z-exponent happens to be even.
  CHECK_FALSE(orientable(SpanningSubgraph::full(g)));
  CHECK(orientable(SpanningSubgraph(g, {false, true, true})));
}

TEST_CASE("from_diagram of the three-crossing knot matches the stored graph") {
  const RibbonGraph g = from_diagram(support::diagram("paper_knot.vld"));
  CHECK(g == support::ribbon("paper_graph.rg"));
  const SubgraphStats full = stats(SpanningSubgraph::full(g));
  CHECK(full.k == 1);
  CHECK(full.r == 1);
  CHECK(full.n == 2);
  for (const RibbonEdge& e : g.edges()) CHECK(e.twisted);
}

TEST_CASE("from_diagram small cases") {
  const RibbonGraph u = from_diagram(support::diagram("unknot.vld"));
  CHECK(u.vertex_count() == 1);
  CHECK(u.edge_count() == 0);
  CHECK(bollobas_riordan(u) == R("1"));

  const RibbonGraph h = from_diagram(support::diagram("hopf.vld"));
  CHECK(h.vertex_count() == 2);
  REQUIRE(h.edge_count() == 2);
  for (std::size_t e = 0; e < 2; ++e) {
    CHECK(h.edge(e).sign == 1);
    CHECK(h.edge_tail(e) != h.edge_head(e));
  }
  CHECK(tutte(h) == T("x + y"));

  const auto d = parse_diagram("X 1 2 3 4\nX 3 2 1 4\nL 2");
  const RibbonGraph g = from_diagram(d);
  CHECK(g.vertex_count() == 2 + 2);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("annulus and Moebius band") {
  const RibbonGraph annulus = G("V 1 2\nE 1 2 0 +");
  const RibbonGraph moebius = G("V 1 2\nE 1 2 1 +");
  CHECK(boundary_components(SpanningSubgraph::full(annulus)) == 2);
  CHECK(boundary_components(SpanningSubgraph::full(moebius)) == 1);
  CHECK(bollobas_riordan(annulus) == R("1 + y"));
  CHECK(bollobas_riordan(moebius) == R("1 + y*z"));
  CHECK(orientable(SpanningSubgraph::full(annulus)));
  CHECK_FALSE(orientable(SpanningSubgraph::full(moebius)));
  CHECK(orientable(SpanningSubgraph::empty(moebius)));
  CHECK(bollobas_riordan(G("V")) == R("1"));
}

TEST_CASE("torus and interlaced loops") {
  // Two interlaced untwisted loops on one vertex: a punctured torus.
  const RibbonGraph torus = G("V 1 3 2 4\nE 1 2 0 +\nE 3 4 0 +");
  const SubgraphStats s = stats(SpanningSubgraph::full(torus));
  CHECK(s.bc == 1);
  CHECK(orientable(SpanningSubgraph::full(torus)));
  // Euler characteristic of the capped surface is 2 - 2g.
  CHECK(s.capped_euler_characteristic() == 0);
  CHECK(s.z_exponent() == 2);
  // The same loops not interlaced form a planar sphere with three holes.
  const SubgraphStats planar = stats(SpanningSubgraph::full(G("V 1 2 3 4\nE 1 2 0 +\nE 3 4 0 +")));
  CHECK(planar.bc == 3);
  CHECK(planar.capped_euler_characteristic() == 2);
  CHECK(planar.z_exponent() == 0);
}

TEST_CASE("negative edges shift s") {
  const RibbonGraph g = G("V 1 2 3 4\nE 1 2 0 -\nE 3 4 0 +");
  CHECK(stats(SpanningSubgraph::empty(g)).twice_s == -1);
  CHECK(stats(SpanningSubgraph::full(g)).twice_s == 1);
  CHECK(stats(SpanningSubgraph::from_mask(g, 1)).twice_s == 1);
  CHECK(stats(SpanningSubgraph::from_mask(g, 2)).twice_s == -1);
  CHECK(print_poly(bollobas_riordan(G("V 1 2\nE 1 2 0 -"))) == "x^(-1/2)*y^(1/2) + x^(1/2)*y^(1/2)");
}

TEST_CASE("tutte base cases") {
  CHECK(tutte(G("V 1 2\nE 1 2 1 +")) == T("y"));
  CHECK(tutte(G("V 1\nV 2\nE 1 2 0 +")) == T("x"));
  CHECK(tutte(G("V 1 3\nV 2 4\nE 1 2 0 +\nE 3 4 0 +")) == T("x + y"));
  CHECK(tutte(G("V\nV")) == T("1"));
  CHECK_THROWS_AS(tutte(G("V 1 2\nE 1 2 0 -")), ValidationError);
}

TEST_CASE("boundary count agrees with face tracing") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RandomRibbonOptions opts;
    opts.vertices = 1 + seed % 4;
    opts.edges = seed % 7;
    const RibbonGraph g = random_ribbon_graph(opts, seed);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
      const SpanningSubgraph f = SpanningSubgraph::from_mask(g, mask);
      CHECK(boundary_components(f) == oracle::traced_boundary(g, f.included()));
      CHECK(components(f) == oracle::core_components(g, f.included()));
    }
  }
}

TEST_CASE("Euler identity, orientability parity and rank bounds") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomRibbonOptions opts;
    opts.vertices = 1 + seed % 5;
    opts.edges = seed % 8;
    const RibbonGraph g = random_ribbon_graph(opts, seed);
    const SubgraphStats full = stats(SpanningSubgraph::full(g));
    for_each_subgraph(g, [&](const SpanningSubgraph& f) {
      const SubgraphStats s = stats(f);
      const auto k = static_cast<std::int64_t>(s.k);
      CHECK(s.z_exponent() == 2 * k - s.capped_euler_characteristic());
      if (orientable(f)) CHECK(s.z_exponent() % 2 == 0);
      CHECK(s.z_exponent() >= 0);
      CHECK(s.r <= full.r);
      CHECK(s.n >= 0);
      CHECK(s.n <= static_cast<std::int64_t>(s.e));
      CHECK(s.r == s.v - s.k);
      CHECK(s.twice_s == static_cast<std::int64_t>(s.e_minus) - static_cast<std::int64_t>(s.e_minus_complement));
    });
  }
}

TEST_CASE("Tutte specialization on random positive graphs") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    RandomRibbonOptions opts;
    opts.vertices = 1 + seed % 5;
    opts.edges = seed % 9;
    opts.allow_negative = false;
    const RibbonGraph g = random_ribbon_graph(opts, seed);
    const LaurentPoly t = tutte(g);
    CHECK(t == tutte_from_expansion(g));
    CHECK(tutte_specialization(g) == t);
    CHECK(bollobas_riordan(g).evaluate_at_one() == Integer(1) << g.edge_count());
  }
}

TEST_CASE("ribbon text format") {
  const RibbonGraph g = support::ribbon("paper_graph.rg");
  CHECK(parse_ribbon(print_ribbon(g)) == g);
  const RibbonGraph h = from_diagram(support::diagram("figure8.vld"));
  const RibbonGraph back = parse_ribbon(print_ribbon(h));
  CHECK(back == h);
  CHECK(bollobas_riordan(back) == bollobas_riordan(h));

  auto line_of = [](const char* text) -> std::optional<std::size_t> {
    try {
      parse_ribbon(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::nullopt;
  };
  CHECK(line_of("V 1 2\nV 3\nE 1 2 0 +") == std::optional<std::size_t>(2));  // orphan half-edge 3
  CHECK(line_of("V 1 2\nE 1 2 0 +\nE 1 2 1 +") == std::optional<std::size_t>(3));
  CHECK(line_of("V 1 2 1\nE 1 2 0 +") == std::optional<std::size_t>(1));
  CHECK(line_of("V 1 2\nE 1 2 2 +") == std::optional<std::size_t>(2));
  CHECK(line_of("V 1 2\nE 1 2 0 *") == std::optional<std::size_t>(2));
  CHECK(line_of("V 1\nE 1 9 0 +") == std::optional<std::size_t>(2));
  CHECK(line_of("W 1") == std::optional<std::size_t>(1));
}

TEST_CASE("enumeration is thread-count independent") {
  RandomRibbonOptions opts;
  opts.vertices = 4;
  opts.edges = 14;
  const RibbonGraph g = random_ribbon_graph(opts, 5);
  EnumerationOptions one;
  one.threads = 1;
  EnumerationOptions many;
  many.threads = 3;
  CHECK(bollobas_riordan(g, one) == bollobas_riordan(g, many));
  EnumerationOptions small;
  small.max_bits = 10;
  CHECK_THROWS_AS(bollobas_riordan(g, small), EnumerationLimitError);
}
