#pragma once

// Executable form of the identity
//
//   <D>(A, B, d) = A^n B^r d^(k-1) R_G(Ad/B, Bd/A, 1/d),   G = from_diagram(D),
//
// with n, r, k the nullity, rank and component count of G. Both sides are
// computed by separate pipelines (state sum over the diagram, subgraph sum
// over the ribbon graph) and compared structurally; each state is also
// paired with its subgraph so that a mismatch points at a crossing set.

#include <cstdint>
#include <vector>

#include "vkb/diagram.hpp"
#include "vkb/polyring.hpp"
#include "vkb/ribbon.hpp"

namespace vkb {

/// Spanning subgraph of `g_l` containing the edges of the crossings where `s`
/// differs from the Seifert state. `g_l` must be from_diagram(d).
SpanningSubgraph state_to_subgraph(const VirtualLinkDiagram& d, const RibbonGraph& g_l, const State& s);

/// e(F) - 2s(F) = beta(S), e(G) - e(F) + 2s(F) = alpha(S) and bc(F) = delta(S)
/// for F = state_to_subgraph(d, g_l, s).
bool check_counting_identities(const VirtualLinkDiagram& d, const RibbonGraph& g_l, const State& s);

/// A^n B^r d^(k-1) * br(x = Ad/B, y = Bd/A, z = 1/d), in bracket_ring().
/// Throws RingError if a half-integer exponent survives.
LaurentPoly transform_bollobas_riordan(const RibbonGraph& g, const LaurentPoly& br);

struct StateCheck {
  State state;
  std::vector<std::size_t> subgraph_edges;
  SubgraphStats stats;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t delta = 0;
  /// The three counting identities hold.
  bool identities_hold = false;
  /// Bracket term, transformed subgraph term and A^(e(G)-e(F)+2s) B^(e(F)-2s) d^(bc-1)
  /// are the same monomial.
  bool term_match = false;
};

struct VerifyOptions {
  EnumerationOptions enumeration{};
  /// Keep every state in the report; otherwise only failing ones.
  bool record_all_states = true;
};

struct VerificationReport {
  LaurentPoly lhs{bracket_ring()};
  LaurentPoly rhs{bracket_ring()};
  bool equal = false;
  std::vector<StateCheck> per_state;
  std::uint64_t states_checked = 0;
  std::uint64_t failing_states = 0;
  /// Prefactor exponents taken from G.
  std::int64_t nullity = 0;
  std::size_t rank = 0;
  std::size_t components = 0;
};

VerificationReport verify_identity(const VirtualLinkDiagram& d, const VerifyOptions& opts = {});

/// Deterministic pseudo-random abstract code with `n_crossings` crossings:
/// outgoing ends are matched to incoming ends by a random permutation, and
/// each crossing draws which strand is under and which way the over-strand
/// runs. Needs n_crossings >= 1.
VirtualLinkDiagram random_diagram(std::size_t n_crossings, std::uint64_t seed);

}  // namespace vkb
