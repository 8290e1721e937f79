#include "vkb/verify.hpp"

#include <map>
#include <string>

#include "vkb/detail/parallel.hpp"
#include "vkb/detail/random.hpp"
#include "vkb/error.hpp"

namespace vkb {

namespace {

SpanningSubgraph subgraph_for(const RibbonGraph& g_l, const State& seifert, const State& s) {
  if (s.size() != seifert.size() || g_l.edge_count() != s.size())
    throw ValidationError("state length does not match the ribbon graph");
  std::vector<bool> included(s.size());
  for (std::size_t c = 0; c < s.size(); ++c) included[c] = s[c] != seifert[c];
  return SpanningSubgraph(g_l, std::move(included));
}

bool identities_hold(const SubgraphStats& st, std::size_t edges_g, std::size_t alpha, std::size_t beta,
                     std::size_t delta) {
  const auto e_f = static_cast<std::int64_t>(st.e);
  return e_f - st.twice_s == static_cast<std::int64_t>(beta) &&
         static_cast<std::int64_t>(edges_g) - e_f + st.twice_s == static_cast<std::int64_t>(alpha) &&
         st.bc == delta;
}

std::map<std::string, LaurentPoly> identity_images() {
  const RingPtr half = half_bracket_ring();
  auto mono = [&](std::int64_t a, std::int64_t b, std::int64_t d) {
    return LaurentPoly::monomial(half, Monomial({a, b, d}));
  };
  // Units are halves: A d / B, B d / A, 1 / d.
  return {{"x", mono(2, -2, 2)}, {"y", mono(-2, 2, 2)}, {"z", mono(0, 0, -2)}};
}

LaurentPoly prefactor(const RibbonGraph& g) {
  const SubgraphStats full = stats(SpanningSubgraph::full(g));
  return LaurentPoly::monomial(half_bracket_ring(),
                               Monomial({2 * full.n, 2 * static_cast<std::int64_t>(full.r),
                                         2 * (static_cast<std::int64_t>(full.k) - 1)}));
}

LaurentPoly bracket_monomial(std::int64_t a, std::int64_t b, std::int64_t d) {
  return LaurentPoly::monomial(bracket_ring(), Monomial({a, b, d}));
}

}  // namespace

SpanningSubgraph state_to_subgraph(const VirtualLinkDiagram& d, const RibbonGraph& g_l, const State& s) {
  return subgraph_for(g_l, seifert_state(d), s);
}

bool check_counting_identities(const VirtualLinkDiagram& d, const RibbonGraph& g_l, const State& s) {
  const SubgraphStats st = stats(state_to_subgraph(d, g_l, s));
  return identities_hold(st, g_l.edge_count(), s.alpha(), s.beta(), split_circles(d, s));
}

LaurentPoly transform_bollobas_riordan(const RibbonGraph& g, const LaurentPoly& br) {
  const LaurentPoly in_halves = prefactor(g) * substitute(br, identity_images(), half_bracket_ring());
  return coerce(in_halves, bracket_ring());
}

VerificationReport verify_identity(const VirtualLinkDiagram& d, const VerifyOptions& opts) {
  const std::size_t n = d.crossing_count();
  if (n > opts.enumeration.max_bits || n > 62)
    throw EnumerationLimitError("verify: 2^" + std::to_string(n) + " states exceed the enumeration cap of 2^" +
                                std::to_string(opts.enumeration.max_bits));

  VerificationReport report;
  const RibbonGraph g = from_diagram(d);
  report.lhs = kauffman_bracket(d, opts.enumeration);
  report.rhs = transform_bollobas_riordan(g, bollobas_riordan(g, opts.enumeration));

  const SubgraphStats full = stats(SpanningSubgraph::full(g));
  report.nullity = full.n;
  report.rank = full.r;
  report.components = full.k;

  const State seifert = seifert_state(d);
  const auto images = identity_images();
  const LaurentPoly pre = prefactor(g);

  struct Acc {
    std::vector<StateCheck> records;
    std::uint64_t failing = 0;
  };
  Acc acc = detail::parallel_reduce<Acc>(
      std::uint64_t{1} << n, opts.enumeration.threads, [] { return Acc{}; },
      [&](Acc& out, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t index = begin; index < end; ++index) {
          StateCheck check;
          check.state = State::from_index(n, index);
          const SpanningSubgraph f = subgraph_for(g, seifert, check.state);
          check.subgraph_edges = f.edge_indices();
          check.stats = stats(f);
          check.alpha = check.state.alpha();
          check.beta = check.state.beta();
          check.delta = split_circles(d, check.state);
          check.identities_hold = identities_hold(check.stats, g.edge_count(), check.alpha, check.beta, check.delta);

          const LaurentPoly bracket_term = bracket_monomial(static_cast<std::int64_t>(check.alpha),
                                                            static_cast<std::int64_t>(check.beta),
                                                            static_cast<std::int64_t>(check.delta) - 1);
          const auto e_f = static_cast<std::int64_t>(check.stats.e);
          const LaurentPoly bookkeeping =
              bracket_monomial(static_cast<std::int64_t>(g.edge_count()) - e_f + check.stats.twice_s,
                               e_f - check.stats.twice_s, static_cast<std::int64_t>(check.stats.bc) - 1);
          bool match = false;
          try {
            const LaurentPoly subgraph_term =
                coerce(pre * substitute(bollobas_riordan_term(g, check.stats), images, half_bracket_ring()),
                       bracket_ring());
            match = subgraph_term == bracket_term && bookkeeping == bracket_term;
          } catch (const Error&) {
            match = false;
          }
          check.term_match = match;

          const bool ok = check.identities_hold && check.term_match;
          if (!ok) ++out.failing;
          if (!ok || opts.record_all_states) out.records.push_back(std::move(check));
        }
      },
      [](Acc& into, Acc&& from) {
        into.failing += from.failing;
        for (auto& r : from.records) into.records.push_back(std::move(r));
      });

  report.per_state = std::move(acc.records);
  report.failing_states = acc.failing;
  report.states_checked = std::uint64_t{1} << n;
  report.equal = report.lhs == report.rhs && acc.failing == 0;
  return report;
}

VirtualLinkDiagram random_diagram(std::size_t n_crossings, std::uint64_t seed) {
  if (n_crossings == 0) throw ValidationError("random diagram needs at least one crossing");
  std::mt19937_64 rng(detail::splitmix64(seed));
  const std::size_t n = n_crossings;

  // Strand j of crossing c is end 2c+j. Out-end i is joined to in-end perm[i]
  // by arc i+1.
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  detail::shuffle(perm, rng);
  std::vector<ArcId> arc_out(2 * n);
  std::vector<ArcId> arc_in(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    arc_out[i] = static_cast<ArcId>(i + 1);
    arc_in[perm[i]] = static_cast<ArcId>(i + 1);
  }

  std::vector<CrossingCode> codes(n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t under = 2 * c + detail::uniform_below(rng, 2);
    const std::size_t over = under ^ 1U;
    const bool positive = detail::uniform_below(rng, 2) == 1;
    auto& s = codes[c].slots;
    s[0] = arc_in[under];
    s[2] = arc_out[under];
    if (positive) {
      s[3] = arc_in[over];
      s[1] = arc_out[over];
    } else {
      s[1] = arc_in[over];
      s[3] = arc_out[over];
    }
  }
  return VirtualLinkDiagram::from_codes(std::move(codes));
}

}  // namespace vkb
