#include "vkb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vkb/detail/random.hpp"
#include "vkb/diagram.hpp"
#include "vkb/error.hpp"
#include "vkb/ribbon.hpp"
#include "vkb/verify.hpp"

namespace vkb::cli {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct InputSpec {
  std::string file;
  std::string code;
  std::uint64_t max_states = std::uint64_t{1} << 24;
  unsigned threads = 0;
};

void add_input_options(CLI::App& sub, InputSpec& spec) {
  sub.add_option("file", spec.file, "Input file, or - for stdin");
  sub.add_option("--code", spec.code, "Inline input; ';' separates lines");
  sub.add_option("--max-states", spec.max_states, "Largest state or subgraph count to enumerate")
      ->check(CLI::PositiveNumber);
  sub.add_option("--threads", spec.threads, "Worker threads (0 = all cores)");
}

EnumerationOptions enumeration(const InputSpec& spec) {
  EnumerationOptions opts;
  opts.max_bits = static_cast<std::size_t>(std::bit_width(spec.max_states) - 1);
  opts.threads = spec.threads;
  return opts;
}

std::string read_input(const InputSpec& spec, std::istream& in) {
  if (!spec.code.empty()) {
    if (!spec.file.empty()) throw CLI::ValidationError("give either FILE or --code, not both");
    std::string text = spec.code;
    std::replace(text.begin(), text.end(), ';', '\n');
    return text;
  }
  if (spec.file.empty()) throw CLI::ValidationError("missing input: give FILE, '-' or --code");
  std::ostringstream buf;
  if (spec.file == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(spec.file, std::ios::binary);
    if (!f) throw Error("cannot open '" + spec.file + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

std::string format_half(std::int64_t twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::string format_edges(const std::vector<std::size_t>& edges) {
  std::string s = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(edges[i] + 1);
  }
  return s + "}";
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows, bool tsv) {
  if (tsv) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      // State word and edge set read better left-aligned, numbers right-aligned.
      const bool left = i == 0 || i == 4;
      const std::string pad(width[i] - row[i].size(), ' ');
      line += left ? row[i] + pad : pad + row[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

std::string describe_failure(const StateCheck& c, const RibbonGraph& g) {
  std::ostringstream os;
  os << "state " << c.state.word() << "  F=" << format_edges(c.subgraph_edges) << "  (alpha,beta,delta)=("
     << c.alpha << ',' << c.beta << ',' << c.delta << ")  (k,r,n,bc,s)=(" << c.stats.k << ',' << c.stats.r << ','
     << c.stats.n << ',' << c.stats.bc << ',' << format_half(c.stats.twice_s) << ")";
  if (!c.identities_hold) os << "  counting identities fail";
  if (!c.term_match) {
    os << "  bracket term A^" << c.alpha << " B^" << c.beta << " d^" << static_cast<std::int64_t>(c.delta) - 1;
    try {
      os << " vs subgraph term " << transform_bollobas_riordan(g, bollobas_riordan_term(g, c.stats));
    } catch (const Error& e) {
      os << " vs subgraph term with non-integral exponent (" << e.what() << ")";
    }
  }
  return os.str();
}

int cmd_verify(const VirtualLinkDiagram& d, const EnumerationOptions& opts, std::ostream& out) {
  VerifyOptions vo;
  vo.enumeration = opts;
  vo.record_all_states = false;
  const VerificationReport report = verify_identity(d, vo);
  if (report.equal) {
    out << "OK\n";
    return 0;
  }
  const RibbonGraph g = from_diagram(d);
  out << "MISMATCH\n";
  out << "bracket:     " << report.lhs << '\n';
  out << "ribbon side: " << report.rhs << '\n';
  out << "difference:  " << (report.lhs - report.rhs) << '\n';
  out << report.failing_states << " of " << report.states_checked << " states disagree\n";
  for (const StateCheck& c : report.per_state) out << describe_failure(c, g) << '\n';
  return kExitFailure;
}

int cmd_table(const VirtualLinkDiagram& d, const EnumerationOptions& opts, bool tsv, std::ostream& out) {
  VerifyOptions vo;
  vo.enumeration = opts;
  const VerificationReport report = verify_identity(d, vo);
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"state", "alpha", "beta", "delta", "F", "k", "r", "n", "bc", "s", "check"});
  for (const StateCheck& c : report.per_state) {
    rows.push_back({c.state.word().empty() ? "-" : c.state.word(), std::to_string(c.alpha), std::to_string(c.beta),
                    std::to_string(c.delta), format_edges(c.subgraph_edges), std::to_string(c.stats.k),
                    std::to_string(c.stats.r), std::to_string(c.stats.n), std::to_string(c.stats.bc),
                    format_half(c.stats.twice_s), c.identities_hold && c.term_match ? "ok" : "FAIL"});
  }
  print_table(out, rows, tsv);
  return report.equal ? 0 : kExitFailure;
}

struct FuzzSpec {
  std::uint64_t count = 100;
  std::size_t max_crossings = 8;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

int cmd_fuzz(const FuzzSpec& spec, std::ostream& out) {
  VerifyOptions vo;
  vo.enumeration.threads = spec.threads;
  vo.enumeration.max_bits = std::max<std::size_t>(24, spec.max_crossings);
  vo.record_all_states = false;
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < spec.count; ++i) {
    const std::uint64_t r = detail::splitmix64(spec.seed + i);
    const std::size_t n = 1 + static_cast<std::size_t>(r % spec.max_crossings);
    const VirtualLinkDiagram d = random_diagram(n, r);
    const VerificationReport report = verify_identity(d, vo);
    if (!report.equal) {
      ++failures;
      out << "FAIL diagram " << i << " (" << n << " crossings, seed " << r << ")\n" << print_diagram(d);
    }
  }
  out << (spec.count - failures) << '/' << spec.count << " diagrams verified\n";
  return failures == 0 ? 0 : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kauffman bracket, Jones and Bollobas-Riordan polynomials of virtual link diagrams", "vkb"};
  app.require_subcommand(1, 1);

  InputSpec spec;
  bool graph_input = false;
  bool tsv = false;
  FuzzSpec fuzz;

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket <D>(A, B, d)");
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial in t");
  auto* ribbon = app.add_subcommand("ribbon", "Signed ribbon graph of the diagram");
  auto* brpoly = app.add_subcommand("brpoly", "Signed Bollobas-Riordan polynomial");
  auto* table = app.add_subcommand("table", "Per-state table with the matching spanning subgraphs");
  auto* verify = app.add_subcommand("verify", "Check the bracket against the transformed ribbon polynomial");
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Verify random abstract diagrams");
  for (auto* sub : {bracket, jones_cmd, ribbon, brpoly, table, verify}) add_input_options(*sub, spec);
  brpoly->add_flag("--graph", graph_input, "Input is a ribbon graph rather than a diagram");
  table->add_flag("--tsv", tsv, "Tab-separated output");
  fuzz_cmd->add_option("--count", fuzz.count, "Number of diagrams");
  fuzz_cmd->add_option("--max-crossings", fuzz.max_crossings, "Crossings per diagram are drawn from 1..M")
      ->check(CLI::Range(1, 30));
  fuzz_cmd->add_option("--seed", fuzz.seed, "Campaign seed");
  fuzz_cmd->add_option("--threads", fuzz.threads, "Worker threads (0 = all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (fuzz_cmd->parsed()) return cmd_fuzz(fuzz, out);

    const std::string text = read_input(spec, in);
    const EnumerationOptions opts = enumeration(spec);
    if (brpoly->parsed() && graph_input) {
      out << bollobas_riordan(parse_ribbon(text), opts) << '\n';
      return 0;
    }
    const VirtualLinkDiagram d = parse_diagram(text);
    if (bracket->parsed()) {
      out << kauffman_bracket(d, opts) << '\n';
    } else if (jones_cmd->parsed()) {
      out << jones(d, opts) << '\n';
    } else if (ribbon->parsed()) {
      out << print_ribbon(from_diagram(d));
    } else if (brpoly->parsed()) {
      out << bollobas_riordan(from_diagram(d), opts) << '\n';
    } else if (table->parsed()) {
      return cmd_table(d, opts, tsv, out);
    } else if (verify->parsed()) {
      return cmd_verify(d, opts, out);
    }
    return 0;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const EnumerationLimitError& e) {
    err << "error: " << e.what() << " (raise --max-states)\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace vkb::cli
