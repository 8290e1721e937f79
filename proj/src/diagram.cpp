#include "vkb/diagram.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "vkb/detail/disjoint_sets.hpp"
#include "vkb/detail/parallel.hpp"
#include "vkb/error.hpp"

namespace vkb {

// ---------------------------------------------------------------- State

State State::from_index(std::size_t n, std::uint64_t index) {
  std::vector<Splitting> choice(n);
  for (std::size_t c = 0; c < n; ++c)
    choice[c] = ((index >> (n - 1 - c)) & 1U) ? Splitting::B : Splitting::A;
  return State(std::move(choice));
}

State State::from_word(std::string_view word) {
  std::vector<Splitting> choice;
  choice.reserve(word.size());
  for (char ch : word) {
    if (ch == 'A') {
      choice.push_back(Splitting::A);
    } else if (ch == 'B') {
      choice.push_back(Splitting::B);
    } else {
      throw ParseError("state word may only contain 'A' and 'B'");
    }
  }
  return State(std::move(choice));
}

std::size_t State::alpha() const noexcept {
  std::size_t a = 0;
  for (Splitting s : choice_) a += s == Splitting::A ? 1 : 0;
  return a;
}

std::string State::word() const {
  std::string w;
  w.reserve(choice_.size());
  for (Splitting s : choice_) w.push_back(s == Splitting::A ? 'A' : 'B');
  return w;
}

// ---------------------------------------------------------------- diagram

namespace {

struct ArcRecord {
  ArcId id = 0;
  std::vector<ArcEnd> ends;
};

// Direction of a slot end: true = outgoing. Over-strand slots are unknown
// until the crossing's orientation is fixed.
std::optional<bool> slot_outgoing(int slot, const std::optional<bool>& s1_out) {
  if (slot == 0) return false;
  if (slot == 2) return true;
  if (!s1_out) return std::nullopt;
  return slot == 1 ? *s1_out : !*s1_out;
}

}  // namespace

VirtualLinkDiagram VirtualLinkDiagram::from_codes(std::vector<CrossingCode> crossings, std::size_t free_loops) {
  VirtualLinkDiagram d;
  const std::size_t n = crossings.size();
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  d.build(std::vector<std::optional<bool>>(n));
  return d;
}

VirtualLinkDiagram VirtualLinkDiagram::from_oriented_codes(std::vector<CrossingCode> crossings,
                                                           std::vector<bool> s1_outgoing,
                                                           std::size_t free_loops) {
  if (s1_outgoing.size() != crossings.size())
    throw ValidationError("orientation vector length does not match crossing count");
  VirtualLinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  std::vector<std::optional<bool>> orientation(s1_outgoing.begin(), s1_outgoing.end());
  d.build(std::move(orientation));
  return d;
}

void VirtualLinkDiagram::build(std::vector<std::optional<bool>> orientation) {
  const std::size_t n = crossings_.size();
  if (n == 0 && free_loops_ == 0) throw ValidationError("diagram has no crossings and no free loops");

  std::map<ArcId, std::size_t> arc_index;
  std::vector<ArcRecord> arcs;
  std::vector<std::array<std::size_t, 4>> slot_arc(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      const ArcId id = crossings_[c].slots[static_cast<std::size_t>(s)];
      if (id <= 0) throw ValidationError("arc ids must be positive integers", c);
      auto [it, inserted] = arc_index.try_emplace(id, arcs.size());
      if (inserted) arcs.push_back({id, {}});
      ArcRecord& rec = arcs[it->second];
      rec.ends.push_back({c, s});
      if (rec.ends.size() > 2) throw ValidationError("arc " + std::to_string(id) + " is used more than twice", c);
      slot_arc[c][static_cast<std::size_t>(s)] = it->second;
    }
  }
  for (const ArcRecord& rec : arcs)
    if (rec.ends.size() != 2)
      throw ValidationError("arc " + std::to_string(rec.id) + " is used only once", rec.ends.front().crossing);

  // Propagate arc directions; an arc must have one tail and one head.
  std::vector<std::size_t> queue(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) queue[i] = i;
  auto enqueue_over_arcs = [&](std::size_t c) {
    queue.push_back(slot_arc[c][1]);
    queue.push_back(slot_arc[c][3]);
  };
  std::size_t next_unresolved = 0;
  while (true) {
    while (!queue.empty()) {
      const ArcRecord& rec = arcs[queue.back()];
      queue.pop_back();
      const ArcEnd& e0 = rec.ends[0];
      const ArcEnd& e1 = rec.ends[1];
      const auto d0 = slot_outgoing(e0.slot, orientation[e0.crossing]);
      const auto d1 = slot_outgoing(e1.slot, orientation[e1.crossing]);
      if (d0 && d1) {
        if (*d0 == *d1)
          throw ValidationError("arc " + std::to_string(rec.id) + (*d0 ? " has two tails" : " has two heads"),
                                e1.crossing);
        continue;
      }
      if (!d0 && !d1) continue;
      const ArcEnd& open = d0 ? e1 : e0;
      const bool want_out = d0 ? !*d0 : !*d1;
      orientation[open.crossing] = open.slot == 1 ? want_out : !want_out;
      enqueue_over_arcs(open.crossing);
    }
    while (next_unresolved < n && orientation[next_unresolved]) ++next_unresolved;
    if (next_unresolved == n) break;
    // Component that is over-strand everywhere: orient it so this crossing is positive.
    orientation[next_unresolved] = true;
    enqueue_over_arcs(next_unresolved);
  }

  s1_outgoing_.assign(n, false);
  for (std::size_t c = 0; c < n; ++c) s1_outgoing_[c] = *orientation[c];

  dense_ = std::move(slot_arc);
  tails_.assign(arcs.size(), {});
  heads_.assign(arcs.size(), {});
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (const ArcEnd& e : arcs[a].ends) {
      if (is_outgoing(e.crossing, e.slot)) {
        tails_[a] = e;
      } else {
        heads_[a] = e;
      }
    }
  }

  detail::DisjointSets pieces(n);
  for (const ArcRecord& rec : arcs) pieces.unite(rec.ends[0].crossing, rec.ends[1].crossing);
  pieces_ = pieces.set_count();
}

bool VirtualLinkDiagram::is_outgoing(std::size_t c, int slot) const {
  return *slot_outgoing(slot, std::optional<bool>(s1_outgoing_.at(c)));
}

// ---------------------------------------------------------------- text format

namespace {

bool parse_int(std::string_view token, std::int64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

VirtualLinkDiagram parse_diagram(std::string_view text) {
  std::vector<CrossingCode> crossings;
  std::vector<std::size_t> crossing_line;
  std::optional<std::size_t> free_loops;

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

    if (tokens[0] == "X") {
      if (tokens.size() != 5) throw ParseError("crossing line needs exactly 4 arc ids", line_no);
      CrossingCode code;
      for (std::size_t i = 0; i < 4; ++i) {
        if (!parse_int(tokens[i + 1], code.slots[i]) || code.slots[i] <= 0)
          throw ParseError("arc id '" + tokens[i + 1] + "' is not a positive integer", line_no);
      }
      crossings.push_back(code);
      crossing_line.push_back(line_no);
    } else if (tokens[0] == "L") {
      std::int64_t k = 0;
      if (tokens.size() != 2 || !parse_int(tokens[1], k) || k < 0)
        throw ParseError("free-loop line needs one nonnegative integer", line_no);
      if (free_loops) throw ParseError("duplicate free-loop line", line_no);
      free_loops = static_cast<std::size_t>(k);
    } else {
      throw ParseError("unknown record '" + tokens[0] + "'", line_no);
    }
  }

  try {
    return VirtualLinkDiagram::from_codes(std::move(crossings), free_loops.value_or(0));
  } catch (const ValidationError& e) {
    if (e.item() && *e.item() < crossing_line.size()) throw ParseError(e.what(), crossing_line[*e.item()]);
    throw ParseError(e.what());
  }
}

std::string print_diagram(const VirtualLinkDiagram& d) {
  std::ostringstream os;
  for (const CrossingCode& c : d.crossings())
    os << "X " << c.slots[0] << ' ' << c.slots[1] << ' ' << c.slots[2] << ' ' << c.slots[3] << '\n';
  if (d.free_loops() > 0) os << "L " << d.free_loops() << '\n';
  return os.str();
}

// ---------------------------------------------------------------- invariants

int sign(const VirtualLinkDiagram& d, std::size_t c) {
  // Slots sit at south, east, north, west. The crossing is positive when the
  // over-strand direction crossed into the under-strand direction points up.
  static constexpr int kPos[4][2] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};
  const int over_in = d.is_outgoing(c, 1) ? 3 : 1;
  const int over_out = d.is_outgoing(c, 1) ? 1 : 3;
  const int ox = kPos[over_out][0] - kPos[over_in][0];
  const int oy = kPos[over_out][1] - kPos[over_in][1];
  const int ux = kPos[2][0] - kPos[0][0];
  const int uy = kPos[2][1] - kPos[0][1];
  return ox * uy - oy * ux > 0 ? +1 : -1;
}

int writhe(const VirtualLinkDiagram& d) {
  int w = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) w += sign(d, c);
  return w;
}

std::size_t split_circles(const VirtualLinkDiagram& d, const State& s) {
  if (s.size() != d.crossing_count()) throw ValidationError("state length does not match crossing count");
  detail::DisjointSets circles(d.arc_count());
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    for (const auto& pair : splitting_pairs(s[c])) circles.unite(d.dense_arc(c, pair[0]), d.dense_arc(c, pair[1]));
  return circles.set_count() + d.free_loops();
}

State seifert_state(const VirtualLinkDiagram& d) {
  std::vector<Splitting> choice(d.crossing_count());
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    int preserving = 0;
    for (Splitting s : {Splitting::A, Splitting::B}) {
      bool ok = true;
      for (const auto& pair : splitting_pairs(s))
        ok = ok && d.is_outgoing(c, pair[0]) != d.is_outgoing(c, pair[1]);
      if (ok) {
        choice[c] = s;
        ++preserving;
      }
    }
    if (preserving != 1) throw ValidationError("crossing has no unique orientation-preserving splitting", c);
  }
  return State(std::move(choice));
}

namespace {

void check_enumeration(std::size_t bits, const EnumerationOptions& opts, const char* what) {
  if (bits > opts.max_bits || bits > 62)
    throw EnumerationLimitError(std::string(what) + ": 2^" + std::to_string(bits) +
                                " items exceed the enumeration cap of 2^" + std::to_string(opts.max_bits));
}

}  // namespace

LaurentPoly kauffman_bracket(const VirtualLinkDiagram& d, const EnumerationOptions& opts) {
  const std::size_t n = d.crossing_count();
  check_enumeration(n, opts, "kauffman bracket");

  const std::size_t width = d.arc_count() + d.free_loops() + 1;
  using Counts = std::vector<std::uint64_t>;  // [alpha * width + delta]
  const std::uint64_t total = std::uint64_t{1} << n;

  Counts counts = detail::parallel_reduce<Counts>(
      total, opts.threads, [&] { return Counts((n + 1) * width, 0); },
      [&](Counts& acc, std::uint64_t begin, std::uint64_t end) {
        detail::DisjointSets circles;
        for (std::uint64_t index = begin; index < end; ++index) {
          circles.reset(d.arc_count());
          std::size_t alpha = 0;
          for (std::size_t c = 0; c < n; ++c) {
            const bool is_b = (index >> (n - 1 - c)) & 1U;
            alpha += is_b ? 0 : 1;
            for (const auto& pair : splitting_pairs(is_b ? Splitting::B : Splitting::A))
              circles.unite(d.dense_arc(c, pair[0]), d.dense_arc(c, pair[1]));
          }
          ++acc[alpha * width + circles.set_count() + d.free_loops()];
        }
      },
      [](Counts& into, Counts&& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });

  LaurentPoly result(bracket_ring());
  for (std::size_t alpha = 0; alpha <= n; ++alpha) {
    for (std::size_t delta = 1; delta < width; ++delta) {
      const std::uint64_t count = counts[alpha * width + delta];
      if (count == 0) continue;
      result.add_term(Monomial({static_cast<std::int64_t>(alpha), static_cast<std::int64_t>(n - alpha),
                                static_cast<std::int64_t>(delta) - 1}),
                      Integer(count));
    }
  }
  return result;
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int w) {
  const RingPtr t_ring = jones_ring();
  auto t_pow = [&](std::int64_t quarter_units, int coeff) {
    return LaurentPoly::monomial(t_ring, Monomial({quarter_units}), coeff);
  };
  std::map<std::string, LaurentPoly> images{
      {"A", t_pow(-1, 1)},
      {"B", t_pow(1, 1)},
      {"d", t_pow(2, -1) + t_pow(-2, -1)},
  };
  LaurentPoly evaluated = substitute(bracket, images, t_ring);
  return t_pow(3 * w, (w % 2 == 0) ? 1 : -1) * evaluated;
}

LaurentPoly jones(const VirtualLinkDiagram& d, const EnumerationOptions& opts) {
  return jones_from_bracket(kauffman_bracket(d, opts), writhe(d));
}

// ---------------------------------------------------------------- transforms

VirtualLinkDiagram mirror(const VirtualLinkDiagram& d) {
  std::vector<CrossingCode> codes;
  std::vector<bool> s1_out;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const auto& s = d.crossing(c).slots;
    // The old over-strand becomes the under-strand; rotate so that its
    // incoming end lands in s0. The old under-strand then enters at s1.
    if (d.is_outgoing(c, 1)) {
      codes.push_back({{s[3], s[0], s[1], s[2]}});
    } else {
      codes.push_back({{s[1], s[2], s[3], s[0]}});
    }
    s1_out.push_back(!d.is_outgoing(c, 1));
  }
  return VirtualLinkDiagram::from_oriented_codes(std::move(codes), std::move(s1_out), d.free_loops());
}

VirtualLinkDiagram reverse(const VirtualLinkDiagram& d) {
  std::vector<CrossingCode> codes;
  std::vector<bool> s1_out;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const auto& s = d.crossing(c).slots;
    codes.push_back({{s[2], s[3], s[0], s[1]}});
    // Old s3 becomes s1, and its direction flips.
    s1_out.push_back(d.is_outgoing(c, 1));
  }
  return VirtualLinkDiagram::from_oriented_codes(std::move(codes), std::move(s1_out), d.free_loops());
}

}  // namespace vkb
