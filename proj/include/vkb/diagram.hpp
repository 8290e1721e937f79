#pragma once

// Virtual link diagrams as abstract oriented 4-valent codes.
//
// A classical crossing is written X s0 s1 s2 s3: four arc ids listed
// counterclockwise, s0 the incoming under-arc and s2 the outgoing under-arc.
// The over-strand occupies s1/s3; its direction is inferred globally from the
// requirement that every arc has exactly one tail and one head. Virtual
// crossings are not represented: the state sum only sees how arcs are paired.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vkb/polyring.hpp"

namespace vkb {

using ArcId = std::int64_t;

struct CrossingCode {
  std::array<ArcId, 4> slots{};

  friend bool operator==(const CrossingCode&, const CrossingCode&) = default;
};

enum class Splitting : std::uint8_t { A, B };

/// Slot pairs joined by a splitting. A: (s0,s1),(s2,s3). B: (s0,s3),(s1,s2).
constexpr std::array<std::array<int, 2>, 2> splitting_pairs(Splitting s) noexcept {
  if (s == Splitting::A) return {{{0, 1}, {2, 3}}};
  return {{{0, 3}, {1, 2}}};
}

class State {
 public:
  State() = default;
  explicit State(std::vector<Splitting> choice) : choice_(std::move(choice)) {}

  /// State number `index` of `n` in table order: crossing 0 is the most
  /// significant letter and B is the 1 bit, so index 0 is AA..A.
  static State from_index(std::size_t n, std::uint64_t index);
  /// Parses a word such as "ABB".
  static State from_word(std::string_view word);

  std::size_t size() const noexcept { return choice_.size(); }
  Splitting operator[](std::size_t c) const { return choice_[c]; }
  const std::vector<Splitting>& choice() const noexcept { return choice_; }

  std::size_t alpha() const noexcept;
  std::size_t beta() const noexcept { return choice_.size() - alpha(); }

  std::string word() const;

  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<Splitting> choice_;
};

/// Where one end of an arc sits.
struct ArcEnd {
  std::size_t crossing = 0;
  int slot = 0;
};

class VirtualLinkDiagram {
 public:
  /// Validates the code and resolves strand directions. Throws
  /// ValidationError (with the offending crossing index when known).
  static VirtualLinkDiagram from_codes(std::vector<CrossingCode> crossings, std::size_t free_loops = 0);

  /// As from_codes, but with the over-strand direction given explicitly:
  /// s1_outgoing[c] says whether the over-strand of crossing c leaves
  /// through s1. Needed for components that pass over at every crossing,
  /// whose direction the code alone does not determine.
  static VirtualLinkDiagram from_oriented_codes(std::vector<CrossingCode> crossings,
                                                std::vector<bool> s1_outgoing, std::size_t free_loops = 0);

  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  const std::vector<CrossingCode>& crossings() const noexcept { return crossings_; }
  const CrossingCode& crossing(std::size_t c) const { return crossings_.at(c); }
  std::size_t free_loops() const noexcept { return free_loops_; }

  /// True if slot `slot` of crossing `c` is where an arc leaves the crossing.
  bool is_outgoing(std::size_t c, int slot) const;

  /// Dense arc index (0 .. 2n-1) of the arc in slot `slot` of crossing `c`.
  std::size_t dense_arc(std::size_t c, int slot) const { return dense_[c][static_cast<std::size_t>(slot)]; }
  std::size_t arc_count() const noexcept { return tails_.size(); }
  /// The crossing slot an arc leaves from / arrives at.
  ArcEnd arc_tail(std::size_t dense) const { return tails_.at(dense); }
  ArcEnd arc_head(std::size_t dense) const { return heads_.at(dense); }

  /// Connected pieces of the 4-valent graph (free loops not counted).
  std::size_t piece_count() const noexcept { return pieces_; }

  friend bool operator==(const VirtualLinkDiagram& a, const VirtualLinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_ && a.s1_outgoing_ == b.s1_outgoing_;
  }

 private:
  void build(std::vector<std::optional<bool>> orientation);

  std::vector<CrossingCode> crossings_;
  std::size_t free_loops_ = 0;
  std::vector<bool> s1_outgoing_;
  std::vector<std::array<std::size_t, 4>> dense_;
  std::vector<ArcEnd> tails_;
  std::vector<ArcEnd> heads_;
  std::size_t pieces_ = 0;
};

/// Limits on exhaustive enumeration.
struct EnumerationOptions {
  /// Refuse to enumerate more than 2^max_bits states or subgraphs.
  std::size_t max_bits = 24;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Parses the line-oriented diagram format (`X s0 s1 s2 s3`, `L k`, `#`
/// comments). Errors carry the 1-based line number.
VirtualLinkDiagram parse_diagram(std::string_view text);
std::string print_diagram(const VirtualLinkDiagram& d);

/// Local writhe of crossing c: +1 or -1.
int sign(const VirtualLinkDiagram& d, std::size_t c);
int writhe(const VirtualLinkDiagram& d);

/// Number of closed curves after splitting every crossing according to s.
std::size_t split_circles(const VirtualLinkDiagram& d, const State& s);

/// The orientation-preserving state.
State seifert_state(const VirtualLinkDiagram& d);

/// Sum over all states of A^alpha B^beta d^(delta-1), in bracket_ring().
LaurentPoly kauffman_bracket(const VirtualLinkDiagram& d, const EnumerationOptions& opts = {});

/// (-1)^w t^(3w/4) <D>(t^(-1/4), t^(1/4), -t^(1/2) - t^(-1/2)), in jones_ring().
LaurentPoly jones(const VirtualLinkDiagram& d, const EnumerationOptions& opts = {});
/// The same normalization applied to an already computed bracket.
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

/// Mirror image: every crossing's over and under strands are exchanged.
VirtualLinkDiagram mirror(const VirtualLinkDiagram& d);
/// Every component traversed backwards.
VirtualLinkDiagram reverse(const VirtualLinkDiagram& d);

}  // namespace vkb
