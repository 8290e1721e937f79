#pragma once

// Exact multivariate Laurent polynomials with fractional exponents.
//
// Every variable of a ring carries a granularity g in {1, 2, 4}: exponents
// are stored as integers counting 1/g steps ("quantum units"), so t^(-1/2)
// in a ring where t has granularity 4 is stored as -2. Coefficients are
// unbounded integers. Terms are kept in a std::map, which gives the
// canonical order (lexicographic on quantum-unit vectors, variables in
// declaration order) for free.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vkb {

using Integer = boost::multiprecision::cpp_int;

struct Variable {
  std::string name;
  int granularity = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
};

class Ring {
 public:
  /// Throws RingError on empty/duplicate names or a granularity outside {1,2,4}.
  explicit Ring(std::vector<Variable> variables);

  std::size_t size() const noexcept { return variables_.size(); }
  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const Variable& variable(std::size_t i) const { return variables_.at(i); }
  int granularity(std::size_t i) const { return variables_.at(i).granularity; }

  /// Index of `name`, or -1.
  int find(std::string_view name) const noexcept;
  /// Index of `name`; throws RingError if absent.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.variables_ == b.variables_; }

 private:
  std::vector<Variable> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Variable> variables);

// Rings used throughout the library.
RingPtr bracket_ring();       // A, B, d
RingPtr jones_ring();         // t (granularity 4)
RingPtr bollobas_ring();      // x, y (granularity 2), z
RingPtr tutte_ring();         // x, y
RingPtr half_bracket_ring();  // A, B, d all with granularity 2

/// Exponent vector in quantum units, one entry per ring variable.
struct Monomial {
  std::vector<std::int64_t> units;

  Monomial() = default;
  explicit Monomial(std::vector<std::int64_t> u) : units(std::move(u)) {}

  bool is_one() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.units <=> b.units; }
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  /// The zero polynomial of `ring`.
  explicit LaurentPoly(RingPtr ring);

  static LaurentPoly constant(RingPtr ring, Integer c);
  static LaurentPoly monomial(RingPtr ring, Monomial m, Integer c = 1);
  /// The polynomial `name`^1.
  static LaurentPoly variable(RingPtr ring, std::string_view name);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of `m` (zero if absent).
  Integer coefficient(const Monomial& m) const;

  /// Adds c*m in place, dropping the term if it cancels. The monomial must
  /// have the ring's arity.
  void add_term(const Monomial& m, const Integer& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

  /// Structural equality. Polynomials over different rings compare unequal.
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q);

  /// p^k for k >= 0.
  LaurentPoly pow(unsigned k) const;

  /// Sum of all coefficients (the value at every variable = 1).
  Integer evaluate_at_one() const;

 private:
  void check_same_ring(const LaurentPoly& q, const char* op) const;

  RingPtr ring_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Homomorphic image of `p` with each variable of p's ring replaced by the
/// polynomial given for it in `images` (all in ring `target`). A variable that
/// occurs with a negative or fractional exponent needs a monomial image;
/// fractional powers must land on integral quantum units of `target`.
LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& images,
                       const RingPtr& target);

/// Re-expresses `p` in `target`, matching variables by name. Variables of p
/// missing from target must not occur in any term; exponents must be
/// representable in target's granularities.
LaurentPoly coerce(const LaurentPoly& p, const RingPtr& target);

LaurentPoly parse_poly(const RingPtr& ring, std::string_view text);
std::string print_poly(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace vkb
