#include "vkb/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "vkb/error.hpp"

namespace vkb {

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<Variable> variables) : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& v = variables_[i];
    if (v.name.empty()) throw RingError("ring variable with empty name");
    if (!std::isalpha(static_cast<unsigned char>(v.name.front())))
      throw RingError("ring variable '" + v.name + "' must start with a letter");
    for (char ch : v.name)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw RingError("ring variable '" + v.name + "' has invalid character");
    if (v.granularity != 1 && v.granularity != 2 && v.granularity != 4)
      throw RingError("granularity of '" + v.name + "' must be 1, 2 or 4");
    for (std::size_t j = 0; j < i; ++j)
      if (variables_[j].name == v.name) throw RingError("duplicate ring variable '" + v.name + "'");
  }
}

int Ring::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return static_cast<int>(i);
  return -1;
}

std::size_t Ring::index_of(std::string_view name) const {
  int i = find(name);
  if (i < 0) throw RingError("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(i);
}

RingPtr make_ring(std::vector<Variable> variables) {
  return std::make_shared<const Ring>(std::move(variables));
}

RingPtr bracket_ring() {
  static const RingPtr r = make_ring({{"A", 1}, {"B", 1}, {"d", 1}});
  return r;
}

RingPtr jones_ring() {
  static const RingPtr r = make_ring({{"t", 4}});
  return r;
}

RingPtr bollobas_ring() {
  static const RingPtr r = make_ring({{"x", 2}, {"y", 2}, {"z", 1}});
  return r;
}

RingPtr tutte_ring() {
  static const RingPtr r = make_ring({{"x", 1}, {"y", 1}});
  return r;
}

RingPtr half_bracket_ring() {
  static const RingPtr r = make_ring({{"A", 2}, {"B", 2}, {"d", 2}});
  return r;
}

// ---------------------------------------------------------------- Monomial

bool Monomial::is_one() const noexcept {
  return std::all_of(units.begin(), units.end(), [](std::int64_t u) { return u == 0; });
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw RingError("null ring");
}

LaurentPoly LaurentPoly::constant(RingPtr ring, Integer c) {
  LaurentPoly p(std::move(ring));
  p.add_term(Monomial(std::vector<std::int64_t>(p.ring().size(), 0)), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(RingPtr ring, Monomial m, Integer c) {
  LaurentPoly p(std::move(ring));
  p.add_term(m, c);
  return p;
}

LaurentPoly LaurentPoly::variable(RingPtr ring, std::string_view name) {
  std::vector<std::int64_t> units(ring->size(), 0);
  std::size_t i = ring->index_of(name);
  units[i] = ring->granularity(i);
  return monomial(std::move(ring), Monomial(std::move(units)));
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (m.units.size() != ring_->size())
    throw RingError("monomial arity " + std::to_string(m.units.size()) + " does not match ring arity " +
                    std::to_string(ring_->size()));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same_ring(const LaurentPoly& q, const char* op) const {
  if (ring_ != q.ring_ && !(*ring_ == *q.ring_))
    throw RingError(std::string("ring mismatch in ") + op);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  check_same_ring(q, "add");
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  check_same_ring(q, "subtract");
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  p.check_same_ring(q, "mul");
  LaurentPoly r(p.ring_);
  const std::size_t n = p.ring_->size();
  Monomial m(std::vector<std::int64_t>(n, 0));
  for (const auto& [pm, pc] : p.terms_) {
    for (const auto& [qm, qc] : q.terms_) {
      for (std::size_t i = 0; i < n; ++i) m.units[i] = pm.units[i] + qm.units[i];
      r.add_term(m, pc * qc);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  *this = *this * q;
  return *this;
}

bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.ring_ != q.ring_ && !(*p.ring_ == *q.ring_)) return false;
  return p.terms_ == q.terms_;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(ring_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

// ---------------------------------------------------------------- substitute

namespace {

Integer integer_pow(const Integer& base, std::uint64_t e) {
  Integer r = 1;
  Integer b = base;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

// (image)^(units / granularity) for a monomial image.
LaurentPoly monomial_power(const LaurentPoly& image, std::int64_t units, int granularity,
                           const std::string& name) {
  const auto& [im, ic] = *image.terms().begin();
  const Ring& target = image.ring();
  std::vector<std::int64_t> out(target.size(), 0);
  for (std::size_t j = 0; j < target.size(); ++j) {
    std::int64_t scaled = im.units[j] * units;
    if (scaled % granularity != 0)
      throw SubstitutionError("power of image of '" + name + "' is not representable in variable '" +
                              target.variable(j).name + "'");
    out[j] = scaled / granularity;
  }
  Integer coeff;
  if (units % granularity == 0) {
    std::int64_t e = units / granularity;
    if (e >= 0) {
      coeff = integer_pow(ic, static_cast<std::uint64_t>(e));
    } else {
      if (ic != 1 && ic != -1)
        throw SubstitutionError("negative power of image of '" + name + "' with non-unit coefficient");
      coeff = integer_pow(ic, static_cast<std::uint64_t>(-e));
    }
  } else {
    if (ic != 1)
      throw SubstitutionError("fractional power of image of '" + name + "' with coefficient other than 1");
    coeff = 1;
  }
  return LaurentPoly::monomial(image.ring_ptr(), Monomial(std::move(out)), coeff);
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& images,
                       const RingPtr& target) {
  const Ring& src = p.ring();
  for (const auto& [name, img] : images)
    if (!(img.ring() == *target))
      throw RingError("image of '" + name + "' is not in the target ring");

  std::vector<const LaurentPoly*> image_of(src.size(), nullptr);
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = images.find(src.variable(i).name);
    if (it != images.end()) image_of[i] = &it->second;
  }

  // Nonnegative integer powers of non-monomial images are reused across terms.
  std::map<std::pair<std::size_t, std::int64_t>, LaurentPoly> power_cache;

  LaurentPoly result(target);
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly acc = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < src.size(); ++i) {
      const std::int64_t u = m.units[i];
      if (u == 0) continue;
      const std::string& name = src.variable(i).name;
      if (!image_of[i]) throw SubstitutionError("no image given for variable '" + name + "'");
      const LaurentPoly& img = *image_of[i];
      const int g = src.granularity(i);
      if (img.is_zero()) {
        if (u < 0) throw SubstitutionError("negative power of zero image of '" + name + "'");
        if (u % g != 0) throw SubstitutionError("fractional power of zero image of '" + name + "'");
        acc = LaurentPoly(target);
        break;
      }
      if (img.is_monomial()) {
        acc *= monomial_power(img, u, g, name);
      } else {
        if (u < 0 || u % g != 0)
          throw SubstitutionError("negative or fractional power of non-monomial image of '" + name + "'");
        auto key = std::make_pair(i, u / g);
        auto it = power_cache.find(key);
        if (it == power_cache.end())
          it = power_cache.emplace(key, img.pow(static_cast<unsigned>(u / g))).first;
        acc *= it->second;
      }
    }
    result += acc;
  }
  return result;
}

LaurentPoly coerce(const LaurentPoly& p, const RingPtr& target) {
  const Ring& src = p.ring();
  std::vector<int> index(src.size(), -1);
  for (std::size_t i = 0; i < src.size(); ++i) index[i] = target->find(src.variable(i).name);

  LaurentPoly result(target);
  std::vector<std::int64_t> out(target->size(), 0);
  for (const auto& [m, c] : p.terms()) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      const std::int64_t u = m.units[i];
      if (u == 0) continue;
      if (index[i] < 0)
        throw RingError("variable '" + src.variable(i).name + "' does not exist in target ring");
      const auto j = static_cast<std::size_t>(index[i]);
      const std::int64_t scaled = u * target->granularity(j);
      if (scaled % src.granularity(i) != 0)
        throw RingError("exponent of '" + src.variable(i).name + "' is not representable in target ring");
      out[j] = scaled / src.granularity(i);
    }
    result.add_term(Monomial(out), c);
  }
  return result;
}

// ---------------------------------------------------------------- printing

namespace {

void print_exponent(std::ostream& os, std::int64_t units, int granularity) {
  std::int64_t g = std::gcd(units, static_cast<std::int64_t>(granularity));
  std::int64_t num = units / g;
  std::int64_t den = granularity / g;
  if (num == 1 && den == 1) return;
  if (den == 1 && num > 0) {
    os << '^' << num;
    return;
  }
  os << "^(" << num;
  if (den != 1) os << '/' << den;
  os << ')';
}

}  // namespace

std::string print_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const Ring& ring = p.ring();
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    bool need_star = false;
    if (mag != 1 || m.is_one()) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (m.units[i] == 0) continue;
      if (need_star) os << '*';
      os << ring.variable(i).name;
      print_exponent(os, m.units[i], ring.granularity(i));
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << print_poly(p); }

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  LaurentPoly parse() {
    LaurentPoly result(ring_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      result.add_term(m, negative ? Integer(-c) : c);
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  std::pair<Monomial, Integer> parse_term() {
    Monomial m(std::vector<std::int64_t>(ring_->size(), 0));
    Integer coeff = 1;
    while (true) {
      skip_ws();
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= parse_integer();
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::string name = parse_identifier();
        int idx = ring_->find(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        const auto i = static_cast<std::size_t>(idx);
        std::int64_t num = 1;
        std::int64_t den = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          parse_exponent(num, den);
        }
        const std::int64_t scaled = num * ring_->granularity(i);
        if (scaled % den != 0)
          fail("exponent " + std::to_string(num) + "/" + std::to_string(den) + " of '" + name +
               "' is not representable in the ring");
        m.units[i] += scaled / den;
      } else {
        fail("expected coefficient or variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {std::move(m), std::move(coeff)};
  }

  void parse_exponent(std::int64_t& num, std::int64_t& den) {
    skip_ws();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      skip_ws();
    }
    bool negative = false;
    if (peek() == '-' || (paren && peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    num = parse_small();
    den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      den = parse_small();
      if (den == 0) fail("zero denominator in exponent");
    }
    if (negative) num = -num;
    if (paren) {
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t parse_small() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 12) fail("exponent too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  std::string parse_identifier() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at column " + std::to_string(pos_ + 1));
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace vkb
