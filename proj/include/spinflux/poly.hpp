#pragma once

#include "spinflux/scalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spinflux {

// Fixed global symbol table.  Every polynomial lives in the same ring, so
// substitution and arithmetic never need to reconcile variable sets.
inline constexpr std::array<std::string_view, 18> kSymbols = {
    "a", "b", "c", "alpha", "lambda", "kappa", "A",  "A1",  "A2",
    "A3", "B", "p", "q",     "U1",     "U2",    "V1", "V2",  "Scal"};
inline constexpr int kNumSymbols = static_cast<int>(kSymbols.size());

// Total-degree cap.  Interesting identities stay below degree ~8, but
// fraction-free elimination (Bareiss determinants of 8x8 matrices with
// quadratic entries) legitimately produces much larger intermediates.
inline constexpr int kMaxDegree = 40;

inline int symbol_index(std::string_view name) {
  for (int k = 0; k < kNumSymbols; ++k)
    if (kSymbols[k] == name) return k;
  throw std::invalid_argument("unknown symbol: " + std::string(name));
}

using Exponents = std::array<uint8_t, kNumSymbols>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (uint8_t v : e) d += v;
  return d;
}

struct PolyOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multivariate polynomial over the Gaussian rationals.  Terms are kept in a
// map keyed by exponent vector (lexicographic in table order); zero
// coefficients are never stored, so structural equality is semantic equality.
class Poly {
 public:
  using Terms = std::map<Exponents, GaussianRational>;

  Poly() = default;
  /*implicit*/ Poly(long v) { add_term(Exponents{}, GaussianRational(v)); }
  /*implicit*/ Poly(GaussianRational c) { add_term(Exponents{}, std::move(c)); }

  static Poly constant(GaussianRational c) { return Poly(std::move(c)); }
  static Poly unit_i() { return Poly(GaussianRational::unit_i()); }
  static Poly symbol(int k) {
    Poly r;
    Exponents e{};
    e[static_cast<size_t>(k)] = 1;
    r.add_term(e, GaussianRational(1));
    return r;
  }
  static Poly symbol(std::string_view name) { return symbol(symbol_index(name)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
  }
  GaussianRational constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) throw std::domain_error("Poly: not constant");
    return terms_.begin()->second;
  }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }
  int degree_in(int k) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<size_t>(k)]);
    return d;
  }

  void add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (total_degree(e) > kMaxDegree) throw PolyOverflow("Poly: degree cap exceeded");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Poly operator+(const Poly& x, const Poly& y) {
    Poly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, c);
    return r;
  }
  friend Poly operator-(const Poly& x, const Poly& y) {
    Poly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
    return r;
  }
  friend Poly operator-(const Poly& x) {
    Poly r;
    for (const auto& [e, c] : x.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Poly operator*(const Poly& x, const Poly& y) {
    Poly r;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) {
        Exponents e;
        for (int k = 0; k < kNumSymbols; ++k) {
          int s = ex[static_cast<size_t>(k)] + ey[static_cast<size_t>(k)];
          if (s > 255) throw PolyOverflow("Poly: exponent overflow");
          e[static_cast<size_t>(k)] = static_cast<uint8_t>(s);
        }
        r.add_term(e, cx * cy);
      }
    return r;
  }
  Poly& operator+=(const Poly& y) { return *this = *this + y; }
  Poly& operator-=(const Poly& y) { return *this = *this - y; }
  Poly& operator*=(const Poly& y) { return *this = *this * y; }

  friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

  Poly pow(int n) const {
    Poly r(1);
    for (int k = 0; k < n; ++k) r *= *this;
    return r;
  }

  // Replace symbol k by a polynomial.
  Poly substitute(int k, const Poly& value) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      int d = rest[static_cast<size_t>(k)];
      rest[static_cast<size_t>(k)] = 0;
      Poly t;
      t.add_term(rest, c);
      r += t * value.pow(d);
    }
    return r;
  }

  // Replace symbol k by num/den with the denominator cleared: the result is
  // den^d * poly|_{k=num/den} where d is the degree in symbol k.  Valid for
  // zero-testing whenever den is known to be nonzero.
  Poly substitute_cleared(int k, const Poly& num, const Poly& den) const {
    int d = degree_in(k);
    Poly r;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      int dk = rest[static_cast<size_t>(k)];
      rest[static_cast<size_t>(k)] = 0;
      Poly t;
      t.add_term(rest, c);
      r += t * num.pow(dk) * den.pow(d - dk);
    }
    return r;
  }

  GaussianRational evaluate(const std::array<GaussianRational, kNumSymbols>& point) const {
    GaussianRational r(0);
    for (const auto& [e, c] : terms_) {
      GaussianRational t = c;
      for (int k = 0; k < kNumSymbols; ++k)
        for (int j = 0; j < e[static_cast<size_t>(k)]; ++j) t *= point[static_cast<size_t>(k)];
      r += t;
    }
    return r;
  }

  // Coefficient polynomials with respect to one symbol (for resultants and
  // linear-coefficient extraction).
  std::vector<Poly> coefficients_in(int k) const {
    std::vector<Poly> cs(static_cast<size_t>(degree_in(k)) + 1);
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      int d = rest[static_cast<size_t>(k)];
      rest[static_cast<size_t>(k)] = 0;
      cs[static_cast<size_t>(d)].add_term(rest, c);
    }
    return cs;
  }

  std::string str() const;

 private:
  Terms terms_;
};

inline std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest lex term first for stable, human-friendly output.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int k = 0; k < kNumSymbols; ++k) {
      int d = e[static_cast<size_t>(k)];
      if (d == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(kSymbols[static_cast<size_t>(k)]);
      if (d > 1) mono += "^" + std::to_string(d);
    }
    GaussianRational coeff = c;
    std::string sign = "+";
    if (coeff.is_real() ? coeff.re < 0 : (coeff.re == 0 && coeff.im < 0)) {
      sign = "-";
      coeff = -coeff;
    }
    std::string cs;
    if (mono.empty()) {
      cs = coeff.str();
      if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos)
        cs = "(" + cs + ")";
    } else if (coeff == GaussianRational(1)) {
      cs = mono;
    } else {
      std::string body = coeff.str();
      if (body.find('+') != std::string::npos || body.find('-') != std::string::npos)
        body = "(" + body + ")";
      cs = body + "*" + mono;
    }
    if (out.empty())
      out = (sign == "-" ? "-" : "") + cs;
    else
      out += sign + cs;
  }
  return out;
}

// --- parser ---------------------------------------------------------------
//
// Grammar: expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
// factor := atom ('^' uint)? ; atom := uint | 'i' | symbol | '(' expr ')' | '-' factor.
// Division requires a constant divisor.  The Unicode minus sign is accepted.

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    // Normalize U+2212 to '-' and drop whitespace.
    for (size_t k = 0; k < text.size(); ++k) {
      if (k + 2 < text.size() && static_cast<unsigned char>(text[k]) == 0xE2 &&
          static_cast<unsigned char>(text[k + 1]) == 0x88 &&
          static_cast<unsigned char>(text[k + 2]) == 0x92) {
        src_ += '-';
        k += 2;
      } else if (!std::isspace(static_cast<unsigned char>(text[k]))) {
        src_ += text[k];
      }
    }
  }

  Poly parse() {
    Poly r = expr();
    if (pos_ != src_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Poly expr() {
    Poly r = eat('-') ? -term() : term();
    while (true) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  Poly term() {
    Poly r = factor();
    while (true) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("divisor must be a nonzero constant");
        r *= Poly::constant(GaussianRational(1) / d.constant_value());
      } else {
        return r;
      }
    }
  }

  Poly factor() {
    if (eat('-')) return -factor();
    Poly base = atom();
    if (eat('^')) {
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      return base.pow(static_cast<int>(uinteger()));
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(GaussianRational(Rational(uinteger())));
    if (eat('(')) {
      Poly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // Longest-match symbol lookup; bare 'i' is the imaginary unit.
      size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      std::string_view name = std::string_view(src_).substr(start, pos_ - start);
      if (name == "i") return Poly::unit_i();
      for (int k = 0; k < kNumSymbols; ++k)
        if (kSymbols[static_cast<size_t>(k)] == name) return Poly::symbol(k);
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  BigInt uinteger() {
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return BigInt(src_.substr(start, pos_ - start));
  }

  std::string src_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

// Exact multivariate division: returns a/b when b divides a, nullopt
// otherwise.  Uses lex leading-term reduction, which terminates because lex
// is a monomial order.
inline std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  Poly rem = a;
  Poly quot;
  const auto& bl = *b.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& rl = *rem.terms().rbegin();
    Exponents q;
    for (int k = 0; k < kNumSymbols; ++k) {
      int d = rl.first[static_cast<size_t>(k)] - bl.first[static_cast<size_t>(k)];
      if (d < 0) return std::nullopt;
      q[static_cast<size_t>(k)] = static_cast<uint8_t>(d);
    }
    Poly t;
    t.add_term(q, rl.second / bl.second);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

}  // namespace spinflux
