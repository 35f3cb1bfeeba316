#pragma once

#include "spinflux/poly.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinflux {

// Exterior forms on R^n with Poly coefficients.  A basis monomial e_I is a
// bitmask (bit k-1 set &lt;=> index k present); mixed-degree sums are allowed.
// All signs come from inversion counts of index merges, so wedge, interior
// product and Hodge star are exact by construction.
class Form {
 public:
  using Terms = std::map<uint32_t, Poly>;

  explicit Form(int n) : n_(n) {
    if (n < 1 || n > 31) throw std::invalid_argument("Form: dimension out of range");
  }

  int dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(uint32_t mask, const Poly& c) {
    if (mask >= (1u << n_)) throw std::invalid_argument("Form: index out of range");
    if (c.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      terms_.emplace(mask, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static Form basis(int n, std::initializer_list<int> indices) {
    Form f(n);
    uint32_t mask = 0;
    for (int k : indices) {
      if (k < 1 || k > n) throw std::invalid_argument("Form: bad index");
      uint32_t bit = 1u << (k - 1);
      if (mask & bit) throw std::invalid_argument("Form: repeated index");
      mask |= bit;
    }
    f.add_term(mask, Poly(1));
    return f;
  }

  friend Form operator+(const Form& x, const Form& y) {
    x.check(y);
    Form r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
  }
  friend Form operator-(const Form& x, const Form& y) {
    x.check(y);
    Form r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
    return r;
  }
  friend Form operator-(const Form& x) {
    Form r(x.n_);
    for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Form operator*(const Poly& s, const Form& x) {
    Form r(x.n_);
    for (const auto& [m, c] : x.terms_) r.add_term(m, s * c);
    return r;
  }
  friend bool operator==(const Form& x, const Form& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const Form& x, const Form& y) { return !(x == y); }

  // Sign of merging monomial I in front of monomial J (disjoint): the parity
  // of the number of pairs (i in I, j in J) with i > j.
  static int merge_sign(uint32_t i_mask, uint32_t j_mask) {
    int inv = 0;
    for (int bj = 0; bj < 31; ++bj) {
      if (!(j_mask & (1u << bj))) continue;
      uint32_t above = i_mask & ~((2u << bj) - 1);
      inv += std::popcount(above);
    }
    return (inv % 2 == 0) ? 1 : -1;
  }

  friend Form wedge(const Form& x, const Form& y) {
    x.check(y);
    Form r(x.n_);
    for (const auto& [mi, ci] : x.terms_)
      for (const auto& [mj, cj] : y.terms_) {
        if (mi & mj) continue;
        Poly c = ci * cj;
        if (merge_sign(mi, mj) < 0) c = -c;
        r.add_term(mi | mj, c);
      }
    return r;
  }

  // Interior product e_v (1 <= v <= n) into the form: drops index v with sign
  // (-1)^(position-1).
  friend Form interior(int v, const Form& x) {
    if (v < 1 || v > x.n_) throw std::invalid_argument("interior: bad index");
    uint32_t bit = 1u << (v - 1);
    Form r(x.n_);
    for (const auto& [m, c] : x.terms_) {
      if (!(m & bit)) continue;
      int pos = std::popcount(m & (bit - 1));  // indices before v
      Poly t = (pos % 2 == 0) ? c : -c;
      r.add_term(m & ~bit, t);
    }
    return r;
  }

  // Double contraction T(e_i, e_j, ., ..., .) = e_j -| (e_i -| T).
  friend Form contract2(int i, int j, const Form& x) { return interior(j, interior(i, x)); }

  // Hodge star for the orthonormal basis with volume e_1...e_n: on a basis
  // monomial, *e_I = sign(I, I^c) e_{I^c} where the sign is the parity of the
  // permutation (I, I^c) of (1..n).
  friend Form hodge(const Form& x) {
    Form r(x.n_);
    uint32_t full = (1u << x.n_) - 1;
    for (const auto& [m, c] : x.terms_) {
      uint32_t comp = full & ~m;
      Poly t = (merge_sign(m, comp) > 0) ? c : -c;
      // merge_sign(m, comp) is the parity of sorting (I, I^c) into (1..n).
      r.add_term(comp, t);
    }
    return r;
  }

  // sigma(T) = 1/2 sum_k (e_k -| T) ^ (e_k -| T).
  friend Form sigma_form(const Form& t) {
    Form r(t.n_);
    for (int k = 1; k <= t.n_; ++k) {
      Form ik = interior(k, t);
      r = r + wedge(ik, ik);
    }
    GaussianRational half(Rational(1, 2));
    return Poly::constant(half) * r;
  }

  // Pullback along the standard almost complex structure J(e_{2k-1}) = e_{2k}
  // on covectors: J*e_{2k-1} = -e_{2k}, J*e_{2k} = e_{2k-1}.  Requires even n.
  friend Form j_pullback(const Form& x) {
    if (x.n_ % 2 != 0) throw std::invalid_argument("j_pullback: odd dimension");
    Form r(x.n_);
    for (const auto& [m, c] : x.terms_) {
      uint32_t img = 0;
      int sign = 1;
      std::vector<int> idx;
      for (int b = 0; b < x.n_; ++b)
        if (m & (1u << b)) {
          // covector index b+1 maps to partner with a sign
          int partner = (b % 2 == 0) ? b + 1 : b - 1;
          if (b % 2 == 0) sign = -sign;
          idx.push_back(partner);
          img |= 1u << partner;
        }
      // Parity of sorting the image index sequence.
      for (size_t s = 0; s < idx.size(); ++s)
        for (size_t u = s + 1; u < idx.size(); ++u)
          if (idx[s] > idx[u]) sign = -sign;
      Poly t = (sign > 0) ? c : -c;
      r.add_term(img, t);
    }
    return r;
  }

  // Full antisymmetric coefficient T(e_{i1},...,e_{ik}).
  Poly component(const std::vector<int>& indices) const {
    Form f = *this;
    for (int v : indices) f = interior(v, f);
    auto it = f.terms_.find(0);
    return it == f.terms_.end() ? Poly() : it->second;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string mono = "e";
      for (int b = 0; b < n_; ++b)
        if (m & (1u << b)) mono += std::to_string(b + 1);
      if (m == 0) mono = "1";
      std::string cs = c.str();
      bool neg = false;
      if (cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
          cs.find('-', 1) == std::string::npos) {
        neg = true;
        cs = cs.substr(1);
      }
      if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos) cs = "(" + cs + ")";
      std::string body = (cs == "1") ? mono : cs + "*" + mono;
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  void check(const Form& y) const {
    if (n_ != y.n_) throw std::invalid_argument("Form: dimension mismatch");
  }

  int n_;
  Terms terms_;
};

// Parse form text like "+a*e135 - a*e146" or "-e246+e136+e145+e235".
inline Form parse_form(int n, std::string_view text) {
  // Normalize unicode minus, strip spaces.
  std::string s;
  for (size_t k = 0; k < text.size(); ++k) {
    if (k + 2 < text.size() && static_cast<unsigned char>(text[k]) == 0xE2 &&
        static_cast<unsigned char>(text[k + 1]) == 0x88 &&
        static_cast<unsigned char>(text[k + 2]) == 0x92) {
      s += '-';
      k += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[k]))) {
      s += text[k];
    }
  }
  Form out(n);
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    // term: [coeff*]eDIGITS  or a bare polynomial scalar term "c" wedged with nothing
    size_t start = pos;
    int depth = 0;
    while (pos < s.size() && (depth > 0 || (s[pos] != '+' && s[pos] != '-'))) {
      if (s[pos] == '(') ++depth;
      if (s[pos] == ')') --depth;
      ++pos;
    }
    std::string term = s.substr(start, pos - start);
    // Split off the trailing monomial eDIGITS if present.
    size_t epos = term.rfind('e');
    uint32_t mask = 0;
    std::string coeff = term;
    if (epos != std::string::npos && epos + 1 < term.size() &&
        std::isdigit(static_cast<unsigned char>(term[epos + 1]))) {
      bool all_digits = true;
      for (size_t k = epos + 1; k < term.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(term[k]))) all_digits = false;
      if (all_digits) {
        for (size_t k = epos + 1; k < term.size(); ++k) {
          int idx = term[k] - '0';
          if (idx < 1 || idx > n) throw std::invalid_argument("parse_form: bad index");
          uint32_t bit = 1u << (idx - 1);
          if (mask & bit) throw std::invalid_argument("parse_form: repeated index");
          mask |= bit;
        }
        coeff = term.substr(0, epos);
        if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
      }
    }
    Poly c = coeff.empty() ? Poly(1) : parse_poly(coeff);
    if (sign < 0) c = -c;
    out.add_term(mask, c);
  }
  return out;
}

}  // namespace spinflux
