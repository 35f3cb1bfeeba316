#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace spinflux {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact complex scalar with rational real and imaginary parts.
// cpp_rational keeps denominators positive and reduced, so equality
// is plain member equality.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(long v) : re(v), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
    Rational n = y.re * y.re + y.im * y.im;
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
  GaussianRational& operator-=(const GaussianRational& y) { return *this = *this - y; }
  GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }
  GaussianRational& operator/=(const GaussianRational& y) { return *this = *this / y; }

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const GaussianRational& x, const GaussianRational& y) { return !(x == y); }
  friend bool operator<(const GaussianRational& x, const GaussianRational& y) {
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  }

  std::string str() const {
    auto rat = [](const Rational& r) {
      std::ostringstream os;
      os << r;
      return os.str();
    };
    if (im == 0) return rat(re);
    std::string imag;
    if (im == 1)
      imag = "i";
    else if (im == -1)
      imag = "-i";
    else
      imag = rat(im) + "*i";
    if (re == 0) return imag;
    if (im > 0) return rat(re) + "+" + imag;
    return rat(re) + imag;  // imag already carries the minus sign
  }
};

}  // namespace spinflux
