#pragma once

#include "spinflux/poly.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace spinflux {

using Vec = std::vector<Poly>;

// Dense matrix with Poly entries.  Small (<= ~16 rows) throughout, so the
// quadratic/ cubic algorithms below are fine.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Poly(1);
    return m;
  }
  static Mat scalar(int n, const Poly& s) {
    Mat m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = s;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Poly& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    x.check_same(y);
    Mat r = x;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    x.check_same(y);
    Mat r = x;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }
  friend Mat operator-(const Mat& x) {
    Mat r = x;
    for (auto& e : r.a_) e = -e;
    return r;
  }
  friend Mat operator*(const Poly& s, const Mat& x) {
    Mat r = x;
    for (auto& e : r.a_) e = s * e;
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Mat: shape mismatch");
    Mat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const Poly& xv = x.at(i, k);
        if (xv.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) {
          const Poly& yv = y.at(k, j);
          if (!yv.is_zero()) r.at(i, j) += xv * yv;
        }
      }
    return r;
  }
  friend Vec operator*(const Mat& x, const Vec& v) {
    if (x.cols_ != static_cast<int>(v.size())) throw std::invalid_argument("Mat: shape mismatch");
    Vec r(static_cast<size_t>(x.rows_));
    for (int i = 0; i < x.rows_; ++i)
      for (int j = 0; j < x.cols_; ++j)
        if (!x.at(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero())
          r[static_cast<size_t>(i)] += x.at(i, j) * v[static_cast<size_t>(j)];
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  Poly trace() const {
    Poly t;
    for (int k = 0; k < rows_ && k < cols_; ++k) t += at(k, k);
    return t;
  }

  Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Mat r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return r;
  }

 private:
  void check_same(const Mat& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_) throw std::invalid_argument("Mat: shape mismatch");
  }

  int rows_, cols_;
  std::vector<Poly> a_;
};

// Fraction-free Bareiss determinant; each division is exact.
inline Poly det(Mat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  int n = m.rows();
  if (n == 0) return Poly(1);
  Poly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m.at(r, k).is_zero()) {
          swap = r;
          break;
        }
      if (swap < 0) return Poly();  // whole column zero below the diagonal
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Poly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("det: Bareiss division not exact");
        m.at(i, j) = *q;
      }
    prev = m.at(k, k);
  }
  Poly d = m.at(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

// Deterministic sample points for numeric rank probing and for the seeded
// generic-sampling tests.  Values are nonzero rationals of moderate height.
class SamplePointSource {
 public:
  explicit SamplePointSource(uint64_t seed) : rng_(seed) {}

  GaussianRational rational() {
    std::uniform_int_distribution<long> num(-999983, 999983);
    std::uniform_int_distribution<long> den(1, 997);
    long p = 0;
    while (p == 0) p = num(rng_);
    return GaussianRational(Rational(p, den(rng_)));
  }

  std::array<GaussianRational, kNumSymbols> point() {
    std::array<GaussianRational, kNumSymbols> pt;
    for (auto& v : pt) v = rational();
    return pt;
  }

 private:
  std::mt19937_64 rng_;
};

namespace detail {

// Rank and pivot columns of a numeric evaluation of the matrix.
struct NumericProfile {
  int rank = 0;
  std::vector<int> pivot_rows;
  std::vector<int> pivot_cols;
};

inline NumericProfile numeric_profile(const Mat& m,
                                      const std::array<GaussianRational, kNumSymbols>& pt) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<GaussianRational>> a(static_cast<size_t>(rows),
                                               std::vector<GaussianRational>(static_cast<size_t>(cols)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c).evaluate(pt);
  NumericProfile out;
  std::vector<int> row_of(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r) row_of[static_cast<size_t>(r)] = r;
  int rr = 0;
  for (int c = 0; c < cols && rr < rows; ++c) {
    int pivot = -1;
    for (int r = rr; r < rows; ++r)
      if (!a[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<size_t>(rr)], a[static_cast<size_t>(pivot)]);
    std::swap(row_of[static_cast<size_t>(rr)], row_of[static_cast<size_t>(pivot)]);
    for (int r = rr + 1; r < rows; ++r) {
      GaussianRational f = a[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                           a[static_cast<size_t>(rr)][static_cast<size_t>(c)];
      if (f.is_zero()) continue;
      for (int cc = c; cc < cols; ++cc)
        a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
            f * a[static_cast<size_t>(rr)][static_cast<size_t>(cc)];
    }
    out.pivot_rows.push_back(row_of[static_cast<size_t>(rr)]);
    out.pivot_cols.push_back(c);
    ++rr;
  }
  out.rank = rr;
  return out;
}

}  // namespace detail

// Symbolic kernel basis of a Poly matrix over the parameter field.  Pivot
// structure is found at a random sample point, kernel vectors are produced by
// Cramer's rule (so entries are polynomials, not fractions), and the result
// is certified symbolically by M v = 0 plus dimension checks at five further
// sample points.  Throws if certification keeps failing.
inline std::vector<Vec> kernel(const Mat& m, uint64_t seed = 20260826) {
  SamplePointSource src(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto prof = detail::numeric_profile(m, src.point());
    int cols = m.cols();
    std::vector<int> free_cols;
    {
      std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
      for (int c : prof.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
      for (int c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    }
    Mat pivot_block = m.submatrix(prof.pivot_rows, prof.pivot_cols);
    Poly d0 = det(pivot_block);
    if (d0.is_zero()) continue;  // unlucky sample overestimated the rank
    std::vector<Vec> basis;
    bool ok = true;
    for (int f : free_cols) {
      Vec v(static_cast<size_t>(cols));
      v[static_cast<size_t>(f)] = d0;
      // Solve pivot_block * x = -m[pivot_rows, f] by Cramer, scaled by d0.
      for (size_t j = 0; j < prof.pivot_cols.size(); ++j) {
        Mat repl = pivot_block;
        for (size_t r = 0; r < prof.pivot_rows.size(); ++r)
          repl.at(static_cast<int>(r), static_cast<int>(j)) = -m.at(prof.pivot_rows[r], f);
        v[static_cast<size_t>(prof.pivot_cols[j])] = det(repl);
      }
      Vec check = m * v;
      for (const auto& e : check)
        if (!e.is_zero()) ok = false;
      if (!ok) break;
      basis.push_back(std::move(v));
    }
    if (!ok) continue;
    // Certify the dimension: generic rank must match at fresh sample points.
    bool dim_ok = true;
    for (int t = 0; t < 5 && dim_ok; ++t)
      if (detail::numeric_profile(m, src.point()).rank != prof.rank) dim_ok = false;
    if (!dim_ok) continue;
    return basis;
  }
  throw std::runtime_error("kernel: could not certify a kernel basis");
}

// Kernel of (m - ev * I): the eigenspace for a polynomial eigenvalue.
inline std::vector<Vec> eigenspace(const Mat& m, const Poly& ev, uint64_t seed = 20260826) {
  return kernel(m - Mat::scalar(m.rows(), ev), seed);
}

// Joint kernel of a family: kernel of the vertically stacked matrix.
inline std::vector<Vec> joint_kernel(const std::vector<Mat>& ms, uint64_t seed = 20260826) {
  if (ms.empty()) throw std::invalid_argument("joint_kernel: empty family");
  int cols = ms.front().cols();
  int rows = 0;
  for (const auto& m : ms) rows += m.rows();
  Mat stacked(rows, cols);
  int r0 = 0;
  for (const auto& m : ms) {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < cols; ++c) stacked.at(r0 + r, c) = m.at(r, c);
    r0 += m.rows();
  }
  return kernel(stacked, seed);
}

}  // namespace spinflux
