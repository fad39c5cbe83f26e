#pragma once

#include <Eigen/Dense>
#include <cassert>
#include <functional>
#include <optional>
#include <vector>

#include "hermsym/scalars.hpp"

namespace hermsym {

/// Dense row-major matrix over an exact or floating scalar.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, ScalarOps<S>::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarOps<S>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& operator()(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

  friend Mat operator+(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.d_.size(); ++i) c.d_[i] = a.d_[i] + b.d_[i];
    return c;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.d_.size(); ++i) c.d_[i] = a.d_[i] - b.d_[i];
    return c;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.rows_);
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (ScalarOps<S>::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Mat operator*(const S& s, const Mat& a) {
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.d_.size(); ++i) c.d_[i] = s * a.d_[i];
    return c;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<S> w(rows_, ScalarOps<S>::zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!ScalarOps<S>::is_zero((*this)(i, j))) w[i] += (*this)(i, j) * v[j];
    return w;
  }

  /// Conjugate transpose.
  Mat adjoint() const {
    Mat c(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) c(j, i) = ScalarOps<S>::conj((*this)(i, j));
    return c;
  }

  S trace() const {
    S t = ScalarOps<S>::zero();
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<S> d_;
};

/// Gauss-Jordan inverse; returns nullopt when no pivot passes `piv_tol`
/// (relative to the largest initial magnitude for floating scalars).
template <class S>
std::optional<Mat<S>> inverse(Mat<S> a, double piv_tol = 0.0) {
  assert(a.rows() == a.cols());
  const int n = a.rows();
  Mat<S> inv = Mat<S>::identity(n);
  double scale = 1.0;
  if (!ScalarOps<S>::exact) {
    scale = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) scale = std::max(scale, ScalarOps<S>::mag(a(i, j)));
    if (scale == 0.0) scale = 1.0;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    double best = 0.0;
    for (int r = c; r < n; ++r) {
      double m = ScalarOps<S>::mag(a(r, c));
      if (m > best) { best = m; piv = r; }
    }
    if (piv < 0 || best <= piv_tol * scale) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n; ++j) { std::swap(a(c, j), a(piv, j)); std::swap(inv(c, j), inv(piv, j)); }
    S d = a(c, c);
    for (int j = 0; j < n; ++j) { a(c, j) /= d; inv(c, j) /= d; }
    for (int r = 0; r < n; ++r) {
      if (r == c || ScalarOps<S>::is_zero(a(r, c))) continue;
      S f = a(r, c);
      for (int j = 0; j < n; ++j) { a(r, j) -= f * a(c, j); inv(r, j) -= f * inv(c, j); }
    }
  }
  return inv;
}

template <class S>
S determinant(Mat<S> a) {
  assert(a.rows() == a.cols());
  const int n = a.rows();
  S det = ScalarOps<S>::one();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    double best = 0.0;
    for (int r = c; r < n; ++r) {
      double m = ScalarOps<S>::mag(a(r, c));
      if (m > best) { best = m; piv = r; }
    }
    if (piv < 0 || best == 0.0) return ScalarOps<S>::zero();
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (ScalarOps<S>::is_zero(a(r, c))) continue;
      S f = a(r, c) / a(c, c);
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<int> rref(Mat<S>& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
    int piv = -1;
    double best = 0.0;
    for (int r = row; r < a.rows(); ++r) {
      double m = ScalarOps<S>::mag(a(r, c));
      if (m > best) { best = m; piv = r; }
    }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(piv, j));
    S d = a(row, c);
    for (int j = c; j < a.cols(); ++j) a(row, j) /= d;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || ScalarOps<S>::is_zero(a(r, c))) continue;
      S f = a(r, c);
      for (int j = c; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class S>
int rank(Mat<S> a) {
  return static_cast<int>(rref(a).size());
}

/// Basis of the right kernel {v : a v = 0}, exact scalars.
template <class S>
std::vector<std::vector<S>> kernel(Mat<S> a) {
  static_assert(ScalarOps<S>::exact, "kernel extraction is exact-only");
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : pivots) is_piv[c] = true;
  std::vector<std::vector<S>> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_piv[c]) continue;
    std::vector<S> v(a.cols(), ScalarOps<S>::zero());
    v[c] = ScalarOps<S>::one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Leading-principal-minor test for an exact Hermitian matrix.
inline bool is_positive_definite_exact(const Mat<GQ>& a) {
  assert(a.rows() == a.cols());
  for (int k = 1; k <= a.rows(); ++k) {
    Mat<GQ> sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = a(i, j);
    GQ d = determinant(sub);
    if (d.im != 0 || d.re <= 0) return false;
  }
  return true;
}

inline Eigen::MatrixXcd to_eigen(const Mat<CD>& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

inline Mat<CD> from_eigen(const Eigen::MatrixXcd& m) {
  Mat<CD> a(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
  return a;
}

inline double op_norm(const Mat<CD>& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

inline double frob_norm(const Mat<CD>& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

inline Mat<CD> to_cd(const Mat<GQ>& a) {
  Mat<CD> m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = hermsym::to_cd(a(i, j));
  return m;
}

}  // namespace hermsym
