#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermsym/linalg.hpp"
#include "hermsym/rootsystem.hpp"

namespace hermsym {

enum class ModelKind { Rect, Spin };

/// A concrete simple Jordan pair with positive Hermitian involution.
///
/// Elements of the dual space are stored by their images under the
/// involution, so both slots of every operation take plain coordinate
/// vectors; formulas conjugate the dual slot internally.
struct Model {
  ModelKind kind;
  int p = 0, q = 0;  // rect(p,q): V = p×q complex matrices
  int nspin = 0;     // spin(n):   V = ℂⁿ with the standard bilinear form

  int dim = 0;                  // complex dimension of V
  int rank = 0;                 // length of a frame
  long structure_constant = 0;  // τ(e,ē) for a primitive tripotent e

  /// Frame coordinates, e_1 … e_r (exact, small integers).
  std::vector<std::vector<GQ>> frame;

  /// Basis of V adapted to the torus action: columns are basis vectors in
  /// model coordinates. Identity for rect; the frame/hyperbolic basis for spin.
  Mat<GQ> weight_basis;
  Mat<GQ> weight_basis_inv;

  std::string spec_string() const;

  // Root data of the matching flag variety.
  CartanType cartan_type() const;
  int cartan_rank() const;
  int marked_node_1based() const;

  int rect_index(int i, int j) const { return i * q + j; }  // 0-based
};

Model make_rect(int p, int q);
Model make_spin(int n);
/// Parses "rect:p,q" or "spin:n".
Model parse_model(const std::string& spec);

template <class S>
struct Elem {
  const Model* model = nullptr;
  std::vector<S> v;

  Elem() = default;
  Elem(const Model& m) : model(&m), v(m.dim, ScalarOps<S>::zero()) {}
  Elem(const Model& m, std::vector<S> coords) : model(&m), v(std::move(coords)) {}

  bool is_zero() const {
    for (const S& c : v)
      if (!ScalarOps<S>::is_zero(c)) return false;
    return true;
  }

  friend Elem operator+(const Elem& a, const Elem& b) {
    Elem c = a;
    for (size_t i = 0; i < c.v.size(); ++i) c.v[i] += b.v[i];
    return c;
  }
  friend Elem operator-(const Elem& a, const Elem& b) {
    Elem c = a;
    for (size_t i = 0; i < c.v.size(); ++i) c.v[i] -= b.v[i];
    return c;
  }
  friend Elem operator-(const Elem& a) {
    Elem c = a;
    for (size_t i = 0; i < c.v.size(); ++i) c.v[i] = -c.v[i];
    return c;
  }
  friend Elem operator*(const S& s, const Elem& a) {
    Elem c = a;
    for (size_t i = 0; i < c.v.size(); ++i) c.v[i] = s * c.v[i];
    return c;
  }
};

template <class S>
Elem<S> basis_element(const Model& m, int idx) {
  Elem<S> e(m);
  e.v[idx] = ScalarOps<S>::one();
  return e;
}

template <class S>
Elem<S> frame_element(const Model& m, int j) {
  Elem<S> e(m);
  for (int c = 0; c < m.dim; ++c) {
    const GQ& g = m.frame[j][c];
    if (!g.is_zero()) {
      if constexpr (ScalarOps<S>::exact) e.v[c] = g;
      else e.v[c] = to_cd(g);
    }
  }
  return e;
}

template <class S>
Elem<S> to_scalar(const Model& m, const Elem<GQ>& x) {
  if constexpr (ScalarOps<S>::exact) return x;
  else {
    Elem<CD> e(m);
    for (int c = 0; c < m.dim; ++c) e.v[c] = to_cd(x.v[c]);
    return e;
  }
}

namespace detail {

template <class S>
void check_same_model(const Elem<S>& a, const Elem<S>& b) {
  if (a.model != b.model) throw std::invalid_argument("elements of different models");
}

}  // namespace detail

/// Triple product {x, y, z}; the middle slot is a stored dual element.
template <class S>
Elem<S> triple(const Elem<S>& x, const Elem<S>& y, const Elem<S>& z);

/// Q_x y = ½{x, y, x}.
template <class S>
Elem<S> qmap(const Elem<S>& x, const Elem<S>& y);

/// D(x,y) materialized over the coordinate basis.
template <class S>
Mat<S> dop(const Elem<S>& x, const Elem<S>& y);

/// Bergman operator B(x,y) = Id − D(x,y) + Q_x Q_y.
template <class S>
Mat<S> bop(const Elem<S>& x, const Elem<S>& y);

/// Trace form τ(x,y) = Tr D(x,y) (closed form per model).
template <class S>
S trace_form(const Elem<S>& x, const Elem<S>& y);

/// Positive definite inner product (x|z) = τ(x, z̄).
template <class S>
S inner_product(const Elem<S>& x, const Elem<S>& z) {
  return trace_form(x, z);
}

/// Generic minimum polynomial Δ(x,y); det(I − x y*) in the rect model.
template <class S>
S gdet(const Elem<S>& x, const Elem<S>& y);

/// Relative invertibility threshold for floating Bergman operators.
inline constexpr double kQuasiInverseTol = 1e-10;

template <class S>
bool is_quasi_invertible(const Elem<S>& x, const Elem<S>& y);

/// x^y = B(x,y)^{-1}(x − Q_x y); throws std::domain_error when not quasi-invertible.
template <class S>
Elem<S> quasi_inverse(const Elem<S>& x, const Elem<S>& y);

/// Materializes a linear map on V given by its action on basis vectors.
template <class S, class F>
Mat<S> materialize(const Model& m, F&& f) {
  Mat<S> out(m.dim, m.dim);
  for (int j = 0; j < m.dim; ++j) {
    Elem<S> col = f(basis_element<S>(m, j));
    for (int i = 0; i < m.dim; ++i) out(i, j) = col.v[i];
  }
  return out;
}

template <class S>
Elem<S> apply_op(const Mat<S>& op, const Elem<S>& x) {
  return Elem<S>(*x.model, op.apply(x.v));
}

// --- implementation ---

template <class S>
Elem<S> triple(const Elem<S>& x, const Elem<S>& y, const Elem<S>& z) {
  detail::check_same_model(x, y);
  detail::check_same_model(x, z);
  const Model& m = *x.model;
  Elem<S> out(m);
  if (m.kind == ModelKind::Rect) {
    const int p = m.p, q = m.q;
    // x y* z + z y* x
    auto at = [&](const std::vector<S>& a, int i, int j) -> const S& { return a[i * q + j]; };
    // t1 = x y* (p×p), t2 = z y* (p×p)
    std::vector<S> t1(static_cast<size_t>(p) * p, ScalarOps<S>::zero());
    std::vector<S> t2(static_cast<size_t>(p) * p, ScalarOps<S>::zero());
    for (int i = 0; i < p; ++i)
      for (int k = 0; k < q; ++k) {
        for (int j = 0; j < p; ++j) {
          S yc = ScalarOps<S>::conj(at(y.v, j, k));
          if (!ScalarOps<S>::is_zero(yc)) {
            t1[i * p + j] += at(x.v, i, k) * yc;
            t2[i * p + j] += at(z.v, i, k) * yc;
          }
        }
      }
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) {
        S s = ScalarOps<S>::zero();
        for (int k = 0; k < p; ++k)
          s += t1[i * p + k] * at(z.v, k, j) + t2[i * p + k] * at(x.v, k, j);
        out.v[i * q + j] = s;
      }
  } else {
    // ½[h(x,y) z + h(z,y) x − β(x,z) conj(y)], h(u,w) = Σ u_c conj(w_c), β(u,w) = Σ u_c w_c
    S hxy = ScalarOps<S>::zero(), hzy = ScalarOps<S>::zero(), bxz = ScalarOps<S>::zero();
    for (int c = 0; c < m.dim; ++c) {
      S yc = ScalarOps<S>::conj(y.v[c]);
      hxy += x.v[c] * yc;
      hzy += z.v[c] * yc;
      bxz += x.v[c] * z.v[c];
    }
    S half = ScalarOps<S>::one() / ScalarOps<S>::from_int(2);
    for (int c = 0; c < m.dim; ++c)
      out.v[c] = half * (hxy * z.v[c] + hzy * x.v[c] - bxz * ScalarOps<S>::conj(y.v[c]));
  }
  return out;
}

template <class S>
Elem<S> qmap(const Elem<S>& x, const Elem<S>& y) {
  detail::check_same_model(x, y);
  const Model& m = *x.model;
  if (m.kind == ModelKind::Rect) {
    // x y* x
    const int p = m.p, q = m.q;
    Elem<S> out(m);
    auto at = [&](const std::vector<S>& a, int i, int j) -> const S& { return a[i * q + j]; };
    std::vector<S> t(static_cast<size_t>(p) * p, ScalarOps<S>::zero());
    for (int i = 0; i < p; ++i)
      for (int k = 0; k < q; ++k)
        for (int j = 0; j < p; ++j) t[i * p + j] += at(x.v, i, k) * ScalarOps<S>::conj(at(y.v, j, k));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) {
        S s = ScalarOps<S>::zero();
        for (int k = 0; k < p; ++k) s += t[i * p + k] * at(x.v, k, j);
        out.v[i * q + j] = s;
      }
    return out;
  }
  Elem<S> t = triple(x, y, x);
  S half = ScalarOps<S>::one() / ScalarOps<S>::from_int(2);
  return half * t;
}

template <class S>
Mat<S> dop(const Elem<S>& x, const Elem<S>& y) {
  const Model& m = *x.model;
  return materialize<S>(m, [&](const Elem<S>& z) { return triple(x, y, z); });
}

template <class S>
Mat<S> bop(const Elem<S>& x, const Elem<S>& y) {
  const Model& m = *x.model;
  return materialize<S>(m, [&](const Elem<S>& z) {
    Elem<S> w = z - triple(x, y, z) + qmap(x, qmap(y, z));
    return w;
  });
}

template <class S>
S trace_form(const Elem<S>& x, const Elem<S>& y) {
  detail::check_same_model(x, y);
  const Model& m = *x.model;
  S s = ScalarOps<S>::zero();
  for (int c = 0; c < m.dim; ++c) s += x.v[c] * ScalarOps<S>::conj(y.v[c]);
  if (m.kind == ModelKind::Rect) return ScalarOps<S>::from_int(m.p + m.q) * s;
  // spin: τ = (n/2)·Σ x conj(y); the frame vectors have squared length 2.
  return ScalarOps<S>::from_int(m.nspin) / ScalarOps<S>::from_int(2) * s;
}

template <class S>
S gdet(const Elem<S>& x, const Elem<S>& y) {
  detail::check_same_model(x, y);
  const Model& m = *x.model;
  if (m.kind == ModelKind::Rect) {
    const int p = m.p, q = m.q;
    Mat<S> a = Mat<S>::identity(p);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        S s = ScalarOps<S>::zero();
        for (int k = 0; k < q; ++k)
          s += x.v[i * q + k] * ScalarOps<S>::conj(y.v[j * q + k]);
        a(i, j) -= s;
      }
    return determinant(a);
  }
  S h = ScalarOps<S>::zero(), bx = ScalarOps<S>::zero(), by = ScalarOps<S>::zero();
  for (int c = 0; c < m.dim; ++c) {
    h += x.v[c] * ScalarOps<S>::conj(y.v[c]);
    bx += x.v[c] * x.v[c];
    by += y.v[c] * y.v[c];
  }
  S half = ScalarOps<S>::one() / ScalarOps<S>::from_int(2);
  S sixteenth = ScalarOps<S>::one() / ScalarOps<S>::from_int(16);
  return ScalarOps<S>::one() - half * h + sixteenth * bx * ScalarOps<S>::conj(by);
}

template <class S>
bool is_quasi_invertible(const Elem<S>& x, const Elem<S>& y) {
  Mat<S> b = bop(x, y);
  if constexpr (ScalarOps<S>::exact) {
    return !ScalarOps<S>::is_zero(determinant(b));
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(b));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return false;
    return sv(sv.size() - 1) > kQuasiInverseTol * sv(0);
  }
}

template <class S>
Elem<S> quasi_inverse(const Elem<S>& x, const Elem<S>& y) {
  if (!is_quasi_invertible(x, y)) throw std::domain_error("pair is not quasi-invertible");
  Mat<S> b = bop(x, y);
  auto binv = inverse(b);
  if (!binv) throw std::domain_error("pair is not quasi-invertible");
  Elem<S> rhs = x - qmap(x, y);
  return apply_op(*binv, rhs);
}

}  // namespace hermsym
