#include "hermsym/structure.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hermsym {

namespace {

double elem_norm(const Elem<CD>& x) {
  double s = 0;
  for (const CD& c : x.v) s += std::norm(c);
  return std::sqrt(s);
}

Eigen::MatrixXcd rect_matrix(const Elem<CD>& x) {
  const Model& m = *x.model;
  Eigen::MatrixXcd a(m.p, m.q);
  for (int i = 0; i < m.p; ++i)
    for (int j = 0; j < m.q; ++j) a(i, j) = x.v[m.rect_index(i, j)];
  return a;
}

Elem<CD> rect_elem(const Model& m, const Eigen::MatrixXcd& a) {
  Elem<CD> x(m);
  for (int i = 0; i < m.p; ++i)
    for (int j = 0; j < m.q; ++j) x.v[m.rect_index(i, j)] = a(i, j);
  return x;
}

CD spin_bform(const Elem<CD>& x, const Elem<CD>& y) {
  CD s = 0;
  for (size_t c = 0; c < x.v.size(); ++c) s += x.v[c] * y.v[c];
  return s;
}

CD spin_hform(const Elem<CD>& x, const Elem<CD>& y) {
  CD s = 0;
  for (size_t c = 0; c < x.v.size(); ++c) s += x.v[c] * std::conj(y.v[c]);
  return s;
}

}  // namespace

template <class S>
bool is_tripotent(const Elem<S>& x) {
  Elem<S> d = qmap(x, x) - x;
  if constexpr (ScalarOps<S>::exact) {
    return d.is_zero();
  } else {
    double nx = elem_norm(x);
    return elem_norm(d) <= tol::kTripotent * (1.0 + nx * nx * nx);
  }
}
template bool is_tripotent<GQ>(const Elem<GQ>&);
template bool is_tripotent<CD>(const Elem<CD>&);

template <class S>
Tripotent<S> make_tripotent(const Elem<S>& e) {
  if (!is_tripotent(e)) throw std::invalid_argument("element is not a tripotent");
  const Model& m = *e.model;
  Mat<S> d = dop(e, e);
  Mat<S> id = Mat<S>::identity(m.dim);
  S half = ScalarOps<S>::one() / ScalarOps<S>::from_int(2);
  Mat<S> d1 = d - id;
  Mat<S> d2 = d - (ScalarOps<S>::from_int(2) * id);
  Tripotent<S> t{e, half * (d * d1), ScalarOps<S>::from_int(-1) * (d * d2), half * (d1 * d2)};
  return t;
}
template Tripotent<GQ> make_tripotent<GQ>(const Elem<GQ>&);
template Tripotent<CD> make_tripotent<CD>(const Elem<CD>&);

template <class S>
Frame<S> make_frame(const std::vector<Elem<S>>& es) {
  if (es.empty()) throw std::invalid_argument("empty frame");
  Frame<S> f;
  for (const auto& e : es) f.e.push_back(make_tripotent(e));
  const Model& m = *es[0].model;
  for (int i = 0; i < f.r(); ++i)
    for (int j = 0; j < f.r(); ++j) {
      if (i == j) continue;
      Elem<S> d = f.e[j].project(0, f.e[i].e) - f.e[i].e;
      bool ok;
      if constexpr (ScalarOps<S>::exact) ok = d.is_zero();
      else ok = elem_norm(d) <= 1e-10 * (1 + elem_norm(f.e[i].e));
      if (!ok) throw std::invalid_argument("frame elements are not orthogonal");
    }
  const int r = f.r();
  f.joint.assign(r + 1, std::vector<Mat<S>>());
  for (int i = 0; i <= r; ++i) f.joint[i].assign(r + 1, Mat<S>());
  for (int i = 0; i <= r; ++i)
    for (int j = i; j <= r; ++j) {
      Mat<S> p = Mat<S>::identity(m.dim);
      for (int l = 1; l <= r; ++l) {
        int mult = (l == i ? 1 : 0) + (l == j ? 1 : 0);
        const Tripotent<S>& t = f.e[l - 1];
        p = (mult == 2 ? t.p2 : (mult == 1 ? t.p1 : t.p0)) * p;
      }
      f.joint[i][j] = std::move(p);
    }
  return f;
}
template Frame<GQ> make_frame<GQ>(const std::vector<Elem<GQ>>&);
template Frame<CD> make_frame<CD>(const std::vector<Elem<CD>>&);

bool model_matches_parabolic(const Model& m, const MarkedParabolic& p) {
  return p.rs.type == m.cartan_type() && p.rs.rank == m.cartan_rank() &&
         p.marked == m.marked_node_1based() - 1;
}

Frame<GQ> frame_from_parabolic(const Model& m, const MarkedParabolic& p) {
  if (!model_matches_parabolic(m, p))
    throw std::invalid_argument("model " + m.spec_string() + " does not match the parabolic " +
                                to_string(p.rs.type) + std::to_string(p.rs.rank) + " node " +
                                std::to_string(p.marked + 1));
  if (m.rank != p.r()) throw std::logic_error("frame length disagrees with cascade length");
  std::vector<Elem<GQ>> es;
  for (int j = 0; j < m.rank; ++j) es.push_back(frame_element<GQ>(m, j));
  Frame<GQ> f = make_frame(es);

  // (1/p) τ(D(e_l, ē_l) e_j, ē_j) must equal ⟨γ_j, γ_l∨⟩.
  for (int l = 0; l < m.rank; ++l) {
    for (int j = 0; j < m.rank; ++j) {
      GQ lhs = trace_form(triple(es[l], es[l], es[j]), es[j]) /
               ScalarOps<GQ>::from_int(m.structure_constant);
      Rat rhs = coroot_pairing(to_rat(p.gammas[j]), p.gammas[l]);
      if (!(lhs == GQ(rhs)))
        throw std::logic_error("frame/root correspondence failed the trace identity");
    }
  }
  return f;
}

Elem<CD> SpectralData::reconstruct(const Model& m) const {
  Elem<CD> x(m);
  for (size_t j = 0; j < sigma.size(); ++j)
    for (int c = 0; c < m.dim; ++c) x.v[c] += sigma[j] * tripotent[j].v[c];
  return x;
}

SpectralData spectral_decomposition(const Elem<CD>& x) {
  const Model& m = *x.model;
  SpectralData out;
  if (m.kind == ModelKind::Rect) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rect_matrix(x),
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return out;
    double smax = sv(0);
    if (smax <= 0) return out;
    std::vector<std::pair<double, std::vector<int>>> groups;
    for (int i = 0; i < sv.size(); ++i) {
      double s = sv(i);
      if (s <= tol::kRank * smax) break;
      if (!groups.empty() && (groups.back().first - s) <= tol::kSpectralMerge * smax)
        groups.back().second.push_back(i);
      else
        groups.push_back({s, {i}});
    }
    for (auto& [s, idxs] : groups) {
      Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(m.p, m.q);
      double avg = 0;
      for (int i : idxs) {
        t += svd.matrixU().col(i) * svd.matrixV().col(i).adjoint();
        avg += sv(i);
      }
      out.sigma.push_back(avg / idxs.size());
      out.tripotent.push_back(rect_elem(m, t));
    }
    return out;
  }

  double h = std::real(spin_hform(x, x));
  if (h <= 0 || std::sqrt(h) <= tol::kRank) return out;
  CD beta = spin_bform(x, x);
  double s = h / 2.0;                   // σ1² + σ2²
  double mprod = std::abs(beta) / 4.0;  // σ1 σ2
  double disc = std::max(0.0, s * s - 4.0 * mprod * mprod);
  double s1sq = (s + std::sqrt(disc)) / 2.0;
  double s2sq = (s - std::sqrt(disc)) / 2.0;
  double s1 = std::sqrt(std::max(0.0, s1sq));
  double s2 = std::sqrt(std::max(0.0, s2sq));
  if (s1 <= 0) return out;
  if (s2 <= tol::kRank * s1) {
    CD inv = 1.0 / s1;
    out.sigma.push_back(s1);
    out.tripotent.push_back(inv * x);
    return out;
  }
  if ((s1 - s2) <= tol::kSpectralMerge * s1) {
    double sm = (s1 + s2) / 2.0;
    CD inv = 1.0 / sm;
    out.sigma.push_back(sm);
    out.tripotent.push_back(inv * x);  // merged rank-two tripotent
    return out;
  }
  Elem<CD> x3 = qmap(x, x);
  CD c1f = 1.0 / (s1 * (s1sq - s2sq));
  CD c2f = 1.0 / (s2 * (s2sq - s1sq));
  Elem<CD> c1(m), c2(m);
  for (int c = 0; c < m.dim; ++c) {
    c1.v[c] = c1f * (x3.v[c] - s2sq * x.v[c]);
    c2.v[c] = c2f * (x3.v[c] - s1sq * x.v[c]);
  }
  out.sigma = {s1, s2};
  out.tripotent = {c1, c2};
  return out;
}

int rank_of(const Elem<GQ>& x) {
  const Model& m = *x.model;
  if (m.kind == ModelKind::Rect) {
    Mat<GQ> a(m.p, m.q);
    for (int i = 0; i < m.p; ++i)
      for (int j = 0; j < m.q; ++j) a(i, j) = x.v[m.rect_index(i, j)];
    return rank(a);
  }
  if (x.is_zero()) return 0;
  GQ b(0);
  for (int c = 0; c < m.dim; ++c) b += x.v[c] * x.v[c];
  return b.is_zero() ? 1 : 2;
}

int rank_of(const Elem<CD>& x) {
  const Model& m = *x.model;
  if (m.kind == ModelKind::Rect) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rect_matrix(x));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0) return 0;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) > tol::kRank * sv(0)) ++r;
    return r;
  }
  double h = std::real(spin_hform(x, x));
  if (h <= 0 || std::sqrt(h) <= tol::kRank) return 0;
  return std::abs(spin_bform(x, x)) <= tol::kRank * h ? 1 : 2;
}

int rank_of_tripotent(const Elem<CD>& e) { return rank_of(e); }

std::vector<Elem<CD>> primitive_pieces(const SpectralData& sd) {
  std::vector<Elem<CD>> out;
  for (const Elem<CD>& c : sd.tripotent) {
    const Model& m = *c.model;
    if (rank_of(c) <= 1) {
      out.push_back(c);
      continue;
    }
    if (m.kind == ModelKind::Rect) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rect_matrix(c),
                                             Eigen::ComputeThinU | Eigen::ComputeThinV);
      for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) <= 0.5) break;
        Eigen::MatrixXcd t = svd.matrixU().col(i) * svd.matrixV().col(i).adjoint();
        out.push_back(rect_elem(m, t));
      }
      continue;
    }
    // spin rank-two tripotent: a primitive summand is a fixed vector of the
    // antilinear map z ↦ Q_c z on the Peirce-2 space, with isotropic square.
    Tripotent<CD> t = make_tripotent(c);
    std::vector<Elem<CD>> basis;
    for (int j = 0; j < m.dim && basis.size() < 2; ++j) {
      Elem<CD> cand = apply_op(t.p2, basis_element<CD>(m, j));
      for (const Elem<CD>& b : basis) {
        CD proj = spin_hform(cand, b) / spin_hform(b, b);
        for (int cc = 0; cc < m.dim; ++cc) cand.v[cc] -= proj * b.v[cc];
      }
      if (elem_norm(cand) > 1e-8) basis.push_back(cand);
    }
    if (basis.size() != 2)
      throw std::logic_error("Peirce-2 space of a rank-two tripotent is not 2-dimensional");
    Eigen::MatrixXcd g(m.dim, 2);
    for (int k = 0; k < 2; ++k)
      for (int cc = 0; cc < m.dim; ++cc) g(cc, k) = basis[k].v[cc];
    auto coords_in_basis = [&](const Elem<CD>& z) {
      Eigen::VectorXcd v(m.dim);
      for (int cc = 0; cc < m.dim; ++cc) v(cc) = z.v[cc];
      return (g.adjoint() * g).ldlt().solve(g.adjoint() * v).eval();
    };
    Eigen::Vector2cd f1 = coords_in_basis(qmap(c, basis[0]));
    Eigen::Vector2cd f2 = coords_in_basis(qmap(c, basis[1]));
    Eigen::Matrix4d M;
    auto put = [&](int col, const Eigen::Vector2cd& f, CD unit) {
      Eigen::Vector2cd w = std::conj(unit) * f;
      M(0, col) = w(0).real();
      M(1, col) = w(0).imag();
      M(2, col) = w(1).real();
      M(3, col) = w(1).imag();
    };
    put(0, f1, CD(1, 0));
    put(1, f1, CD(0, 1));
    put(2, f2, CD(1, 0));
    put(3, f2, CD(0, 1));
    Eigen::FullPivLU<Eigen::Matrix4d> lu(M - Eigen::Matrix4d::Identity());
    lu.setThreshold(1e-6);
    Eigen::MatrixXd ker = lu.kernel();
    auto vec_from = [&](const Eigen::Vector4d& w) {
      Elem<CD> z(m);
      CD a1(w(0), w(1)), a2(w(2), w(3));
      for (int cc = 0; cc < m.dim; ++cc) z.v[cc] = a1 * basis[0].v[cc] + a2 * basis[1].v[cc];
      return z;
    };
    auto try_primitive = [&](Elem<CD> z) -> bool {
      double h = std::real(spin_hform(z, z));
      if (h < 1e-12) return false;
      CD sc = std::sqrt(2.0 / h);
      for (auto& cc : z.v) cc *= sc;
      if (std::abs(spin_bform(z, z)) > 1e-8) return false;
      Elem<CD> rest = c - z;
      if (!is_tripotent(z) || !is_tripotent(rest)) return false;
      if (elem_norm(triple(z, z, rest)) > 1e-8) return false;
      out.push_back(z);
      out.push_back(rest);
      return true;
    };
    bool done = false;
    if (ker.cols() == 1) {
      done = try_primitive(vec_from(ker.col(0)));
    } else if (ker.cols() >= 2) {
      Eigen::Vector4d w1 = ker.col(0), w2 = ker.col(1);
      Elem<CD> z1 = vec_from(w1), z2 = vec_from(w2);
      CD b11 = spin_bform(z1, z1), b12 = spin_bform(z1, z2), b22 = spin_bform(z2, z2);
      std::vector<double> cands;
      if (std::abs(b22) > 1e-12) {
        CD disc = std::sqrt(b12 * b12 - b11 * b22);
        for (CD root : {(-b12 + disc) / b22, (-b12 - disc) / b22})
          if (std::abs(root.imag()) < 1e-6) cands.push_back(root.real());
      }
      cands.push_back(0.0);
      for (double tv : cands) {
        Eigen::Vector4d w = w1 + tv * w2;
        if (try_primitive(vec_from(w))) { done = true; break; }
      }
      if (!done) done = try_primitive(vec_from(w2));
    }
    if (!done) throw std::logic_error("failed to split a spin rank-two tripotent");
  }
  return out;
}

Elem<CD> random_element(const Model& m, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Elem<CD> x(m);
  for (int c = 0; c < m.dim; ++c) x.v[c] = CD(g(rng), g(rng));
  return x;
}

Elem<GQ> random_exact_element(const Model& m, std::mt19937_64& rng, int bound, int denom_bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, std::max(1, denom_bound));
  Elem<GQ> x(m);
  for (int c = 0; c < m.dim; ++c) x.v[c] = GQ(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  return x;
}

Elem<CD> random_tripotent(const Model& m, int k, std::mt19937_64& rng) {
  if (k < 1 || k > m.rank) throw std::invalid_argument("tripotent rank out of range");
  std::normal_distribution<double> g(0.0, 1.0);
  if (m.kind == ModelKind::Rect) {
    Eigen::MatrixXcd a(m.p, m.q);
    for (int i = 0; i < m.p; ++i)
      for (int j = 0; j < m.q; ++j) a(i, j) = CD(g(rng), g(rng));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(m.p, m.q);
    for (int i = 0; i < k; ++i) t += svd.matrixU().col(i) * svd.matrixV().col(i).adjoint();
    return rect_elem(m, t);
  }
  Eigen::VectorXd a(m.dim), b(m.dim);
  for (int c = 0; c < m.dim; ++c) { a(c) = g(rng); b(c) = g(rng); }
  a.normalize();
  b -= a.dot(b) * a;
  b.normalize();
  Elem<CD> e(m);
  for (int c = 0; c < m.dim; ++c) e.v[c] = CD(a(c), b(c));
  if (k == 1) return e;
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
  CD phase = std::polar(1.0, ang(rng));
  Elem<CD> full(m);
  for (int c = 0; c < m.dim; ++c) full.v[c] = e.v[c] + phase * std::conj(e.v[c]);
  return full;
}

bool rank_condition_check(const Elem<CD>& x, int k, std::mt19937_64& rng, int samples) {
  const Model& m = *x.model;
  double scale = 1.0 + std::pow(elem_norm(x), k);
  auto vanished = [&](const Elem<CD>& c) {
    return std::abs(jordan_algebra_det(c, x)) <= 1e-8 * scale;
  };
  bool all_vanish = true;
  SpectralData sd = spectral_decomposition(x);
  std::vector<Elem<CD>> prim = primitive_pieces(sd);
  if (static_cast<int>(prim.size()) >= k) {
    Elem<CD> c(m);
    for (int i = 0; i < k; ++i)
      for (int cc = 0; cc < m.dim; ++cc) c.v[cc] += prim[i].v[cc];
    if (!vanished(c)) all_vanish = false;
  }
  for (int s = 0; s < samples && all_vanish; ++s)
    if (!vanished(random_tripotent(m, k, rng))) all_vanish = false;
  return all_vanish;
}

Mat<CD> random_unitary_automorphism(const Model& m, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  if (m.kind == ModelKind::Rect) {
    auto haar = [&](int n) {
      Eigen::MatrixXcd a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = CD(g(rng), g(rng));
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
      Eigen::MatrixXcd qmat = qr.householderQ();
      Eigen::MatrixXcd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
      for (int i = 0; i < n; ++i) {
        CD d = rmat(i, i);
        if (std::abs(d) > 0) qmat.col(i) *= d / std::abs(d);
      }
      return qmat;
    };
    Eigen::MatrixXcd u = haar(m.p), v = haar(m.q);
    Mat<CD> h(m.dim, m.dim);
    for (int i = 0; i < m.p; ++i)
      for (int j = 0; j < m.q; ++j)
        for (int kk = 0; kk < m.p; ++kk)
          for (int ll = 0; ll < m.q; ++ll)
            h(m.rect_index(i, j), m.rect_index(kk, ll)) = u(i, kk) * std::conj(v(j, ll));
    return h;
  }
  Eigen::MatrixXd a(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) a(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
  CD phase = std::polar(1.0, ang(rng));
  Mat<CD> h(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) h(i, j) = phase * q(i, j);
  return h;
}

}  // namespace hermsym
