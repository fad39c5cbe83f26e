#include "hermsym/moment.hpp"

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

template <class S>
Mat<S> gamma_factored(const Elem<S>& x, const Elem<S>& a) {
  Elem<S> qi = quasi_inverse(x, a);
  return bop(x, a - qi) * bop(a, x);
}

// Route selection for Γ. The relative singular-value test cannot flag a
// Bergman operator that is uniformly tiny (all its singular values collapse
// together near a boundary pair), so quasi-invertibility is measured here
// against the operator's natural unit scale instead.
template <class S>
bool gamma_route_invertible(const Elem<S>& x, const Elem<S>& a) {
  Mat<S> b = bop(x, a);
  if constexpr (ScalarOps<S>::exact) {
    return !ScalarOps<S>::is_zero(determinant(b));
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(b));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return false;
    return sv(sv.size() - 1) > 1e-6 * std::max(1.0, sv(0));
  }
}

template <class S>
S scalar_from_rat(const Rat& r) {
  if constexpr (ScalarOps<S>::exact) return GQ(r);
  else return CD(static_cast<double>(r), 0.0);
}

}  // namespace

template <class S>
Mat<S> gamma_operator(const Elem<S>& x, const Elem<S>& a) {
  if (a.is_zero()) return bop(x, -x);
  if (gamma_route_invertible(x, a)) return gamma_factored(x, a);

  // Interpolate the polynomial family t ↦ Γ(x, t·a) through quasi-invertible
  // nodes and evaluate at t = 1. The diagonal family has low degree; degree 4
  // suffices in practice and is re-verified at control nodes.
  static const std::vector<Rat> candidates = {
      Rat(0),      Rat(1, 2),  Rat(-1, 2), Rat(1, 3),  Rat(-1, 3), Rat(1, 4),
      Rat(-1, 4),  Rat(2),     Rat(-2),    Rat(3, 2),  Rat(-3, 2), Rat(2, 3),
      Rat(-2, 3),  Rat(3),     Rat(-3),    Rat(1, 5),  Rat(-1, 5), Rat(4, 3),
      Rat(-4, 3),  Rat(5, 2),  Rat(-5, 2), Rat(1, 6),  Rat(-1, 6), Rat(4),
      Rat(-4),     Rat(5, 3),  Rat(-5, 3), Rat(1, 7),  Rat(-1, 7), Rat(5)};

  const Model& m = *x.model;
  for (int degree : {4, 8}) {
    const int want = degree + 2;  // nodes + one control point
    std::vector<Rat> nodes;
    std::vector<Mat<S>> values;
    for (const Rat& t : candidates) {
      if (static_cast<int>(nodes.size()) == want) break;
      Elem<S> ta = scalar_from_rat<S>(t) * a;
      if (!gamma_route_invertible(x, ta)) continue;
      nodes.push_back(t);
      values.push_back(gamma_factored(x, ta));
    }
    if (static_cast<int>(nodes.size()) < want) continue;

    auto lagrange_at = [&](const Rat& at, int upto) {
      // Σ_j values[j] · ∏_{k≠j} (at−t_k)/(t_j−t_k) over nodes[0..upto)
      Mat<S> out(m.dim, m.dim);
      for (int j = 0; j < upto; ++j) {
        Rat w(1);
        for (int k = 0; k < upto; ++k) {
          if (k == j) continue;
          w *= (at - nodes[k]) / (nodes[j] - nodes[k]);
        }
        out = out + (scalar_from_rat<S>(w) * values[j]);
      }
      return out;
    };

    // control: the interpolant through the first degree+1 nodes must
    // reproduce the extra node's value
    Mat<S> predicted = lagrange_at(nodes[degree + 1], degree + 1);
    Mat<S> diff = predicted - values[degree + 1];
    bool ok = true;
    if constexpr (ScalarOps<S>::exact) {
      for (int i = 0; i < m.dim && ok; ++i)
        for (int j = 0; j < m.dim && ok; ++j)
          if (!ScalarOps<S>::is_zero(diff(i, j))) ok = false;
    } else {
      double scale = 1.0;
      for (const auto& v : values) scale = std::max(scale, frob_norm(v));
      ok = frob_norm(diff) <= 1e-6 * scale;
    }
    if (ok) return lagrange_at(Rat(1), degree + 1);
  }
  throw std::domain_error("gamma_operator: interpolation failed to stabilize");
}
template Mat<GQ> gamma_operator<GQ>(const Elem<GQ>&, const Elem<GQ>&);
template Mat<CD> gamma_operator<CD>(const Elem<CD>&, const Elem<CD>&);

PairPoint<CD> normal_form_point(const Elem<CD>& e, const Elem<CD>& z) {
  if (!is_tripotent(e)) throw std::invalid_argument("normal form requires a tripotent");
  Tripotent<CD> t = make_tripotent(e);
  Elem<CD> pz = t.project(0, z);
  if (elem_norm(pz - z) > 1e-9 * (1 + elem_norm(z)))
    throw std::invalid_argument("normal form requires z in the Peirce-0 space of e");
  Elem<CD> zz = z;
  if (elem_norm(zz) <= 1e-12 * (1 + elem_norm(e))) zz = Elem<CD>(*e.model);
  PairPoint<CD> pt{e + zz, e, typename PairPoint<CD>::NormalForm{e, zz}};
  return pt;
}

namespace {

std::vector<double> pad_profile(const Model& m, std::vector<std::pair<double, int>> entries) {
  // entries: (ν, multiplicity); pad with zeros to the model rank and sort.
  std::vector<double> nu;
  for (auto& [v, mult] : entries)
    for (int i = 0; i < mult; ++i) nu.push_back(v);
  while (static_cast<int>(nu.size()) < m.rank) nu.push_back(0.0);
  std::sort(nu.rbegin(), nu.rend());
  if (static_cast<int>(nu.size()) != m.rank)
    throw std::logic_error("ν-profile longer than the model rank");
  return nu;
}

std::vector<std::pair<double, int>> spectral_profile_entries(const SpectralData& sd) {
  std::vector<std::pair<double, int>> entries;
  for (size_t j = 0; j < sd.sigma.size(); ++j) {
    double s2 = sd.sigma[j] * sd.sigma[j];
    entries.push_back({s2 / (1 + s2), rank_of_tripotent(sd.tripotent[j])});
  }
  return entries;
}

Mat<CD> scaled_identity(int n, CD s) {
  Mat<CD> m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

}  // namespace

MomentValue moment_chart(const Elem<CD>& x) {
  const Model& m = *x.model;
  Mat<CD> b1 = bop(x, -x);
  auto b1inv = inverse(b1);
  if (!b1inv) throw std::logic_error("B(x,−x̄) must be invertible");
  Mat<CD> b2 = bop(-x, x);
  auto b2inv = inverse(b2);
  if (!b2inv) throw std::logic_error("B(−x̄,x) must be invertible");
  Mat<CD> second = materialize<CD>(
      m, [&](const Elem<CD>& z) { return qmap(x, apply_op(*b2inv, qmap(x, z))); });
  MomentValue mv;
  mv.op = CD(0, 1) * (*b1inv - second);
  mv.nu = pad_profile(m, spectral_profile_entries(spectral_decomposition(x)));
  return mv;
}

MomentValue moment_spectral(const Model& m, const SpectralData& sd) {
  Mat<CD> op = scaled_identity(m.dim, CD(1, 0));
  for (size_t j = 0; j < sd.sigma.size(); ++j) {
    double s2 = sd.sigma[j] * sd.sigma[j];
    CD c(-s2 / (1 + s2), 0);
    op = op + (c * dop(sd.tripotent[j], sd.tripotent[j]));
  }
  MomentValue mv;
  mv.op = CD(0, 1) * op;
  mv.nu = pad_profile(m, spectral_profile_entries(sd));
  return mv;
}

MomentValue moment_general(const PairPoint<CD>& pt) {
  const Model& m = *pt.x.model;
  Mat<CD> g = gamma_operator(pt.x, pt.a);
  auto ginv = inverse(g);
  if (!ginv) throw std::logic_error("Γ must be invertible");
  Mat<CD> term1 = bop(pt.a, pt.x) * (*ginv) * bop(pt.x, pt.a);
  Mat<CD> term2 = materialize<CD>(
      m, [&](const Elem<CD>& z) { return qmap(pt.x, apply_op(*ginv, qmap(pt.x, z))); });
  MomentValue mv;
  mv.op = CD(0, 1) * (term1 - term2);
  if (pt.nf) {
    auto entries = spectral_profile_entries(spectral_decomposition(pt.nf->z));
    entries.push_back({1.0, rank_of_tripotent(pt.nf->e)});
    mv.nu = pad_profile(m, std::move(entries));
  } else if (pt.a.is_zero()) {
    mv.nu = pad_profile(m, spectral_profile_entries(spectral_decomposition(pt.x)));
  } else if (is_quasi_invertible(pt.x, pt.a)) {
    // the class of (x,a) is the chart point x^a
    Elem<CD> xa = quasi_inverse(pt.x, pt.a);
    mv.nu = pad_profile(m, spectral_profile_entries(spectral_decomposition(xa)));
  }
  return mv;
}

std::vector<double> profile_from_frame(const Mat<CD>& op, const Frame<CD>& f) {
  const Model& m = *f.e[0].e.model;
  Mat<CD> neg_i = CD(0, -1) * op;  // Id − Σ ν_l D(e_l, ē_l)
  std::vector<double> nu;
  for (int l = 1; l <= f.r(); ++l) {
    const Mat<CD>& pll = f.proj(l, l);
    CD tr_p = pll.trace();
    if (std::abs(tr_p) < 0.5) throw std::logic_error("empty diagonal Peirce block");
    CD tr = (pll * neg_i * pll).trace();
    // the block acts as (1 − 2ν_l)·Id
    nu.push_back((1.0 - std::real(tr / tr_p)) / 2.0);
  }
  // verify the reconstruction before trusting the profile
  Mat<CD> recon = scaled_identity(m.dim, CD(1, 0));
  for (int l = 1; l <= f.r(); ++l)
    recon = recon + (CD(-nu[l - 1], 0) * dop(f.e[l - 1].e, f.e[l - 1].e));
  if (frob_norm(recon - neg_i) > 1e-7 * (1 + frob_norm(neg_i)))
    throw std::invalid_argument("operator is not diagonal on the frame's Peirce blocks");
  std::sort(nu.rbegin(), nu.rend());
  return nu;
}

std::vector<double> snap_profile(std::vector<double> nu) {
  for (double& v : nu) {
    if (v < 0) {
      if (v < -tol::kChamberRound) throw std::domain_error("ν below 0 beyond tolerance");
      v = 0;
    }
    if (v > 1) {
      if (v > 1 + tol::kChamberRound) throw std::domain_error("ν above 1 beyond tolerance");
      v = 1;
    }
  }
  for (size_t i = 0; i + 1 < nu.size(); ++i)
    if (nu[i] < nu[i + 1] - tol::kChamberRound)
      throw std::domain_error("ν-profile is not sorted");
  return nu;
}

std::vector<double> moment_weight_coords(const std::vector<double>& nu,
                                         const MarkedParabolic& p) {
  std::vector<double> w(p.lambda.eps.size());
  for (size_t c = 0; c < w.size(); ++c) w[c] = static_cast<double>(p.lambda.eps[c]);
  for (size_t j = 0; j < nu.size() && j < p.gammas.size(); ++j)
    for (size_t c = 0; c < w.size(); ++c) w[c] += nu[j] * p.gammas[j][c];
  return w;
}

std::vector<Weight> moment_polytope_vertices(const MarkedParabolic& p, long k) {
  if (k < 1) throw std::invalid_argument("polytope level must be ≥ 1");
  std::vector<Weight> verts;
  RatVec acc = p.lambda.eps;
  verts.push_back(Weight{scale(Rat(k), acc)});
  for (int j = 0; j < p.r(); ++j) {
    for (size_t c = 0; c < acc.size(); ++c) acc[c] += p.gammas[j][c];
    verts.push_back(Weight{scale(Rat(k), acc)});
  }
  return verts;
}

namespace {

bool peirce_equivalent(const Elem<CD>& a, const Elem<CD>& b) {
  Tripotent<CD> ta = make_tripotent(a), tb = make_tripotent(b);
  double scale = 1.0 + frob_norm(ta.p2);
  return frob_norm(ta.p2 - tb.p2) <= 1e-9 * scale &&
         frob_norm(ta.p1 - tb.p1) <= 1e-9 * scale &&
         frob_norm(ta.p0 - tb.p0) <= 1e-9 * scale;
}

}  // namespace

bool same_fibre(const PairPoint<CD>& p1, const PairPoint<CD>& p2) {
  if (!p1.nf || !p2.nf)
    throw std::invalid_argument("same_fibre requires normal-form points");
  const auto& n1 = *p1.nf;
  const auto& n2 = *p2.nf;
  int r1 = rank_of_tripotent(n1.e), r2 = rank_of_tripotent(n2.e);
  if (r1 != r2) return false;
  if (r1 > 0 && !peirce_equivalent(n1.e, n2.e)) return false;
  SpectralData s1 = spectral_decomposition(n1.z), s2 = spectral_decomposition(n2.z);
  if (s1.sigma.size() != s2.sigma.size()) return false;
  for (size_t j = 0; j < s1.sigma.size(); ++j) {
    double scale = std::max({1.0, s1.sigma[j], s2.sigma[j]});
    if (std::abs(s1.sigma[j] - s2.sigma[j]) > 1e-9 * scale) return false;
    if (rank_of_tripotent(s1.tripotent[j]) != rank_of_tripotent(s2.tripotent[j])) return false;
    if (!peirce_equivalent(s1.tripotent[j], s2.tripotent[j])) return false;
  }
  return true;
}

Elem<CD> apply_automorphism(const Mat<CD>& h, const Elem<CD>& x) {
  return apply_op(h, x);
}

double anti_hermitian_defect(const Mat<CD>& op) {
  return frob_norm(op + op.adjoint()) / (1 + frob_norm(op));
}

}  // namespace hermsym
