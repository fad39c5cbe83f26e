#include "hermsym/okounkov.hpp"

#include "hermsym/moment.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hermsym {

namespace {

// 0-based ε-indices of the nonzero entries of a root vector
std::vector<std::pair<int, long>> root_support(const IVec& v) {
  std::vector<std::pair<int, long>> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back({static_cast<int>(i), v[i]});
  return s;
}

int rect_coord_of_root(const Model& m, const IVec& root) {
  // noncompact root ε_a − ε_{p+b} ↦ matrix entry (p+1−a, b), row-reversed so
  // that the cascade lands on the main diagonal
  auto s = root_support(root);
  if (s.size() != 2 || s[0].second != 1 || s[1].second != -1)
    throw std::logic_error("unexpected noncompact root shape for rect");
  int a = s[0].first + 1;       // 1-based, ≤ p
  int b = s[1].first - m.p + 1; // 1-based, ≤ q
  if (a > m.p || b < 1 || b > m.q) throw std::logic_error("noncompact root out of block");
  return m.rect_index(m.p - a, b - 1);
}

int spin_wb_col_of_root(const Model& m, const IVec& root) {
  auto s = root_support(root);
  if (s.size() == 1) {
    if (s[0].first != 0) throw std::logic_error("unexpected short root");
    return m.nspin - 1;  // ε₁ ↦ the lone last coordinate
  }
  if (s.size() != 2 || s[0].first != 0) throw std::logic_error("unexpected noncompact root");
  int mm = s[1].first + 1;  // ε-index of the partner, 1-based ≥ 2
  long sign = s[1].second;
  if (mm == 2) return sign < 0 ? 0 : 1;
  return 2 * (mm - 2) + (sign < 0 ? 0 : 1);
}

}  // namespace

ModelParabolic make_model_parabolic(const Model& m) {
  ModelParabolic mp;
  mp.model = m;
  mp.para = build_marked_parabolic(m.cartan_type(), m.cartan_rank(), m.marked_node_1based());
  frame_from_parabolic(m, mp.para);  // validates the pairing

  const int n = m.dim;
  if (mp.para.n() != n) throw std::logic_error("noncompact root count differs from dim V");
  Mat<GQ> c(n, n);
  for (int i = 0; i < n; ++i) {
    const IVec& root = mp.para.noncompact[i];
    if (m.kind == ModelKind::Rect) {
      c(rect_coord_of_root(m, root), i) = GQ(1);
    } else {
      int col = spin_wb_col_of_root(m, root);
      for (int row = 0; row < n; ++row) c(row, i) = m.weight_basis(row, col);
    }
  }
  auto inv = inverse(c);
  if (!inv) throw std::logic_error("coordinate basis is singular");
  mp.coord_basis = std::move(c);
  mp.coord_basis_inv = std::move(*inv);

  // the γ-block must carry the frame
  for (int l = 0; l < m.rank; ++l)
    for (int row = 0; row < n; ++row)
      if (!(mp.coord_basis(row, l) == m.frame[l][row]))
        throw std::logic_error("γ-block coordinates do not match the frame");
  return mp;
}

Weight monomial_weight(const ModelParabolic& mp, long k, const ExpVec& a) {
  std::vector<int> ai(a.begin(), a.end());
  return mp.para.monomial_weight(k, ai);
}

namespace {

// coordinate polynomials X_c(z) = Σ_i C(c,i) z_i, one per model coordinate
std::vector<ExpPoly> coordinate_polys(const ModelParabolic& mp) {
  const int n = mp.model.dim;
  std::vector<ExpPoly> xs;
  for (int c = 0; c < n; ++c) {
    ExpPoly p(n);
    for (int i = 0; i < n; ++i) {
      if (mp.coord_basis(c, i).is_zero()) continue;
      ExpVec e(n, 0);
      e[i] = 1;
      p.add_term(e, mp.coord_basis(c, i));
    }
    xs.push_back(std::move(p));
  }
  return xs;
}

ExpPoly poly_det(std::vector<std::vector<ExpPoly>>& a, int nvars) {
  const int n = static_cast<int>(a.size());
  if (n == 1) return a[0][0];
  ExpPoly out(nvars);
  // cofactor expansion along the first row
  for (int j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<ExpPoly>> minor;
    for (int i = 1; i < n; ++i) {
      std::vector<ExpPoly> row;
      for (int k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    ExpPoly term = a[0][j] * poly_det(minor, nvars);
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

}  // namespace

ExpPoly det_section(const ModelParabolic& mp, const Elem<GQ>& b) {
  const Model& m = mp.model;
  const int n = m.dim;
  std::vector<ExpPoly> xs = coordinate_polys(mp);
  if (m.kind == ModelKind::Rect) {
    // det(I_p − x · b*)
    std::vector<std::vector<ExpPoly>> a(m.p, std::vector<ExpPoly>(m.p, ExpPoly(n)));
    for (int i = 0; i < m.p; ++i)
      for (int j = 0; j < m.p; ++j) {
        ExpPoly s(n);
        for (int k = 0; k < m.q; ++k) {
          GQ bc = conj(b.v[m.rect_index(j, k)]);
          if (!bc.is_zero()) s = s + (bc * xs[m.rect_index(i, k)]);
        }
        a[i][j] = (i == j ? ExpPoly::constant(n, GQ(1)) : ExpPoly(n)) - s;
      }
    return poly_det(a, n);
  }
  // 1 − ½ Σ x_c conj(b_c) + (1/16)(Σ x_c²)·conj(Σ b_c²)
  ExpPoly h(n), bx(n);
  GQ bb(0);
  for (int c = 0; c < n; ++c) {
    GQ bc = conj(b.v[c]);
    if (!bc.is_zero()) h = h + (bc * xs[c]);
    bx = bx + (xs[c] * xs[c]);
    bb += b.v[c] * b.v[c];
  }
  return ExpPoly::constant(n, GQ(1)) - (GQ(Rat(1, 2)) * h) +
         ((GQ(Rat(1, 16)) * conj(bb)) * bx);
}

ExpPoly trivialize_fk(const ModelParabolic& mp, int j) {
  if (j < 0 || j > mp.model.rank) throw std::invalid_argument("frame index out of range");
  Elem<GQ> eps(mp.model);
  for (int l = 0; l < j; ++l) eps = eps + frame_element<GQ>(mp.model, l);
  return det_section(mp, -eps);
}

namespace {

/// Incremental exact row reduction keyed by leading monomials.
class RowReducer {
 public:
  /// Reduces p against the basis; inserts the remainder if nonzero.
  /// Returns true when the rank grew.
  bool insert(ExpPoly p) {
    for (;;) {
      if (p.is_zero()) return false;
      ExpVec lead = p.terms().rbegin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        GQ c = p.terms().rbegin()->second;
        GQ inv = GQ(1) / c;
        rows_.emplace(lead, inv * p);
        return true;
      }
      GQ c = p.coeff(lead);
      p = p - (c * it->second);
    }
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<ExpPoly> basis() const {
    std::vector<ExpPoly> out;
    for (const auto& [lead, p] : rows_) out.push_back(p);
    return out;
  }

 private:
  std::map<ExpVec, ExpPoly> rows_;
};

/// Deterministic sequence of small Gaussian-integer sample elements.
Elem<GQ> sample_element(const Model& m, int index) {
  // a fixed linear congruential stream over {−2,…,2} per coordinate part
  Elem<GQ> b(m);
  uint64_t s = 0x9e3779b97f4a7c15ull * (index + 1);
  auto next = [&s]() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((s >> 33) % 5) - 2;
  };
  for (int c = 0; c < m.dim; ++c) b.v[c] = GQ(Rat(next()), Rat(next()));
  return b;
}

}  // namespace

SectionSpace build_section_space(const ModelParabolic& mp, long k) {
  if (k < 1) throw std::invalid_argument("section space level must be ≥ 1");
  const Model& m = mp.model;
  Weight hw{scale(Rat(-1), mp.para.lambda.eps)};
  BigInt dim1 = weyl_dimension(mp.para.rs.positive_roots, hw);

  RowReducer level1;
  int draws = 0;
  const int max_draws = 64 * static_cast<int>(dim1.convert_to<long>()) + 256;
  while (level1.rank() < dim1 && draws < max_draws) {
    ExpPoly s = det_section(mp, sample_element(m, draws));
    ++draws;
    level1.insert(s);
  }
  if (BigInt(level1.rank()) > dim1)
    throw std::logic_error("level-1 rank exceeds the expected dimension");
  if (BigInt(level1.rank()) < dim1)
    throw std::logic_error("level-1 sections failed to span after " +
                           std::to_string(draws) + " samples");
  std::vector<ExpPoly> b1 = level1.basis();

  SectionSpace out;
  out.k = k;
  if (k == 1) {
    out.basis = std::move(b1);
    out.dimension = dim1;
    return out;
  }

  Weight hwk{scale(Rat(-k), mp.para.lambda.eps)};
  BigInt dimk = weyl_dimension(mp.para.rs.positive_roots, hwk);
  RowReducer levelk;
  // k-fold products of level-1 basis vectors, enumerated as multisets
  std::vector<int> idx(k, 0);
  const int d1 = static_cast<int>(b1.size());
  for (;;) {
    ExpPoly prod = b1[idx[0]];
    for (long j = 1; j < k; ++j) prod = prod * b1[idx[j]];
    levelk.insert(std::move(prod));
    if (BigInt(levelk.rank()) == dimk) break;
    // next multiset index (nondecreasing tuples)
    long pos = k - 1;
    while (pos >= 0 && idx[pos] == d1 - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (long j = pos + 1; j < k; ++j) idx[j] = idx[pos];
  }
  if (BigInt(levelk.rank()) > dimk)
    throw std::logic_error("level-k rank exceeds the expected dimension");
  if (BigInt(levelk.rank()) < dimk)
    throw std::logic_error("level-k products failed to span the section space");
  out.basis = levelk.basis();
  out.dimension = dimk;
  return out;
}

Mat<GQ> levi_root_action(const ModelParabolic& mp, const IVec& alpha) {
  const Model& m = mp.model;
  const int n = m.dim;
  if (mp.para.rs.positive_root_index(alpha) < 0) {
    IVec neg(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
    if (mp.para.rs.positive_root_index(neg) < 0)
      throw std::invalid_argument("not a root");
  }

  Mat<GQ> t_model(n, n);
  if (m.kind == ModelKind::Rect) {
    auto s = root_support(alpha);
    if (s.size() != 2 || s[0].second * s[1].second != -1)
      throw std::invalid_argument("not a Levi root for rect");
    int pos = s[0].second > 0 ? s[0].first : s[1].first;
    int neg = s[0].second > 0 ? s[1].first : s[0].first;
    if (pos < m.p && neg < m.p) {
      // ε_a − ε_b on the row factor: left multiplication by a matrix unit in
      // the reversed row indexing
      int a = m.p - 1 - pos, bq = m.p - 1 - neg;  // 0-based rows
      for (int j = 0; j < m.q; ++j) t_model(m.rect_index(a, j), m.rect_index(bq, j)) = GQ(1);
    } else if (pos >= m.p && neg >= m.p) {
      // ε_{p+a} − ε_{p+b} on the column factor: −x·E_{ab}
      int a = pos - m.p, bq = neg - m.p;
      for (int i = 0; i < m.p; ++i) t_model(m.rect_index(i, bq), m.rect_index(i, a)) = GQ(-1);
    } else {
      throw std::invalid_argument("root crosses the marked node");
    }
  } else {
    // so-action in the hyperbolic weight basis
    const int n_model = m.nspin;
    Mat<GQ> t_wb(n_model, n_model);
    auto wb_pair = [&](int eps_idx) {  // ε-index (0-based ≥ 1) ↦ (plus, minus) columns
      if (eps_idx == 1) return std::pair<int, int>{0, 1};
      return std::pair<int, int>{2 * (eps_idx - 1), 2 * (eps_idx - 1) + 1};
    };
    auto s = root_support(alpha);
    if (s.size() == 1) {
      int c = s[0].first;
      if (c == 0) throw std::invalid_argument("root crosses the marked node");
      auto [cp, cm] = wb_pair(c);
      int w0 = n_model - 1;
      if (s[0].second > 0) {  // ε_c : w0 ↦ w⁺, w⁻ ↦ −2 w0
        t_wb(cp, w0) = GQ(1);
        t_wb(w0, cm) = GQ(-2);
      } else {  // −ε_c : w0 ↦ w⁻, w⁺ ↦ −2 w0
        t_wb(cm, w0) = GQ(1);
        t_wb(w0, cp) = GQ(-2);
      }
    } else if (s.size() == 2) {
      int c = s[0].first, d = s[1].first;
      long sc = s[0].second, sd = s[1].second;
      if (c == 0) throw std::invalid_argument("root crosses the marked node");
      auto [cp, cm] = wb_pair(c);
      auto [dp, dm] = wb_pair(d);
      if (sc > 0 && sd < 0) {  // ε_c − ε_d: w⁺_d ↦ w⁺_c, w⁻_c ↦ −w⁻_d
        t_wb(cp, dp) = GQ(1);
        t_wb(dm, cm) = GQ(-1);
      } else if (sc < 0 && sd > 0) {  // ε_d − ε_c
        t_wb(dp, cp) = GQ(1);
        t_wb(cm, dm) = GQ(-1);
      } else if (sc > 0 && sd > 0) {  // ε_c + ε_d: w⁻_d ↦ w⁺_c, w⁻_c ↦ −w⁺_d
        t_wb(cp, dm) = GQ(1);
        t_wb(dp, cm) = GQ(-1);
      } else {  // −ε_c − ε_d: w⁺_d ↦ w⁻_c, w⁺_c ↦ −w⁻_d
        t_wb(cm, dp) = GQ(1);
        t_wb(dm, cp) = GQ(-1);
      }
    } else {
      throw std::invalid_argument("unexpected Levi root");
    }
    t_model = m.weight_basis * t_wb * m.weight_basis_inv;
  }
  return mp.coord_basis_inv * t_model * mp.coord_basis;
}

ExpPoly raising_action(const ModelParabolic& mp, const IVec& alpha, const ExpPoly& s) {
  Mat<GQ> t = levi_root_action(mp, alpha);
  const int n = mp.nvars();
  ExpPoly out(n);
  for (int j = 0; j < n; ++j) {
    ExpPoly dj = s.derivative(j);
    if (dj.is_zero()) continue;
    // field component (T z)_j = Σ_m T(j,m) z_m
    for (int mm = 0; mm < n; ++mm) {
      if (t(j, mm).is_zero()) continue;
      out = out + (t(j, mm) * (dj * ExpPoly::variable(n, mm)));
    }
  }
  return out;
}

std::string to_string(RaisingConvention c) {
  return c == RaisingConvention::PhiLPos ? "phi_L_pos" : "phi_L_neg";
}

std::vector<ExpPoly> weight_slice(const ModelParabolic& mp, const SectionSpace& space,
                                  const Weight& target) {
  // collect all monomials of the basis and split by weight
  std::map<ExpVec, int> col_of;
  std::vector<ExpVec> cols;
  for (const ExpPoly& p : space.basis)
    for (const auto& [e, c] : p.terms())
      if (col_of.emplace(e, 0).second) cols.push_back(e);
  std::sort(cols.begin(), cols.end());
  for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);

  std::vector<bool> off_weight(cols.size());
  int off_count = 0;
  for (size_t i = 0; i < cols.size(); ++i) {
    Weight w = monomial_weight(mp, space.k, cols[i]);
    off_weight[i] = !(w.eps == target.eps);
    if (off_weight[i]) ++off_count;
  }

  // combinations whose off-weight coefficients vanish
  Mat<GQ> sys(off_count, static_cast<int>(space.basis.size()));
  int row = 0;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (!off_weight[i]) continue;
    for (size_t b = 0; b < space.basis.size(); ++b)
      sys(row, static_cast<int>(b)) = space.basis[b].coeff(cols[i]);
    ++row;
  }
  std::vector<ExpPoly> out;
  for (const std::vector<GQ>& v : kernel(sys)) {
    ExpPoly p(mp.nvars());
    for (size_t b = 0; b < space.basis.size(); ++b)
      if (!v[b].is_zero()) p = p + (v[b] * space.basis[b]);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::vector<IVec> raising_set(const ModelParabolic& mp, RaisingConvention conv) {
  std::vector<IVec> simples = mp.para.levi_simple_roots();
  if (conv == RaisingConvention::PhiLPos) return simples;
  std::vector<IVec> neg;
  for (const IVec& a : simples) {
    IVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = -a[i];
    neg.push_back(std::move(v));
  }
  return neg;
}

/// Kernel of the raising derivations inside the span of `slice`.
std::vector<ExpPoly> raising_kernel(const ModelParabolic& mp,
                                    const std::vector<ExpPoly>& slice,
                                    RaisingConvention conv) {
  if (slice.empty()) return {};
  std::vector<IVec> rs = raising_set(mp, conv);
  if (rs.empty()) return slice;

  // columns: monomials of all raised images; rows stacked per root
  std::vector<std::vector<ExpPoly>> raised;  // [root][slice index]
  std::map<ExpVec, int> col_of;
  std::vector<ExpVec> cols;
  for (const IVec& a : rs) {
    std::vector<ExpPoly> row;
    for (const ExpPoly& s : slice) {
      ExpPoly r = raising_action(mp, a, s);
      for (const auto& [e, c] : r.terms())
        if (col_of.emplace(e, 0).second) cols.push_back(e);
      row.push_back(std::move(r));
    }
    raised.push_back(std::move(row));
  }
  std::sort(cols.begin(), cols.end());
  for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);

  Mat<GQ> sys(static_cast<int>(rs.size() * cols.size()), static_cast<int>(slice.size()));
  for (size_t ri = 0; ri < rs.size(); ++ri)
    for (size_t si = 0; si < slice.size(); ++si)
      for (const auto& [e, c] : raised[ri][si].terms())
        sys(static_cast<int>(ri * cols.size() + col_of[e]), static_cast<int>(si)) = c;

  std::vector<ExpPoly> out;
  for (const std::vector<GQ>& v : kernel(sys)) {
    ExpPoly p(mp.nvars());
    for (size_t si = 0; si < slice.size(); ++si)
      if (!v[si].is_zero()) p = p + (v[si] * slice[si]);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

ExpPoly normalize_by_valuation(const ExpPoly& p) {
  ExpVec v = valuation(p);
  GQ c = p.coeff(v);
  return (GQ(1) / c) * p;
}

}  // namespace

RaisingConvention resolve_raising_convention(const ModelParabolic& mp,
                                             const SectionSpace& space1) {
  auto works = [&](RaisingConvention conv) {
    for (const std::vector<long>& m : integral_points(1, mp.para.r())) {
      std::vector<ExpPoly> slice = weight_slice(mp, space1, mp.para.label_weight(1, m));
      if (raising_kernel(mp, slice, conv).size() != 1) return false;
    }
    return true;
  };
  if (works(RaisingConvention::PhiLPos)) return RaisingConvention::PhiLPos;
  if (works(RaisingConvention::PhiLNeg)) return RaisingConvention::PhiLNeg;
  throw std::logic_error("neither raising convention matches the staircase labels");
}

ExpPoly highest_weight_vector(const ModelParabolic& mp, const SectionSpace& space,
                              const std::vector<long>& m, RaisingConvention conv) {
  if (!staircase_valid(space.k, m) || static_cast<int>(m.size()) != mp.para.r())
    throw std::invalid_argument("label is not staircase-valid for this level");
  std::vector<ExpPoly> slice = weight_slice(mp, space, mp.para.label_weight(space.k, m));
  std::vector<ExpPoly> ker = raising_kernel(mp, slice, conv);
  if (ker.size() != 1) {
    std::string ms;
    for (long v : m) ms += std::to_string(v) + ",";
    throw std::logic_error("weight vector kernel has dimension " +
                           std::to_string(ker.size()) + " (expected 1) at m=(" + ms + ") k=" +
                           std::to_string(space.k));
  }
  return normalize_by_valuation(ker[0]);
}

namespace {

/// All-vertex extraction for a small affinely independent point family.
std::vector<ExpVec> hull_vertices(const std::vector<ExpVec>& pts) {
  if (pts.empty()) return {};
  const int n = static_cast<int>(pts[0].size());
  const int m = static_cast<int>(pts.size());
  // affine independence: rank of [p_i − p_0]
  Mat<GQ> diff(n, m - 1);
  for (int i = 1; i < m; ++i)
    for (int c = 0; c < n; ++c)
      diff(c, i - 1) = GQ(Rat(static_cast<long>(pts[i][c]) - static_cast<long>(pts[0][c])));
  if (rank(diff) == m - 1) return pts;  // simplex: every point is a vertex

  std::vector<ExpVec> verts;
  for (int i = 0; i < m; ++i) {
    // is pts[i] a convex combination of the others?
    Mat<GQ> sys(n + 1, m - 1);
    std::vector<GQ> rhs(n + 1);
    int col = 0;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      for (int c = 0; c < n; ++c) sys(c, col) = GQ(Rat(pts[j][c]));
      sys(n, col) = GQ(1);
      ++col;
    }
    for (int c = 0; c < n; ++c) rhs[c] = GQ(Rat(pts[i][c]));
    rhs[n] = GQ(1);
    // solve by RREF of the augmented system
    Mat<GQ> aug(n + 1, m);
    for (int r = 0; r <= n; ++r) {
      for (int c = 0; c < m - 1; ++c) aug(r, c) = sys(r, c);
      aug(r, m - 1) = rhs[r];
    }
    std::vector<int> piv = rref(aug);
    bool inconsistent = false;
    for (int c : piv)
      if (c == m - 1) inconsistent = true;
    if (inconsistent) {
      verts.push_back(pts[i]);
      continue;
    }
    if (static_cast<int>(piv.size()) < m - 1)
      throw std::logic_error("ambiguous hull membership for dependent points");
    bool nonneg = true;
    for (size_t r = 0; r < piv.size(); ++r) {
      GQ v = aug(static_cast<int>(r), m - 1);
      if (v.im != 0 || v.re < 0) nonneg = false;
    }
    if (!nonneg) verts.push_back(pts[i]);
  }
  return verts;
}

}  // namespace

OkounkovData okounkov_pipeline(const ModelParabolic& mp, long finite_generation_k) {
  OkounkovData out;
  SectionSpace space1 = build_section_space(mp, 1);
  out.convention = resolve_raising_convention(mp, space1);
  out.checks.push_back("convention-resolved");

  const int r = mp.para.r();
  std::map<std::vector<long>, ExpVec> vmap;
  for (const std::vector<long>& m : integral_points(1, r)) {
    ExpPoly s = highest_weight_vector(mp, space1, m, out.convention);
    ExpVec v = valuation(s);
    // the weight of the valuation monomial is the vector's weight
    Weight img = monomial_weight(mp, 1, v);
    if (!(img.eps == mp.para.label_weight(1, m).eps))
      throw std::logic_error("generator weight differs from its staircase label");
    out.generator_m.push_back(m);
    out.generator_v.push_back(v);
    out.lambda_images.push_back(img);
    vmap[m] = v;
  }
  out.checks.push_back("lambda-images-match-integral-points");

  std::set<ExpVec> distinct(out.generator_v.begin(), out.generator_v.end());
  if (static_cast<int>(distinct.size()) != r + 1)
    throw std::logic_error("generator valuations collide");
  out.checks.push_back("generator-valuations-distinct");

  out.body_vertices = hull_vertices(out.generator_v);
  if (static_cast<int>(out.body_vertices.size()) > r + 1)
    throw std::logic_error("hull has too many vertices");
  // hull vertices must map exactly onto the polytope vertex weights
  {
    std::set<RatVec> img;
    for (const ExpVec& v : out.body_vertices) img.insert(monomial_weight(mp, 1, v).eps);
    std::set<RatVec> expected;
    for (const Weight& w : moment_polytope_vertices(mp.para, 1)) expected.insert(w.eps);
    if (img != expected) throw std::logic_error("hull vertices miss the polytope vertices");
  }
  out.checks.push_back("hull-maps-onto-polytope-vertices");

  for (long k = 2; k <= finite_generation_k; ++k) {
    SectionSpace spacek = build_section_space(mp, k);
    for (const std::vector<long>& m : integral_points(k, r)) {
      ExpPoly s = highest_weight_vector(mp, spacek, m, out.convention);
      ExpVec v = valuation(s);
      ExpVec expect(mp.nvars(), 0);
      for (const std::vector<long>& part : staircase_factor(m, k)) {
        const ExpVec& pv = vmap.at(part);
        for (int c = 0; c < mp.nvars(); ++c) expect[c] += pv[c];
      }
      if (v != expect) {
        std::string ms;
        for (long x : m) ms += std::to_string(x) + ",";
        throw std::logic_error("valuation not a generator sum at m=(" + ms + "), k=" +
                               std::to_string(k));
      }
    }
    out.checks.push_back("finite-generation-k" + std::to_string(k));
  }
  return out;
}

}  // namespace hermsym
