#pragma once

#include <array>
#include <random>

#include "hermsym/jordan.hpp"
#include "hermsym/parabolic.hpp"
#include "hermsym/tolerances.hpp"

namespace hermsym {

template <class S>
bool is_tripotent(const Elem<S>& x);

/// A tripotent with its cached Peirce projections P2, P1, P0.
///
/// The projections are polynomials in D(e,e): with D having spectrum {0,1,2},
/// P2 = D(D−1)/2, P1 = D(2−D), P0 = (D−1)(D−2)/2, exact for exact scalars.
template <class S>
struct Tripotent {
  Elem<S> e;
  Mat<S> p2, p1, p0;

  Elem<S> project(int k, const Elem<S>& x) const {
    const Mat<S>& p = (k == 2 ? p2 : (k == 1 ? p1 : p0));
    return apply_op(p, x);
  }
};

template <class S>
Tripotent<S> make_tripotent(const Elem<S>& e);

/// Frame of orthogonal primitive tripotents with joint Peirce projections
/// P_{ij}, 0 ≤ i ≤ j ≤ r.
template <class S>
struct Frame {
  std::vector<Tripotent<S>> e;
  std::vector<std::vector<Mat<S>>> joint;  // joint[i][j], i ≤ j

  int r() const { return static_cast<int>(e.size()); }
  const Mat<S>& proj(int i, int j) const { return i <= j ? joint[i][j] : joint[j][i]; }
};

template <class S>
Frame<S> make_frame(const std::vector<Elem<S>>& es);

/// The model's standard frame ordered to match the strongly orthogonal roots
/// of the parabolic; validates the compatibility of the two descriptions via
/// the trace-form identity (1/p)τ(D(e_l,ē_l)e_j, ē_j) = ⟨γ_j, γ_l∨⟩.
Frame<GQ> frame_from_parabolic(const Model& m, const MarkedParabolic& p);

/// Checks that model and parabolic describe the same space.
bool model_matches_parabolic(const Model& m, const MarkedParabolic& p);

/// σ_1 > … > σ_k > 0 with orthogonal tripotents; x = Σ σ_j c_j.
struct SpectralData {
  std::vector<double> sigma;
  std::vector<Elem<CD>> tripotent;

  bool empty() const { return sigma.empty(); }
  Elem<CD> reconstruct(const Model& m) const;
};

/// Singular-value style decomposition; near-equal values (relative gap below
/// tol::kSpectralMerge) merge into a single tripotent.
SpectralData spectral_decomposition(const Elem<CD>& x);

int rank_of(const Elem<GQ>& x);
int rank_of(const Elem<CD>& x);
int rank_of_tripotent(const Elem<CD>& e);

/// Jordan algebra determinant of the tripotent's Peirce-2 algebra, extended
/// to all of V: Δ_e(x) = Δ(e−x, ē).
template <class S>
S jordan_algebra_det(const Elem<S>& e, const Elem<S>& x) {
  return gdet(e - x, e);
}

/// Splits x's spectral tripotents into primitive (rank-one) pieces.
std::vector<Elem<CD>> primitive_pieces(const SpectralData& sd);

/// Samples rank-k tripotents adapted to x (from its own spectral pieces plus
/// random ones) and reports whether Δ_c(x) vanished on every sample. Agrees
/// with k > rank(x).
bool rank_condition_check(const Elem<CD>& x, int k, std::mt19937_64& rng, int samples = 20);

/// Random rank-k tripotent (a partial isometry in the rect model).
Elem<CD> random_tripotent(const Model& m, int k, std::mt19937_64& rng);

/// Random element with independent standard complex Gaussian coordinates.
Elem<CD> random_element(const Model& m, std::mt19937_64& rng);

/// Random element with small Gaussian-integer coordinates over {-bound..bound}.
Elem<GQ> random_exact_element(const Model& m, std::mt19937_64& rng, int bound = 2,
                              int denom_bound = 1);

/// Random unitary Jordan-pair automorphism as a matrix on V.
Mat<CD> random_unitary_automorphism(const Model& m, std::mt19937_64& rng);

}  // namespace hermsym
