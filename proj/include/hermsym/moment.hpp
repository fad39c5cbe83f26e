#pragma once

#include "hermsym/structure.hpp"

namespace hermsym {

/// A point of the compact space given by a representative pair (x, a); the
/// optional normal form (e tripotent, z ∈ V0(e)) describes the same point as
/// the class of (e+z, ē).
template <class S>
struct PairPoint {
  Elem<S> x, a;
  struct NormalForm {
    Elem<S> e, z;
  };
  std::optional<NormalForm> nf;
};

template <class S>
PairPoint<S> chart_point(const Elem<S>& x) {
  return {x, Elem<S>(*x.model), std::nullopt};
}

template <class S>
PairPoint<S> pair_point(const Elem<S>& x, const Elem<S>& a) {
  return {x, a, std::nullopt};
}

/// Builds ⟦e+z : ē⟧; rejects non-tripotent e and z outside V0(e).
PairPoint<CD> normal_form_point(const Elem<CD>& e, const Elem<CD>& z);

/// Γ_{x,a}, a positive definite operator depending polynomially on the pair.
/// Computed from the Bergman factorization where the pair is quasi-invertible
/// and by polynomial interpolation along t ↦ (x, t·a) elsewhere.
template <class S>
Mat<S> gamma_operator(const Elem<S>& x, const Elem<S>& a);

/// Value of the moment map: an anti-Hermitian operator on V, together with
/// the ν-profile against a frame when the underlying point determines one.
struct MomentValue {
  Mat<CD> op;
  std::vector<double> nu;  // length = model rank, descending, empty if unknown
  bool has_profile() const { return !nu.empty(); }
};

MomentValue moment_chart(const Elem<CD>& x);
MomentValue moment_spectral(const Model& m, const SpectralData& sd);
MomentValue moment_general(const PairPoint<CD>& pt);

/// ν-profile of an operator i(Id − Σ ν_l D(e_l, ē_l)) against a frame, by
/// solving on the diagonal joint Peirce blocks; verifies the reconstruction.
std::vector<double> profile_from_frame(const Mat<CD>& op, const Frame<CD>& f);

/// λ + Σ ν_j γ_j in ε-coordinates (floating).
std::vector<double> moment_weight_coords(const std::vector<double>& nu, const MarkedParabolic& p);

/// ν snapped into [0,1] at the chamber-wall tolerance; throws if farther out.
std::vector<double> snap_profile(std::vector<double> nu);

/// Vertices k(λ + γ_1 + … + γ_j), j = 0…r, of the scaled moment polytope.
std::vector<Weight> moment_polytope_vertices(const MarkedParabolic& p, long k);

/// Equal-fibre test for two normal-form points: equal σ-profiles and
/// Peirce-equivalent tripotents; rejects points without a normal form.
bool same_fibre(const PairPoint<CD>& p1, const PairPoint<CD>& p2);

/// h·x for a linear automorphism given as a matrix on V.
Elem<CD> apply_automorphism(const Mat<CD>& h, const Elem<CD>& x);

double anti_hermitian_defect(const Mat<CD>& op);

}  // namespace hermsym
