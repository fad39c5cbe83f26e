#pragma once

#include <string>
#include <utility>

#include "hermsym/branching.hpp"
#include "hermsym/polynomial.hpp"
#include "hermsym/structure.hpp"

namespace hermsym {

/// A model paired with its flag-variety root data and the assignment of the
/// polynomial coordinates z_1…z_n to the noncompact roots (γ-block first).
struct ModelParabolic {
  Model model;
  MarkedParabolic para;
  /// column i = model coordinates of the basis vector dual to z_i
  Mat<GQ> coord_basis;
  Mat<GQ> coord_basis_inv;

  int nvars() const { return model.dim; }
};

ModelParabolic make_model_parabolic(const Model& m);

/// kλ + Σ a_j α_j for an exponent vector over the ordered coordinates.
Weight monomial_weight(const ModelParabolic& mp, long k, const ExpVec& a);

/// Trivialized determinant section z ↦ Δ(z, b), expanded exactly.
ExpPoly det_section(const ModelParabolic& mp, const Elem<GQ>& b);

/// Δ(z, −ē_j) with ē_j the sum of the first j frame tripotents; restricted to
/// the frame coordinates this is ∏_{i≤j}(1 + z_i).
ExpPoly trivialize_fk(const ModelParabolic& mp, int j);

/// Exact basis of the level-k section space in the z-coordinates.
struct SectionSpace {
  long k = 0;
  std::vector<ExpPoly> basis;
  BigInt dimension;
};

/// Spans determinant sections (k = 1) or their k-fold products, row-reduced
/// over the rationals until the rank saturates at the Weyl dimension; a rank
/// overshoot aborts.
SectionSpace build_section_space(const ModelParabolic& mp, long k);

/// The Levi root action realized as a linear vector field on the coordinates;
/// returns the matrix T with (T z)_i = Σ_j T(i,j) z_j.
Mat<GQ> levi_root_action(const ModelParabolic& mp, const IVec& alpha);

/// Derivation s ↦ ds(z)·(T_α z).
ExpPoly raising_action(const ModelParabolic& mp, const IVec& alpha, const ExpPoly& s);

enum class RaisingConvention { PhiLPos, PhiLNeg };
std::string to_string(RaisingConvention c);

/// Picks the root-set convention whose level-1 kernels sit exactly at the
/// zero/one staircase labels (resolved per model, recorded in outputs).
RaisingConvention resolve_raising_convention(const ModelParabolic& mp,
                                             const SectionSpace& space1);

/// Subspace of the space whose monomials all carry the target weight.
std::vector<ExpPoly> weight_slice(const ModelParabolic& mp, const SectionSpace& space,
                                  const Weight& target);

/// The unique (up to scalar) weight vector of label m annihilated by the
/// resolved raising set; kernel dimension ≠ 1 aborts with diagnostics.
ExpPoly highest_weight_vector(const ModelParabolic& mp, const SectionSpace& space,
                              const std::vector<long>& m, RaisingConvention conv);

struct OkounkovData {
  RaisingConvention convention;
  std::vector<std::vector<long>> generator_m;  // zero/one staircases, r+1 of them
  std::vector<ExpVec> generator_v;             // valuations of their weight vectors
  std::vector<Weight> lambda_images;           // weights of the generators
  std::vector<ExpVec> body_vertices;           // hull vertices of the level-1 slice
  std::vector<std::string> checks;             // names of the verifications that ran
};

/// Builds the valuation semigroup data at level one, identifies the images
/// with the integral points of the moment polytope, and verifies finite
/// generation at the given extra levels.
OkounkovData okounkov_pipeline(const ModelParabolic& mp, long finite_generation_k = 2);

}  // namespace hermsym
