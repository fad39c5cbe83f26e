#pragma once

#include "hermsym/rootsystem.hpp"

namespace hermsym {

/// Root data of a maximal parabolic with abelian nilradical, marked at one
/// simple root. Carries the noncompact roots in the canonical order (the
/// strongly orthogonal block first, the remainder ascending in the
/// lexicographic order of the root lattice) together with the base weight.
struct MarkedParabolic {
  RootSystem rs;
  int marked = 0;  // 0-based Bourbaki index of the marked simple root

  std::vector<IVec> phi_L;       // compact roots (both signs)
  std::vector<IVec> phi_L_pos;   // compact positive roots
  std::vector<IVec> noncompact;  // α_1 … α_n, γ-block first
  std::vector<IVec> gammas;      // γ_1 … γ_r, strongly orthogonal cascade
  Weight lambda;                 // −(fundamental weight of the marked root)

  int r() const { return static_cast<int>(gammas.size()); }
  int n() const { return static_cast<int>(noncompact.size()); }

  /// Lexicographic comparison in the simple-root basis, marked root most
  /// significant, remaining simple roots in Bourbaki order.
  bool lex_less(const IVec& a, const IVec& b) const;

  /// Simple roots of Φ_L⁺ (the indecomposable ones).
  std::vector<IVec> levi_simple_roots() const;

  /// kλ + Σ m_i γ_i as an ε-coordinate weight.
  Weight label_weight(long k, const std::vector<long>& m) const;

  /// kλ + Σ a_j α_j for an exponent vector a over the noncompact roots.
  Weight monomial_weight(long k, const std::vector<int>& a) const;
};

/// Builds the marked parabolic, rejecting markings where some root has
/// multiplicity ≥ 2 at the marked node.
MarkedParabolic build_marked_parabolic(CartanType type, int rank, int marked_node_1based);

/// The strongly orthogonal cascade: γ_1 = marked root, each successor the
/// lexicographically smallest noncompact root strongly orthogonal to all
/// previous ones. Exposed separately so the construction can be re-checked.
std::vector<IVec> strongly_orthogonal_cascade(const MarkedParabolic& p);

}  // namespace hermsym
