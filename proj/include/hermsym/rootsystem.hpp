#pragma once

#include <string>
#include <vector>

#include "hermsym/scalars.hpp"

namespace hermsym {

enum class CartanType { A, B, C, D };

std::string to_string(CartanType t);
CartanType cartan_from_char(char c);

/// Integer vector in the ambient ε-coordinate space.
using IVec = std::vector<long>;
/// Rational vector in the same space.
using RatVec = std::vector<Rat>;

/// A weight, stored by its exact ε-coordinates.
struct Weight {
  RatVec eps;

  bool operator==(const Weight& o) const { return eps == o.eps; }
};

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const IVec& b);
long dot(const IVec& a, const IVec& b);

RatVec to_rat(const IVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& a);

/// ⟨w, α∨⟩ = 2(w,α)/(α,α).
Rat coroot_pairing(const RatVec& w, const IVec& alpha);
/// s_α(w) = w − ⟨w,α∨⟩α.
RatVec reflect(const RatVec& w, const IVec& alpha);

/// Simple Lie algebra root data in standard ε-coordinates.
struct RootSystem {
  CartanType type;
  int rank = 0;     // number of simple roots
  int ambient = 0;  // dimension of the ε-space (rank+1 for type A)
  std::vector<IVec> simple_roots;    // Bourbaki numbering
  std::vector<IVec> positive_roots;  // closed under the Weyl group up to sign
  /// coordinates of each positive root in the simple-root basis (nonnegative integers)
  std::vector<std::vector<long>> pos_simple_coords;

  bool is_root(const IVec& v) const;
  int positive_root_index(const IVec& v) const;  // -1 if absent
  /// multiplicity m_{β_i}(α) of the i-th simple root (Bourbaki index, 0-based)
  long simple_multiplicity(int pos_root_idx, int simple_idx) const {
    return pos_simple_coords[pos_root_idx][simple_idx];
  }
};

/// Generates the root system by closing the simple roots under reflections.
RootSystem build_root_system(CartanType type, int rank);

/// Expected |Φ⁺| for the Cartan type (used as a generation cross-check).
int expected_positive_count(CartanType type, int rank);

/// Fundamental weight of the given simple root (0-based Bourbaki index).
/// For type A the representative orthogonal to (1,…,1) is returned.
Weight fundamental_weight(const RootSystem& rs, int node);

/// Unique dominant Weyl-orbit representative for the given positive system,
/// computed by repeated reflections at roots with negative pairing.
Weight dominant_representative(const Weight& w, const std::vector<IVec>& positive_system);

bool is_dominant(const Weight& w, const std::vector<IVec>& positive_system);

/// Weyl dimension ∏_{α∈Φ⁺} ⟨μ+ρ,α⟩/⟨ρ,α⟩ as an exact integer.
/// Throws std::invalid_argument on non-dominant input.
BigInt weyl_dimension(const std::vector<IVec>& positive_system, const Weight& highest);

}  // namespace hermsym
