#pragma once

#include "hermsym/jordan.hpp"
#include "hermsym/parabolic.hpp"

namespace hermsym {

/// One irreducible summand of the level-k section space under the Levi.
struct KType {
  std::vector<long> m;  // k ≥ m_1 ≥ … ≥ m_r ≥ 0
  Weight label;         // kλ + Σ m_i γ_i
  Weight dominant;      // its dominant conjugate for Φ_L⁺
  BigInt dimension;
};

struct KTypeTable {
  long k = 0;
  std::vector<KType> types;
  BigInt total = 0;
  BigInt expected_total = 0;
  bool ok = false;
};

/// The staircase vectors k ≥ m_1 ≥ … ≥ m_r ≥ 0, ascending lexicographically.
std::vector<std::vector<long>> integral_points(long k, int r);

bool staircase_valid(long k, const std::vector<long>& m);

/// Unique decomposition of a staircase vector into k zero/one staircases.
std::vector<std::vector<long>> staircase_factor(const std::vector<long>& m, long k);

/// Dimension of the irreducible Levi representation labeled by kλ + Σ m_i γ_i.
BigInt ktype_dimension(const MarkedParabolic& p, long k, const std::vector<long>& m);

/// Full branching table for level k with the exact total cross-check.
KTypeTable decompose(const MarkedParabolic& p, long k);

/// Largest level the default command budget allows per model.
long k_max_for(const Model& m);

}  // namespace hermsym
