#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hermsym/scalars.hpp"

namespace hermsym {

using ExpVec = std::vector<uint16_t>;

/// Polynomial in the ordered coordinates z_1…z_n with exact Gaussian-rational
/// coefficients. Zero coefficients are never stored.
class ExpPoly {
 public:
  ExpPoly() = default;
  explicit ExpPoly(int nvars) : n_(nvars) {}

  static ExpPoly constant(int nvars, const GQ& c);
  static ExpPoly variable(int nvars, int idx);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, GQ>& terms() const { return terms_; }

  GQ coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GQ(0) : it->second;
  }
  void add_term(const ExpVec& e, const GQ& c);

  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const GQ& s, const ExpPoly& a);
  bool operator==(const ExpPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  /// ∂p/∂z_i.
  ExpPoly derivative(int i) const;

  /// Substitutes z_i ↦ Σ_j M(i,j) z_j (a linear change of coordinates).
  ExpPoly substitute_linear(const std::vector<std::vector<GQ>>& rows) const;

  /// Keeps only the coordinates in `keep` (others set to zero), renumbering.
  ExpPoly restrict_to(const std::vector<int>& keep) const;

  std::string str() const;

 private:
  int n_ = 0;
  std::map<ExpVec, GQ> terms_;
};

/// Least exponent of the support under the inverse lexicographic order:
/// a < b iff a is smaller at the largest index where they differ.
bool invlex_less(const ExpVec& a, const ExpVec& b);
ExpVec invlex_min(const std::vector<ExpVec>& exps);

/// Valuation: the invlex-minimal exponent of the support; rejects zero.
ExpVec valuation(const ExpPoly& p);

}  // namespace hermsym
