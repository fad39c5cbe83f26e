#include "hermsym/parabolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermsym {

bool MarkedParabolic::lex_less(const IVec& a, const IVec& b) const {
  int ia = rs.positive_root_index(a);
  int ib = rs.positive_root_index(b);
  if (ia < 0 || ib < 0) throw std::invalid_argument("lex_less expects positive roots");
  const std::vector<long>& ca = rs.pos_simple_coords[ia];
  const std::vector<long>& cb = rs.pos_simple_coords[ib];
  if (ca[marked] != cb[marked]) return ca[marked] < cb[marked];
  for (int j = 0; j < rs.rank; ++j) {
    if (j == marked) continue;
    if (ca[j] != cb[j]) return ca[j] < cb[j];
  }
  return false;
}

std::vector<IVec> MarkedParabolic::levi_simple_roots() const {
  std::vector<IVec> simples;
  for (const IVec& a : phi_L_pos) {
    bool decomposable = false;
    for (const IVec& b : phi_L_pos) {
      if (b == a) continue;
      IVec diff(a.size());
      for (size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
      bool zero = std::all_of(diff.begin(), diff.end(), [](long v) { return v == 0; });
      if (!zero && rs.positive_root_index(diff) >= 0) { decomposable = true; break; }
    }
    if (!decomposable) simples.push_back(a);
  }
  return simples;
}

Weight MarkedParabolic::label_weight(long k, const std::vector<long>& m) const {
  Weight w;
  w.eps = scale(Rat(k), lambda.eps);
  for (size_t i = 0; i < m.size() && i < gammas.size(); ++i)
    for (size_t c = 0; c < w.eps.size(); ++c) w.eps[c] += Rat(m[i]) * gammas[i][c];
  return w;
}

Weight MarkedParabolic::monomial_weight(long k, const std::vector<int>& a) const {
  Weight w;
  w.eps = scale(Rat(k), lambda.eps);
  for (size_t j = 0; j < a.size() && j < noncompact.size(); ++j)
    for (size_t c = 0; c < w.eps.size(); ++c) w.eps[c] += Rat(a[j]) * noncompact[j][c];
  return w;
}

std::vector<IVec> strongly_orthogonal_cascade(const MarkedParabolic& p) {
  std::vector<IVec> gammas;
  gammas.push_back(p.rs.simple_roots[p.marked]);
  for (;;) {
    const IVec* best = nullptr;
    for (const IVec& cand : p.noncompact) {
      bool ortho = true;
      for (const IVec& g : gammas) {
        if (g == cand) { ortho = false; break; }
        IVec sum(cand.size()), diff(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) {
          sum[i] = g[i] + cand[i];
          diff[i] = g[i] - cand[i];
        }
        if (p.rs.is_root(sum) || p.rs.is_root(diff)) { ortho = false; break; }
      }
      if (!ortho) continue;
      if (!best || p.lex_less(cand, *best)) best = &cand;
    }
    if (!best) break;
    gammas.push_back(*best);
  }
  return gammas;
}

MarkedParabolic build_marked_parabolic(CartanType type, int rank, int marked_node_1based) {
  MarkedParabolic p;
  p.rs = build_root_system(type, rank);
  if (marked_node_1based < 1 || marked_node_1based > rank)
    throw std::invalid_argument("marked node out of range");
  p.marked = marked_node_1based - 1;

  for (size_t i = 0; i < p.rs.positive_roots.size(); ++i) {
    long m = p.rs.pos_simple_coords[i][p.marked];
    if (m >= 2)
      throw std::invalid_argument("marked node is not Hermitian: multiplicity " +
                                  std::to_string(m) + " at some positive root");
    if (m == 0) {
      p.phi_L_pos.push_back(p.rs.positive_roots[i]);
    } else {
      p.noncompact.push_back(p.rs.positive_roots[i]);
    }
  }
  for (const IVec& a : p.phi_L_pos) {
    p.phi_L.push_back(a);
    IVec neg(a.size());
    for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    p.phi_L.push_back(neg);
  }

  p.gammas = strongly_orthogonal_cascade(p);

  // Reorder the noncompact roots: γ-block first, remainder ascending.
  std::vector<IVec> rest;
  for (const IVec& a : p.noncompact)
    if (std::find(p.gammas.begin(), p.gammas.end(), a) == p.gammas.end()) rest.push_back(a);
  std::sort(rest.begin(), rest.end(),
            [&p](const IVec& a, const IVec& b) { return p.lex_less(a, b); });
  std::vector<IVec> ordered = p.gammas;
  ordered.insert(ordered.end(), rest.begin(), rest.end());
  p.noncompact = std::move(ordered);

  Weight fw = fundamental_weight(p.rs, p.marked);
  p.lambda.eps = scale(Rat(-1), fw.eps);
  return p;
}

}  // namespace hermsym
