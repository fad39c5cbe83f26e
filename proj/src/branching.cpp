#include "hermsym/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermsym {

namespace {

void enumerate_staircase(long k, int r, std::vector<long>& cur,
                         std::vector<std::vector<long>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  long cap = cur.empty() ? k : cur.back();
  for (long v = 0; v <= cap; ++v) {
    cur.push_back(v);
    enumerate_staircase(k, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> integral_points(long k, int r) {
  if (k < 0 || r < 1) throw std::invalid_argument("integral_points requires k ≥ 0, r ≥ 1");
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  enumerate_staircase(k, r, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool staircase_valid(long k, const std::vector<long>& m) {
  long prev = k;
  for (long v : m) {
    if (v < 0 || v > prev) return false;
    prev = v;
  }
  return true;
}

std::vector<std::vector<long>> staircase_factor(const std::vector<long>& m, long k) {
  if (!staircase_valid(k, m)) throw std::invalid_argument("not a staircase vector");
  std::vector<std::vector<long>> parts;
  for (long j = 1; j <= k; ++j) {
    std::vector<long> part(m.size());
    for (size_t i = 0; i < m.size(); ++i) part[i] = m[i] >= j ? 1 : 0;
    parts.push_back(std::move(part));
  }
  return parts;
}

BigInt ktype_dimension(const MarkedParabolic& p, long k, const std::vector<long>& m) {
  if (!staircase_valid(k, m) || static_cast<int>(m.size()) != p.r())
    throw std::invalid_argument("label is not staircase-valid");
  Weight label = p.label_weight(k, m);
  Weight dom = dominant_representative(label, p.phi_L_pos);
  return weyl_dimension(p.phi_L_pos, dom);
}

KTypeTable decompose(const MarkedParabolic& p, long k) {
  if (k < 1) throw std::invalid_argument("decompose requires k ≥ 1");
  KTypeTable table;
  table.k = k;
  for (const std::vector<long>& m : integral_points(k, p.r())) {
    KType t;
    t.m = m;
    t.label = p.label_weight(k, m);
    t.dominant = dominant_representative(t.label, p.phi_L_pos);
    t.dimension = weyl_dimension(p.phi_L_pos, t.dominant);
    table.total += t.dimension;
    table.types.push_back(std::move(t));
  }
  // the expected total is the Weyl dimension of the full representation,
  // computed at the dominant weight −kλ
  Weight hw{scale(Rat(-k), p.lambda.eps)};
  table.expected_total = weyl_dimension(p.rs.positive_roots, hw);
  table.ok = (table.total == table.expected_total);
  return table;
}

long k_max_for(const Model& m) {
  if (m.kind == ModelKind::Spin) return 6;
  int a = std::min(m.p, m.q), b = std::max(m.p, m.q);
  if (a == 1 && b == 1) return 20;
  if (a == 1 && b == 2) return 12;
  if (a == 1) return 8;
  if (a == 2 && b == 2) return 6;
  if (a == 2 && b == 3) return 4;
  return 3;
}

}  // namespace hermsym
