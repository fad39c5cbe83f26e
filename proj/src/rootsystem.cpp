#include "hermsym/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hermsym/linalg.hpp"

namespace hermsym {

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::A: return "A";
    case CartanType::B: return "B";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
  }
  return "?";
}

CartanType cartan_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return CartanType::A;
    case 'B': case 'b': return CartanType::B;
    case 'C': case 'c': return CartanType::C;
    case 'D': case 'd': return CartanType::D;
  }
  throw std::invalid_argument("unknown Cartan type");
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long dot(const IVec& a, const IVec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec to_rat(const IVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rat coroot_pairing(const RatVec& w, const IVec& alpha) {
  return 2 * dot(w, alpha) / dot(alpha, alpha);
}

RatVec reflect(const RatVec& w, const IVec& alpha) {
  Rat c = coroot_pairing(w, alpha);
  RatVec r = w;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= c * alpha[i];
  return r;
}

bool RootSystem::is_root(const IVec& v) const {
  for (const IVec& a : positive_roots)
    if (a == v) return true;
  IVec neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  for (const IVec& a : positive_roots)
    if (a == neg) return true;
  return false;
}

int RootSystem::positive_root_index(const IVec& v) const {
  for (size_t i = 0; i < positive_roots.size(); ++i)
    if (positive_roots[i] == v) return static_cast<int>(i);
  return -1;
}

int expected_positive_count(CartanType type, int rank) {
  switch (type) {
    case CartanType::A: return rank * (rank + 1) / 2;
    case CartanType::B: return rank * rank;
    case CartanType::C: return rank * rank;
    case CartanType::D: return rank * (rank - 1);
  }
  return 0;
}

static std::vector<IVec> simple_roots_for(CartanType type, int rank, int ambient) {
  std::vector<IVec> s;
  auto unit = [&](int i, int j, long ci, long cj) {
    IVec v(ambient, 0);
    v[i] += ci;
    if (j >= 0) v[j] += cj;
    return v;
  };
  for (int i = 0; i + 1 < (type == CartanType::A ? rank + 1 : rank); ++i)
    s.push_back(unit(i, i + 1, 1, -1));
  switch (type) {
    case CartanType::A: break;
    case CartanType::B: s.push_back(unit(rank - 1, -1, 1, 0)); break;
    case CartanType::C: s.push_back(unit(rank - 1, -1, 2, 0)); break;
    case CartanType::D: s.push_back(unit(rank - 2, rank - 1, 1, 1)); break;
  }
  return s;
}

RootSystem build_root_system(CartanType type, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (type == CartanType::B && rank < 2) throw std::invalid_argument("B requires rank >= 2");
  if (type == CartanType::C && rank < 2) throw std::invalid_argument("C requires rank >= 2");
  if (type == CartanType::D && rank < 3) throw std::invalid_argument("D requires rank >= 3");

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.ambient = (type == CartanType::A) ? rank + 1 : rank;
  rs.simple_roots = simple_roots_for(type, rank, rs.ambient);

  // Close the simple roots under simple reflections.
  std::set<IVec> all(rs.simple_roots.begin(), rs.simple_roots.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IVec> cur(all.begin(), all.end());
    for (const IVec& a : cur) {
      for (const IVec& s : rs.simple_roots) {
        Rat c = coroot_pairing(to_rat(a), s);
        if (denominator(c) != 1) throw std::logic_error("non-integral Cartan pairing");
        long ci = c.convert_to<long>();
        IVec b = a;
        for (int k = 0; k < rs.ambient; ++k) b[k] -= ci * s[k];
        if (all.insert(b).second) grew = true;
      }
    }
  }

  // Express each root in the simple basis; positives have nonnegative coords.
  const int n = rank;
  Mat<GQ> basis(rs.ambient, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < rs.ambient; ++i) basis(i, j) = GQ(Rat(rs.simple_roots[j][i]));
  // Solve basis * x = root via least-structure: use normal equations on exact field.
  Mat<GQ> gram = basis.adjoint() * basis;
  auto gram_inv = inverse(gram);
  if (!gram_inv) throw std::logic_error("simple roots not independent");

  for (const IVec& a : all) {
    std::vector<GQ> rhs(rs.ambient);
    for (int i = 0; i < rs.ambient; ++i) rhs[i] = GQ(Rat(a[i]));
    std::vector<GQ> proj = basis.adjoint().apply(rhs);
    std::vector<GQ> x = gram_inv->apply(proj);
    bool nonneg = true, integral = true;
    std::vector<long> coords(n);
    for (int j = 0; j < n; ++j) {
      if (x[j].im != 0 || denominator(x[j].re) != 1) integral = false;
      else coords[j] = x[j].re.convert_to<long>();
      if (integral && coords[j] < 0) nonneg = false;
    }
    if (!integral) throw std::logic_error("root with non-integral simple coordinates");
    if (nonneg) {
      bool all_zero = std::all_of(coords.begin(), coords.end(), [](long c) { return c == 0; });
      if (!all_zero) {
        rs.positive_roots.push_back(a);
        rs.pos_simple_coords.push_back(coords);
      }
    }
  }

  if (static_cast<int>(rs.positive_roots.size()) != expected_positive_count(type, rank))
    throw std::logic_error("positive root count mismatch for " + to_string(type) +
                           std::to_string(rank));
  return rs;
}

Weight fundamental_weight(const RootSystem& rs, int node) {
  // Solve ⟨w, β_j∨⟩ = δ_{j,node}; for type A additionally w ⊥ (1,…,1).
  const int m = rs.ambient;
  const int extra = (rs.type == CartanType::A) ? 1 : 0;
  Mat<GQ> sys(rs.rank + extra, m);
  std::vector<GQ> rhs(rs.rank + extra, GQ(0));
  for (int j = 0; j < rs.rank; ++j) {
    const IVec& b = rs.simple_roots[j];
    Rat nrm = dot(b, b);
    for (int i = 0; i < m; ++i) sys(j, i) = GQ(Rat(2 * b[i]) / nrm);
    rhs[j] = (j == node) ? GQ(1) : GQ(0);
  }
  if (extra)
    for (int i = 0; i < m; ++i) sys(rs.rank, i) = GQ(1);

  // Square system for B/C/D; for A it is (rank+1) x (rank+1).
  auto inv = inverse(sys);
  if (!inv) throw std::logic_error("fundamental weight system singular");
  std::vector<GQ> x = inv->apply(rhs);
  Weight w;
  w.eps.resize(m);
  for (int i = 0; i < m; ++i) {
    if (x[i].im != 0) throw std::logic_error("complex fundamental weight");
    w.eps[i] = x[i].re;
  }
  return w;
}

bool is_dominant(const Weight& w, const std::vector<IVec>& positive_system) {
  for (const IVec& a : positive_system)
    if (coroot_pairing(w.eps, a) < 0) return false;
  return true;
}

Weight dominant_representative(const Weight& w, const std::vector<IVec>& positive_system) {
  Weight cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const IVec& a : positive_system) {
      if (coroot_pairing(cur.eps, a) < 0) {
        cur.eps = reflect(cur.eps, a);
        changed = true;
      }
    }
  }
  return cur;
}

BigInt weyl_dimension(const std::vector<IVec>& positive_system, const Weight& highest) {
  if (!is_dominant(highest, positive_system))
    throw std::invalid_argument("weyl_dimension: weight is not dominant");
  if (positive_system.empty()) return 1;
  RatVec rho(highest.eps.size(), Rat(0));
  for (const IVec& a : positive_system)
    for (size_t i = 0; i < rho.size(); ++i) rho[i] += Rat(a[i], 2);
  Rat prod = 1;
  RatVec shifted = add(highest.eps, rho);
  for (const IVec& a : positive_system) prod *= dot(shifted, a) / dot(rho, a);
  if (denominator(prod) != 1)
    throw std::logic_error("weyl_dimension: non-integral product");
  return numerator(prod);
}

}  // namespace hermsym
