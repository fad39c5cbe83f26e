#include "hermsym/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hermsym {

ExpPoly ExpPoly::constant(int nvars, const GQ& c) {
  ExpPoly p(nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

ExpPoly ExpPoly::variable(int nvars, int idx) {
  ExpPoly p(nvars);
  ExpVec e(nvars, 0);
  e[idx] = 1;
  p.add_term(e, GQ(1));
  return p;
}

void ExpPoly::add_term(const ExpVec& e, const GQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e(a.n_);
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

ExpPoly operator*(const GQ& s, const ExpPoly& a) {
  ExpPoly out(a.n_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
  return out;
}

ExpPoly ExpPoly::derivative(int i) const {
  ExpPoly out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    ExpVec d = e;
    d[i] -= 1;
    out.add_term(d, GQ(Rat(e[i])) * c);
  }
  return out;
}

ExpPoly ExpPoly::substitute_linear(const std::vector<std::vector<GQ>>& rows) const {
  std::vector<ExpPoly> images;
  for (int i = 0; i < n_; ++i) {
    ExpPoly im(n_);
    for (int j = 0; j < n_; ++j) im.add_term([&] { ExpVec e(n_, 0); e[j] = 1; return e; }(), rows[i][j]);
    images.push_back(std::move(im));
  }
  ExpPoly out(n_);
  for (const auto& [e, c] : terms_) {
    ExpPoly term = ExpPoly::constant(n_, c);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    out = out + term;
  }
  return out;
}

ExpPoly ExpPoly::restrict_to(const std::vector<int>& keep) const {
  std::vector<bool> keepmask(n_, false);
  for (int i : keep) keepmask[i] = true;
  ExpPoly out(n_);
  for (const auto& [e, c] : terms_) {
    bool ok = true;
    for (int i = 0; i < n_ && ok; ++i)
      if (e[i] > 0 && !keepmask[i]) ok = false;
    if (ok) out.add_term(e, c);
  }
  return out;
}

std::string ExpPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      os << "*z" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

bool invlex_less(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

ExpVec invlex_min(const std::vector<ExpVec>& exps) {
  if (exps.empty()) throw std::invalid_argument("invlex_min of empty set");
  const ExpVec* best = &exps[0];
  for (const ExpVec& e : exps)
    if (invlex_less(e, *best)) best = &e;
  return *best;
}

ExpVec valuation(const ExpPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("valuation of the zero polynomial");
  const ExpVec* best = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (!best || invlex_less(e, *best)) best = &e;
  }
  return *best;
}

}  // namespace hermsym
