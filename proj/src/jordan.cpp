#include "hermsym/jordan.hpp"

#include <stdexcept>

namespace hermsym {

std::string Model::spec_string() const {
  if (kind == ModelKind::Rect)
    return "rect:" + std::to_string(p) + "," + std::to_string(q);
  return "spin:" + std::to_string(nspin);
}

CartanType Model::cartan_type() const {
  if (kind == ModelKind::Rect) return CartanType::A;
  return (nspin % 2 == 1) ? CartanType::B : CartanType::D;
}

int Model::cartan_rank() const {
  if (kind == ModelKind::Rect) return p + q - 1;
  return (nspin % 2 == 1) ? (nspin + 1) / 2 : (nspin + 2) / 2;
}

int Model::marked_node_1based() const {
  return kind == ModelKind::Rect ? p : 1;
}

Model make_rect(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("rect requires p,q >= 1");
  Model m;
  m.kind = ModelKind::Rect;
  m.p = p;
  m.q = q;
  m.dim = p * q;
  m.rank = std::min(p, q);
  m.structure_constant = p + q;
  for (int j = 0; j < m.rank; ++j) {
    std::vector<GQ> e(m.dim, GQ(0));
    e[m.rect_index(j, j)] = GQ(1);
    m.frame.push_back(std::move(e));
  }
  m.weight_basis = Mat<GQ>::identity(m.dim);
  m.weight_basis_inv = Mat<GQ>::identity(m.dim);
  return m;
}

Model make_spin(int n) {
  if (n < 3) throw std::invalid_argument("spin requires n >= 3");
  Model m;
  m.kind = ModelKind::Spin;
  m.nspin = n;
  m.dim = n;
  m.rank = 2;
  m.structure_constant = n;

  std::vector<GQ> e1(n, GQ(0)), e2(n, GQ(0));
  e1[0] = GQ(1); e1[1] = GQ(Rat(0), Rat(1));
  e2[0] = GQ(1); e2[1] = GQ(Rat(0), Rat(-1));
  m.frame.push_back(e1);
  m.frame.push_back(e2);

  // Columns: e1, e2, then (E_c + iE_{c+1}, E_c − iE_{c+1}) pairs, lone last
  // coordinate for odd n.
  Mat<GQ> w(n, n);
  auto set_col = [&w, n](int col, const std::vector<GQ>& v) {
    for (int i = 0; i < n; ++i) w(i, col) = v[i];
  };
  set_col(0, e1);
  set_col(1, e2);
  int col = 2;
  for (int c = 2; c + 1 < n; c += 2) {
    std::vector<GQ> up(n, GQ(0)), dn(n, GQ(0));
    up[c] = GQ(1); up[c + 1] = GQ(Rat(0), Rat(1));
    dn[c] = GQ(1); dn[c + 1] = GQ(Rat(0), Rat(-1));
    set_col(col++, up);
    set_col(col++, dn);
  }
  if (n % 2 == 1) {
    std::vector<GQ> last(n, GQ(0));
    last[n - 1] = GQ(1);
    set_col(col++, last);
  }
  m.weight_basis = w;
  auto inv = inverse(w);
  if (!inv) throw std::logic_error("spin weight basis singular");
  m.weight_basis_inv = *inv;
  return m;
}

Model parse_model(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("model spec needs ':'");
  std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
  try {
    if (head == "rect") {
      auto comma = tail.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("rect:p,q");
      int p = std::stoi(tail.substr(0, comma));
      int q = std::stoi(tail.substr(comma + 1));
      return make_rect(p, q);
    }
    if (head == "spin") return make_spin(std::stoi(tail));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad model spec: " + spec);
  }
  throw std::invalid_argument("unknown model kind: " + head);
}

}  // namespace hermsym
