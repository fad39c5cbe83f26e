#include "hermsym/serialize.hpp"

#include <sstream>

namespace hermsym {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string rat_str(const Rat& r) { return r.str(); }

Json exponent_json(const ExpVec& e) {
  Json a = Json::array();
  for (uint16_t v : e) a.push_back(v);
  return a;
}

Json mvec_json(const std::vector<long>& m) {
  Json a = Json::array();
  for (long v : m) a.push_back(v);
  return a;
}

}  // namespace

Json meta_block(const std::string& model_spec, std::optional<long> k,
                const std::string& convention, std::optional<uint64_t> seed) {
  Json meta;
  meta["model"] = model_spec;
  if (k) meta["k"] = *k;
  if (!convention.empty()) meta["convention"] = convention;
  if (seed) meta["seed"] = *seed;
  meta["version"] = kVersion;
  meta["schema"] = 1;
  return meta;
}

Json weight_json(const Weight& w) {
  Json coords = Json::array();
  for (const Rat& c : w.eps) coords.push_back(rat_str(c));
  Json out;
  out["coords"] = coords;
  out["basis"] = "epsilon";
  return out;
}

Json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
    return Json(v.convert_to<int64_t>());
  return Json(v.str());
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const CheckResult& c : checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = c.pass ? "pass" : "fail";
    j["detail"] = c.detail;
    out.push_back(j);
  }
  return out;
}

Json describe_json(const Model& m, const MarkedParabolic& p) {
  Json data;
  data["kind"] = m.kind == ModelKind::Rect ? "rect" : "spin";
  data["dim"] = m.dim;
  data["rank"] = m.rank;
  data["structure_constant"] = m.structure_constant;
  data["cartan_type"] = to_string(m.cartan_type());
  data["cartan_rank"] = m.cartan_rank();
  data["marked_node"] = m.marked_node_1based();
  Json frame = Json::array();
  for (const auto& e : m.frame) {
    Json v = Json::array();
    for (const GQ& c : e) v.push_back(to_string(c));
    frame.push_back(v);
  }
  data["frame"] = frame;
  Json gammas = Json::array();
  for (const IVec& g : p.gammas) {
    Json v = Json::array();
    for (long c : g) v.push_back(c);
    gammas.push_back(v);
  }
  data["gammas"] = gammas;
  data["lambda"] = weight_json(p.lambda);
  Json verts = Json::array();
  for (const Weight& w : moment_polytope_vertices(p, 1)) verts.push_back(weight_json(w));
  data["polytope_vertices"] = verts;
  data["k_max"] = k_max_for(m);
  return data;
}

Json table_json(const KTypeTable& t) {
  Json rows = Json::array();
  for (const KType& kt : t.types) {
    Json row;
    row["m"] = mvec_json(kt.m);
    row["weight"] = weight_json(kt.label);
    row["dominant_weight"] = weight_json(kt.dominant);
    row["dimension"] = bigint_json(kt.dimension);
    rows.push_back(row);
  }
  Json data;
  data["types"] = rows;
  data["total"] = bigint_json(t.total);
  data["expected_total"] = bigint_json(t.expected_total);
  data["ok"] = t.ok;
  return data;
}

Json polytope_json(const MarkedParabolic& p, long k) {
  Json verts = Json::array();
  auto vs = moment_polytope_vertices(p, k);
  for (size_t j = 0; j < vs.size(); ++j) {
    Json v;
    v["j"] = j;
    v["weight"] = weight_json(vs[j]);
    verts.push_back(v);
  }
  Json data;
  data["vertices"] = verts;
  data["facets"] = "1 >= nu_1 >= ... >= nu_r >= 0";
  return data;
}

Json okounkov_json(const ModelParabolic& mp, const OkounkovData& d) {
  Json gens = Json::array();
  for (size_t i = 0; i < d.generator_v.size(); ++i) {
    Json g;
    g["m"] = mvec_json(d.generator_m[i]);
    g["level"] = 1;
    g["valuation"] = exponent_json(d.generator_v[i]);
    g["weight"] = weight_json(d.lambda_images[i]);
    gens.push_back(g);
  }
  Json verts = Json::array();
  for (const ExpVec& v : d.body_vertices) verts.push_back(exponent_json(v));
  Json data;
  data["generators"] = gens;
  data["body_vertices"] = verts;
  Json checks = Json::array();
  for (const std::string& c : d.checks) checks.push_back(c);
  data["verified"] = checks;
  (void)mp;
  return data;
}

Json moment_json(const MomentValue& mv, const MarkedParabolic& p) {
  Json op = Json::array();
  for (int i = 0; i < mv.op.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < mv.op.cols(); ++j) {
      Json entry = Json::array();
      entry.push_back(mv.op(i, j).real());
      entry.push_back(mv.op(i, j).imag());
      row.push_back(entry);
    }
    op.push_back(row);
  }
  Json data;
  data["operator"] = op;
  if (mv.has_profile()) {
    auto nu = snap_profile(mv.nu);
    Json nuj = Json::array();
    for (double v : nu) nuj.push_back(v);
    data["nu"] = nuj;
    Json w = Json::array();
    for (double c : moment_weight_coords(nu, p)) w.push_back(c);
    data["weight"] = w;
  }
  return data;
}

std::string polytope_csv(const MarkedParabolic& p, long k) {
  std::ostringstream os;
  auto vs = moment_polytope_vertices(p, k);
  os << "j";
  for (size_t c = 0; c < p.lambda.eps.size(); ++c) os << ",eps" << (c + 1);
  os << "\n";
  for (size_t j = 0; j < vs.size(); ++j) {
    os << j;
    for (const Rat& c : vs[j].eps) os << "," << rat_str(c);
    os << "\n";
  }
  return os.str();
}

std::string okounkov_csv(const OkounkovData& d) {
  std::ostringstream os;
  size_t n = d.body_vertices.empty() ? 0 : d.body_vertices[0].size();
  os << "vertex";
  for (size_t c = 0; c < n; ++c) os << ",a" << (c + 1);
  os << "\n";
  for (size_t j = 0; j < d.body_vertices.size(); ++j) {
    os << j;
    for (uint16_t v : d.body_vertices[j]) os << "," << v;
    os << "\n";
  }
  return os.str();
}

std::string table_csv(const KTypeTable& t) {
  std::ostringstream os;
  os << "m,dimension\n";
  for (const KType& kt : t.types) {
    os << "\"(";
    for (size_t i = 0; i < kt.m.size(); ++i) os << (i ? " " : "") << kt.m[i];
    os << ")\"," << kt.dimension.str() << "\n";
  }
  return os.str();
}

}  // namespace hermsym
