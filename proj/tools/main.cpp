#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hermsym/serialize.hpp"

using namespace hermsym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string model_spec;
  long k = 1;
  std::string format = "json";
  uint64_t seed = 20240601;
  double tolerance = 1.0;
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_k) {
  cmd->add_option("model", o.model_spec, "model spec, rect:p,q or spin:n")->required();
  if (with_k) cmd->add_option("--k", o.k, "line bundle power");
  cmd->add_option("--format", o.format, "json|csv|table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--seed", o.seed, "seed for the deterministic sampling");
  cmd->add_option("--tolerance", o.tolerance, "scales the floating tolerances");
  cmd->add_flag("--force", o.force, "bypass the size and level guards");
}

/// Size/level guards; returns an error message or empty.
std::string guard_message(const Model& m, std::optional<long> k, bool force) {
  if (force) return "";
  if (m.dim > 16)
    return "model " + m.spec_string() + " exceeds the default size budget (dim " +
           std::to_string(m.dim) + " > 16); pass --force to override";
  if (k && *k > k_max_for(m))
    return "k=" + std::to_string(*k) + " exceeds k_max=" + std::to_string(k_max_for(m)) +
           " for " + m.spec_string() + "; pass --force to override";
  return "";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Elem<CD> parse_elem(const Model& m, const Json& arr) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != m.dim)
    throw std::invalid_argument("element needs exactly " + std::to_string(m.dim) +
                                " [re,im] entries");
  Elem<CD> x(m);
  for (int c = 0; c < m.dim; ++c) {
    const Json& e = arr[c];
    if (e.is_number()) {
      x.v[c] = CD(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      x.v[c] = CD(e[0].get<double>(), e[1].get<double>());
    } else {
      throw std::invalid_argument("element entries must be numbers or [re,im] pairs");
    }
  }
  return x;
}

int cmd_describe(const CommonOpts& o) {
  Model m = parse_model(o.model_spec);
  std::string g = guard_message(m, std::nullopt, o.force);
  if (!g.empty()) {
    std::cerr << g << "\n";
    return kExitUsage;
  }
  MarkedParabolic p =
      build_marked_parabolic(m.cartan_type(), m.cartan_rank(), m.marked_node_1based());
  Json out;
  out["meta"] = meta_block(m.spec_string(), std::nullopt, "", std::nullopt);
  out["data"] = describe_json(m, p);
  out["checks"] = Json::array();
  emit(out);
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, std::vector<std::string> suites) {
  Model m = parse_model(o.model_spec);
  std::string g = guard_message(m, std::nullopt, o.force);
  if (!g.empty()) {
    std::cerr << g << "\n";
    return kExitUsage;
  }
  if (suites.empty()) suites = suite_names();
  for (const std::string& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      std::cerr << "unknown suite: " << s << "\n";
      return kExitUsage;
    }
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.tolerance_scale = o.tolerance;
  std::vector<CheckResult> all;
  for (const std::string& s : suites) {
    for (CheckResult& c : run_suite(s, m, vo)) {
      c.name = s + "/" + c.name;
      all.push_back(std::move(c));
    }
  }
  bool pass = std::all_of(all.begin(), all.end(), [](const CheckResult& c) { return c.pass; });
  Json out;
  out["meta"] = meta_block(m.spec_string(), std::nullopt, "", o.seed);
  out["data"] = Json{{"suites", suites}, {"pass", pass}};
  out["checks"] = checks_json(all);
  emit(out);
  return pass ? kExitOk : kExitVerifyFail;
}

int cmd_decompose(const CommonOpts& o) {
  Model m = parse_model(o.model_spec);
  std::string g = guard_message(m, o.k, o.force);
  if (!g.empty()) {
    std::cerr << g << "\n";
    return kExitUsage;
  }
  MarkedParabolic p =
      build_marked_parabolic(m.cartan_type(), m.cartan_rank(), m.marked_node_1based());
  KTypeTable t = decompose(p, o.k);
  if (o.format == "csv") {
    std::cout << table_csv(t);
  } else if (o.format == "table") {
    for (const KType& kt : t.types) {
      std::cout << "m=(";
      for (size_t i = 0; i < kt.m.size(); ++i) std::cout << (i ? "," : "") << kt.m[i];
      std::cout << ") dim=" << kt.dimension.str() << "\n";
    }
    std::cout << "total=" << t.total.str() << " expected=" << t.expected_total.str()
              << " ok=" << (t.ok ? "yes" : "no") << "\n";
  } else {
    Json out;
    out["meta"] = meta_block(m.spec_string(), o.k, "", std::nullopt);
    out["data"] = table_json(t);
    out["checks"] = Json::array({Json{{"name", "dimension-identity"},
                                      {"status", t.ok ? "pass" : "fail"},
                                      {"detail", t.total.str() + " vs " +
                                                     t.expected_total.str()}}});
    emit(out);
  }
  return t.ok ? kExitOk : kExitVerifyFail;
}

int cmd_polytope(const CommonOpts& o) {
  Model m = parse_model(o.model_spec);
  std::string g = guard_message(m, std::nullopt, o.force);
  if (!g.empty()) {
    std::cerr << g << "\n";
    return kExitUsage;
  }
  MarkedParabolic p =
      build_marked_parabolic(m.cartan_type(), m.cartan_rank(), m.marked_node_1based());
  if (o.format == "csv") {
    std::cout << polytope_csv(p, o.k);
  } else {
    Json out;
    out["meta"] = meta_block(m.spec_string(), o.k, "", std::nullopt);
    out["data"] = polytope_json(p, o.k);
    out["checks"] = Json::array();
    emit(out);
  }
  return kExitOk;
}

int cmd_okounkov(const CommonOpts& o) {
  Model m = parse_model(o.model_spec);
  long fk = std::max(2L, std::min(o.k, 3L));
  std::string g = guard_message(m, fk, o.force);
  if (!g.empty()) {
    std::cerr << g << "\n";
    return kExitUsage;
  }
  ModelParabolic mp = make_model_parabolic(m);
  OkounkovData d = okounkov_pipeline(mp, fk);
  if (o.format == "csv") {
    std::cout << okounkov_csv(d);
  } else {
    Json out;
    out["meta"] = meta_block(m.spec_string(), fk, to_string(d.convention), std::nullopt);
    out["data"] = okounkov_json(mp, d);
    Json checks = Json::array();
    for (const std::string& c : d.checks)
      checks.push_back(Json{{"name", c}, {"status", "pass"}, {"detail", ""}});
    out["checks"] = checks;
    emit(out);
  }
  return kExitOk;
}

int cmd_moment_eval(const CommonOpts& o, const std::string& point_str,
                    const std::string& point_file) {
  Model m = parse_model(o.model_spec);
  std::string g = guard_message(m, std::nullopt, o.force);
  if (!g.empty()) {
    std::cerr << g << "\n";
    return kExitUsage;
  }
  std::string text = point_str;
  if (!point_file.empty()) {
    std::ifstream in(point_file);
    if (!in) {
      std::cerr << "cannot read " << point_file << "\n";
      return kExitUsage;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  if (text.empty()) {
    std::cerr << "moment-eval needs --point or --point-file\n";
    return kExitUsage;
  }
  Json spec = Json::parse(text);
  PairPoint<CD> pt = [&] {
    if (spec.contains("e")) {
      Elem<CD> e = parse_elem(m, spec.at("e"));
      Elem<CD> z = spec.contains("z") ? parse_elem(m, spec.at("z")) : Elem<CD>(m);
      return normal_form_point(e, z);
    }
    Elem<CD> x = parse_elem(m, spec.at("x"));
    Elem<CD> a = spec.contains("a") ? parse_elem(m, spec.at("a")) : Elem<CD>(m);
    return pair_point(x, a);
  }();
  MarkedParabolic p =
      build_marked_parabolic(m.cartan_type(), m.cartan_rank(), m.marked_node_1based());
  MomentValue mv = moment_general(pt);
  Json out;
  out["meta"] = meta_block(m.spec_string(), std::nullopt, "", std::nullopt);
  out["data"] = moment_json(mv, p);
  out["checks"] = Json::array();
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan-theoretic calculator for compact Hermitian symmetric spaces"};
  app.require_subcommand(1);

  CommonOpts od, ov, ok, op, oo, om;
  std::vector<std::string> suites;
  std::string point_str, point_file;

  CLI::App* describe = app.add_subcommand("describe", "model and root data summary");
  add_common(describe, od, false);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, ov, false);
  verify->add_option("--suite", suites, "suites to run (default: all)");

  CLI::App* dec = app.add_subcommand("decompose", "branching table for level k");
  add_common(dec, ok, true);

  CLI::App* poly = app.add_subcommand("polytope", "moment polytope vertices");
  add_common(poly, op, true);

  CLI::App* oko = app.add_subcommand("okounkov", "valuation semigroup and body");
  add_common(oko, oo, true);

  CLI::App* mev = app.add_subcommand("moment-eval", "moment value at a point");
  add_common(mev, om, false);
  mev->add_option("--point", point_str, "point as JSON, {\"x\":[...],\"a\":[...]} or "
                                        "{\"e\":[...],\"z\":[...]}");
  mev->add_option("--point-file", point_file, "file containing the point JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (describe->parsed()) return cmd_describe(od);
    if (verify->parsed()) return cmd_verify(ov, suites);
    if (dec->parsed()) return cmd_decompose(ok);
    if (poly->parsed()) return cmd_polytope(op);
    if (oko->parsed()) return cmd_okounkov(oo);
    if (mev->parsed()) return cmd_moment_eval(om, point_str, point_file);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
