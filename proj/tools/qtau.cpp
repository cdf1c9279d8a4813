#include "qtau/bethe.hpp"
#include "qtau/fock_oracle.hpp"
#include "qtau/qboson_model.hpp"
#include "qtau/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qtau;
using json = nlohmann::ordered_json;

namespace {

constexpr int kCheckFailure = 1;
constexpr int kUsageError = 2;

struct Args {
  std::string x, y, q = "0", mode = "all", model = "phase", qn, out, format;
  std::string qs = "1/4,1/3,2/5";
  int n = 3;
  int m = 3;
  int site = 0;
  int cutoff = 6;
  int trials = 3;
  std::uint64_t seed = 1;
  bool normalize = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

bool want_json(const Args& a, bool json_default) {
  if (a.format.empty()) return json_default;
  if (a.format == "json") return true;
  if (a.format == "text") return false;
  throw UsageError("format must be json or text");
}

void write(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(a.out);
  if (!file) throw UsageError("cannot write " + a.out);
  file << text;
}

void check_box(int N, int M) {
  const SizeCaps caps = size_caps();
  if (N > caps.n_max) throw UsageError("N exceeds the cap " + std::to_string(caps.n_max) + " (see QTAU_MAX_SIZE)");
  if (M < 0 || M > caps.m_max) throw UsageError("M must lie in [0, " + std::to_string(caps.m_max) + "]");
}

PointSet points(const std::string& text) { return parse_rational_list(text); }

// Square roots of points that must be rational squares.
PointSet roots_of(const PointSet& p, const char* what) {
  PointSet out;
  for (const auto& v : p) {
    auto r = exact_sqrt(v);
    if (!r) throw UsageError(std::string(what) + " values must be squares of rationals, got " + to_string(v));
    out.push_back(*r);
  }
  return out;
}

// Key/value lines or a flat JSON object.
std::string emit_values(const Args& a, const std::vector<std::pair<std::string, std::string>>& values) {
  if (want_json(a, false)) {
    json j;
    for (const auto& [k, v] : values) j[k] = v;
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& [k, v] : values) out += k + " = " + v + "\n";
  return out;
}

int cmd_scalar(const Args& a) {
  const auto x = points(a.x);
  const auto y = points(a.y);
  const BoxSpec box(static_cast<int>(x.size()), a.m);
  check_box(box.N, box.M);
  std::vector<std::pair<std::string, std::string>> values;
  if (a.mode == "det" || a.mode == "all") values.emplace_back("det", to_string(scalar_product(x, y, box, ScalarMode::det)));
  if (a.mode == "schur_sum" || a.mode == "all") {
    values.emplace_back("schur_sum", to_string(scalar_product(x, y, box, ScalarMode::schur_sum)));
  }
  if (values.empty()) throw UsageError("mode must be det, schur_sum or all");
  write(a, emit_values(a, values));
  return 0;
}

int cmd_qscalar(const Args& a) {
  const auto x = points(a.x);
  const auto y = points(a.y);
  const QBosonSpec spec{BoxSpec(static_cast<int>(x.size()), a.m), parse_rational(a.q)};
  check_box(spec.box.N, spec.box.M);
  std::vector<std::pair<std::string, std::string>> values;
  for (auto mode : all_qscalar_modes()) {
    if (a.mode == "all" || a.mode == to_string(mode)) values.emplace_back(to_string(mode), to_string(scalar_product_q(x, y, spec, mode)));
  }
  if (values.empty()) throw UsageError("mode must be hl_sum, det_quotient, big_schur, twisted_schur or all");
  write(a, emit_values(a, values));
  return 0;
}

int cmd_corr(const Args& a) {
  const auto u = roots_of(points(a.x), "x");
  const auto v = roots_of(points(a.y), "y");
  const BoxSpec box(static_cast<int>(u.size()), a.m);
  check_box(box.N, box.M);
  std::vector<std::pair<std::string, std::string>> values;
  if (a.mode == "det" || a.mode == "all") {
    values.emplace_back("det", to_string(correlation_Am(u, v, a.site, box, CorrelationMode::det)));
  }
  if (a.mode == "skew_sum" || a.mode == "all") {
    values.emplace_back("skew_sum", to_string(correlation_Am(u, v, a.site, box, CorrelationMode::skew_sum)));
  }
  if (values.empty()) throw UsageError("mode must be det, skew_sum or all");
  write(a, emit_values(a, values));
  return 0;
}

Model parse_model(const std::string& name) {
  if (name == "phase") return Model::phase;
  if (name == "qboson") return Model::qboson;
  throw UsageError("model must be phase or qboson");
}

int cmd_oracle(const Args& a, bool with_site) {
  const auto u = roots_of(points(a.x), "x");
  const auto v = roots_of(points(a.y), "y");
  const OracleSpec spec{parse_model(a.model), BoxSpec(static_cast<int>(u.size()), a.m), parse_rational(a.q)};
  check_box(spec.box.N, spec.box.M);
  PairingOptions options;
  if (with_site) options.insertion = a.site;
  options.site0_normalization = a.normalize;
  write(a, emit_values(a, {{"pairing", to_string(oracle_pairing(spec, u, v, options))}}));
  return 0;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "' in quantum numbers");
    }
  }
  return out;
}

int cmd_bethe(const Args& a) {
  check_box(a.n, a.m);
  std::vector<int> qn = a.qn.empty() ? std::vector<int>{} : parse_ints(a.qn);
  if (a.qn.empty()) {
    for (int i = 0; i < a.n; ++i) qn.push_back(i);
  }
  bethe::BetheRoots roots;
  double q = 0;
  if (a.model == "phase") {
    roots = bethe::solve_phase(a.n, a.m, qn);
  } else if (a.model == "qboson") {
    q = parse_rational(a.q).convert_to<double>();
    if (!(q >= 0 && q < 1)) throw UsageError("Q must lie in [0, 1)");
    const int steps = std::max(1, static_cast<int>(std::ceil(q / 0.05)));
    roots = bethe::continue_qboson(a.n, a.m, qn, q, q > 0 ? q / steps : 1.0).back().roots;
  } else {
    throw UsageError("model must be phase or qboson");
  }
  const bool ok = roots.residual < 1e-10;
  if (want_json(a, true)) {
    json j;
    j["model"] = a.model;
    j["N"] = a.n;
    j["M"] = a.m;
    j["Q"] = q;
    j["quantum_numbers"] = qn;
    j["roots"] = json::array();
    for (const auto& r : roots.roots) j["roots"].push_back({r.real(), r.imag()});
    j["residual"] = roots.residual;
    write(a, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out.precision(15);
    for (const auto& r : roots.roots) out << r.real() << " " << r.imag() << "\n";
    out << "residual " << roots.residual << "\n";
    write(a, out.str());
  }
  return ok ? 0 : kCheckFailure;
}

std::string poly_string(const QPoly& p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

int cmd_kostka(const Args& a) {
  if (a.cutoff < 0 || a.cutoff > size_caps().cutoff) throw UsageError("weight out of range");
  const auto& t = kostka_tables(a.cutoff);
  const auto n = static_cast<Eigen::Index>(t.order.size());
  if (want_json(a, false)) {
    json j;
    j["weight"] = a.cutoff;
    j["partitions"] = json::array();
    for (const auto& p : t.order) j["partitions"].push_back(to_string(p));
    j["K"] = json::array();
    for (Eigen::Index i = 0; i < n; ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < n; ++k) row.push_back(coefficient_strings(t.K(i, k)));
      j["K"].push_back(row);
    }
    write(a, j.dump(2) + "\n");
  } else {
    std::string out;
    for (Eigen::Index i = 0; i < n; ++i) {
      std::vector<std::string> row;
      for (Eigen::Index k = 0; k < n; ++k) row.push_back(poly_string(t.K(i, k)));
      out += to_string(t.order[static_cast<std::size_t>(i)]) + ": " + join(row, " | ") + "\n";
    }
    write(a, out);
  }
  return 0;
}

int cmd_expand(const Args& a) {
  const auto v = roots_of(points(a.y), "y");
  const OracleSpec spec{parse_model(a.model), BoxSpec(static_cast<int>(v.size()), a.m), parse_rational(a.q)};
  check_box(spec.box.N, spec.box.M);
  const auto state = bethe_state(spec, v);
  const auto partitions = enumerate_in_box(spec.box.N, spec.box.M);
  if (want_json(a, false)) {
    json j = json::array();
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      j.push_back({to_string(partitions[i]), to_string(state.coefficients(static_cast<Eigen::Index>(i)))});
    }
    write(a, j.dump(2) + "\n");
  } else {
    std::string out;
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      out += to_string(partitions[i]) + "  " + to_string(state.coefficients(static_cast<Eigen::Index>(i))) + "\n";
    }
    write(a, out);
  }
  return 0;
}

int cmd_verify(const Args& a, const std::string& suite) {
  SuiteConfig config;
  config.suite = suite;
  config.n_max = a.n;
  config.m_max = a.m;
  config.cutoff = a.cutoff;
  config.seed = a.seed;
  config.trials = a.trials;
  config.q_values = parse_rational_list(a.qs);
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Report report = run_suite(config);
  write(a, emit_report(report, want_json(a, true) ? ReportFormat::json : ReportFormat::text));
  return report.all_pass() ? 0 : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for phase-model and q-boson scalar products"};
  app.require_subcommand(1);
  Args a;
  std::string suite;

  auto add_points = [&](CLI::App* c) {
    c->add_option("--x", a.x, "comma-separated rationals p/q")->required();
    c->add_option("--y", a.y, "comma-separated rationals p/q")->required();
    c->add_option("--m", a.m, "box width M (sites 0..M)")->required();
  };
  auto add_output = [&](CLI::App* c) {
    c->add_option("--format", a.format, "json or text");
    c->add_option("--out", a.out, "output path");
  };

  auto* scalar = app.add_subcommand("scalar", "phase-model scalar product");
  add_points(scalar);
  scalar->add_option("--mode", a.mode, "det, schur_sum or all");
  add_output(scalar);

  auto* qscalar = app.add_subcommand("qscalar", "q-boson scalar product");
  add_points(qscalar);
  qscalar->add_option("--q", a.q, "deformation Q");
  qscalar->add_option("--mode", a.mode, "hl_sum, det_quotient, big_schur, twisted_schur or all");
  add_output(qscalar);

  auto* corr = app.add_subcommand("corr", "one-site correlation A_m (points must be rational squares)");
  add_points(corr);
  corr->add_option("--site", a.site, "insertion site m");
  corr->add_option("--mode", a.mode, "det, skew_sum or all");
  add_output(corr);

  auto* oracle = app.add_subcommand("oracle", "brute-force Fock-space pairing (points must be rational squares)");
  add_points(oracle);
  oracle->add_option("--model", a.model, "phase or qboson");
  oracle->add_option("--q", a.q, "deformation Q");
  auto* site_opt = oracle->add_option("--site", a.site, "insert a raising operator at this site");
  oracle->add_flag("--normalize", a.normalize, "divide each state by [n_0]!");
  add_output(oracle);

  auto* bethe_cmd = app.add_subcommand("bethe", "solve the Bethe equations");
  bethe_cmd->add_option("--model", a.model, "phase or qboson");
  bethe_cmd->add_option("--n", a.n, "particles")->required();
  bethe_cmd->add_option("--m", a.m, "box width M")->required();
  bethe_cmd->add_option("--qn", a.qn, "comma-separated quantum numbers (default 0..N-1)");
  bethe_cmd->add_option("--q", a.q, "deformation Q for the q-boson model");
  add_output(bethe_cmd);

  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka-Foulkes table of one weight");
  kostka_cmd->add_option("--cutoff", a.cutoff, "weight")->required();
  add_output(kostka_cmd);

  auto* expand = app.add_subcommand("expand", "Bethe-state coefficients over partition states");
  expand->add_option("--y", a.y, "points (rational squares)")->required();
  expand->add_option("--m", a.m, "box width M")->required();
  expand->add_option("--model", a.model, "phase or qboson");
  expand->add_option("--q", a.q, "deformation Q");
  add_output(expand);

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("suite", suite, join(registered_suites(), ", "))->required();
  verify->add_option("--n", a.n, "largest N");
  verify->add_option("--m", a.m, "largest M");
  verify->add_option("--cutoff", a.cutoff, "degree or weight bound");
  verify->add_option("--q", a.qs, "comma-separated Q values");
  verify->add_option("--seed", a.seed, "random seed");
  verify->add_option("--trials", a.trials, "random trials per size");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*scalar) return cmd_scalar(a);
    if (*qscalar) return cmd_qscalar(a);
    if (*corr) return cmd_corr(a);
    if (*oracle) return cmd_oracle(a, site_opt->count() > 0);
    if (*bethe_cmd) return cmd_bethe(a);
    if (*kostka_cmd) return cmd_kostka(a);
    if (*expand) return cmd_expand(a);
    if (*verify) return cmd_verify(a, suite);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
