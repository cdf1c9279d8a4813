#include "qtau/suites.hpp"

#include "qtau/bethe.hpp"
#include "qtau/fock_oracle.hpp"
#include "qtau/qboson_model.hpp"
#include "qtau/sampling.hpp"
#include "qtau/tableaux.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qtau {

namespace {

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string size_tag(int N, int M) { return "N=" + std::to_string(N) + " M=" + std::to_string(M); }

void add_equal(Report& r, std::string name, std::string label, const Rational& lhs, const Rational& rhs,
               const std::string& inputs = {}) {
  const bool pass = lhs == rhs;
  std::string detail = pass ? "value=" + to_string(lhs) : "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
  if (!inputs.empty()) detail += " " + inputs;
  r.add(std::move(name), std::move(label), pass, std::move(detail));
}

PointSet squares(const PointSet& u) {
  PointSet out = u;
  for (auto& v : out) v *= v;
  return out;
}

std::vector<std::vector<int>> subsets(int L, int N) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == N) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < L; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

void phase_scalar(const SuiteConfig& c, Report& r) {
  RandomRationals rng(c.seed);
  for (int N = 1; N <= c.n_max; ++N) {
    for (int M = 0; M <= c.m_max; ++M) {
      const BoxSpec box(N, M);
      for (int t = 0; t < c.trials; ++t) {
        const auto x = rng.distinct(static_cast<std::size_t>(N));
        const auto y = rng.distinct(static_cast<std::size_t>(N));
        const std::string tag = size_tag(N, M) + " trial " + std::to_string(t);
        const std::string inputs = "x=" + join(x) + " y=" + join(y);
        const Rational det = scalar_product(x, y, box, ScalarMode::det);
        add_equal(r, "det=schur-sum " + tag, "scalar-product-det-vs-schur-sum", det,
                  scalar_product(x, y, box, ScalarMode::schur_sum), inputs);
        add_equal(r, "symmetry " + tag, "scalar-product-symmetry", det, scalar_product(y, x, box, ScalarMode::det),
                  inputs);
      }
    }
  }
  for (int N = 0; N <= std::max(c.n_max, 4); ++N) {
    for (int t = 0; t < c.trials; ++t) {
      const auto y = rng.distinct(static_cast<std::size_t>(N));
      const Rational q = rng();
      r.add("vandermonde scaling N=" + std::to_string(N) + " trial " + std::to_string(t), "vandermonde-scaling",
            vandermonde_scaling_holds(y, q), "y=" + join(y) + " Q=" + to_string(q));
    }
  }
}

void phase_corr(const SuiteConfig& c, Report& r) {
  RandomRationals rng(c.seed);
  for (int N = 1; N <= std::min(c.n_max, 3); ++N) {
    for (int M = 0; M <= std::min(c.m_max, 3); ++M) {
      const BoxSpec box(N, M);
      const OracleSpec spec{Model::phase, box, 0};
      for (int t = 0; t < c.trials; ++t) {
        const auto u = rng.distinct_square_roots(static_cast<std::size_t>(N));
        const auto v = rng.distinct_square_roots(static_cast<std::size_t>(N));
        const std::vector<Rational> v_short(v.begin(), v.end() - 1);
        const std::string inputs = "u=" + join(u) + " v=" + join(v);
        for (int m = 0; m <= M; ++m) {
          const std::string tag = size_tag(N, M) + " m=" + std::to_string(m) + " trial " + std::to_string(t);
          PairingOptions options;
          options.insertion = m;
          const Rational oracle = oracle_pairing(spec, u, v_short, options);
          add_equal(r, "A_m skew-sum " + tag, "correlation-skew-sum-vs-oracle",
                    correlation_Am(u, v, m, box, CorrelationMode::skew_sum), oracle, inputs);
          if ((M + N - 1) % 2 == 0) {
            add_equal(r, "A_m det " + tag, "correlation-det-vs-oracle",
                      correlation_Am(u, v, m, box, CorrelationMode::det), oracle, inputs);
          }
        }
        const auto x = squares(u);
        const auto y = squares(v);
        add_equal(r, "empty skew " + size_tag(N, M) + " trial " + std::to_string(t), "skew-correlation-reduces",
                  correlation_skew({}, {}, x, y, box), scalar_product(x, y, box, ScalarMode::schur_sum), inputs);
        std::vector<Rational> w;
        for (int i = 0; i <= M; ++i) w.push_back(rng.nonzero());
        PairingOptions weighted;
        weighted.site_weights = w;
        add_equal(r, "hypergeometric " + size_tag(N, M) + " trial " + std::to_string(t),
                  "hypergeometric-tau-vs-oracle", hypergeometric_tau(x, y, box, w), oracle_pairing(spec, u, v, weighted),
                  inputs + " w=" + join(w));
      }
    }
  }
}

void hl_cauchy(const SuiteConfig& c, Report& r) {
  for (const auto& q : c.q_values) {
    for (int N = 1; N <= std::min(c.n_max, 3); ++N) {
      for (int M = 0; M <= c.m_max; ++M) {
        const int degree = std::min({M, 6, c.cutoff});
        const auto lhs = hl_cauchy_box_series(BoxSpec(N, M), q, degree);
        const auto rhs = hl_cauchy_product_series(N, q, degree);
        int bad = -1;
        for (int d = 0; d <= 2 * degree && bad < 0; ++d) {
          if (!(lhs.homogeneous_component(d) == rhs.homogeneous_component(d))) bad = d;
        }
        r.add("hl cauchy " + size_tag(N, M) + " Q=" + to_string(q), "hl-cauchy-identity", bad < 0,
              bad < 0 ? "x-degree<=" + std::to_string(degree) + " terms=" + std::to_string(rhs.terms().size())
                      : "first differing total degree " + std::to_string(bad));
      }
    }
  }
}

void qboson_modes(const SuiteConfig& c, Report& r) {
  RandomRationals rng(c.seed);
  for (const auto& q : c.q_values) {
    for (int N = 1; N <= std::min(c.n_max, 3); ++N) {
      for (int M = 0; M <= std::min(c.m_max, 3); ++M) {
        const BoxSpec box(N, M);
        const QBosonSpec qspec{box, q};
        for (int t = 0; t < c.trials; ++t) {
          const auto u = rng.distinct_square_roots(static_cast<std::size_t>(N));
          const auto v = rng.distinct_square_roots(static_cast<std::size_t>(N));
          const auto x = squares(u);
          const auto y = squares(v);
          const std::string tag = size_tag(N, M) + " Q=" + to_string(q) + " trial " + std::to_string(t);
          const std::string inputs = "x=" + join(x) + " y=" + join(y);
          const Rational hl = scalar_product_q(x, y, qspec, QScalarMode::hl_sum);
          if (N <= 2) {
            PairingOptions options;
            options.site0_normalization = true;
            add_equal(r, "hl_sum=oracle " + tag, "qboson-hl-sum-vs-oracle", hl,
                      oracle_pairing(OracleSpec{Model::qboson, box, q}, u, v, options), inputs);
          }
          const QPoly graded = graded_scalar_product_q(x, y, qspec, QScalarMode::hl_sum, M);
          for (auto mode : all_qscalar_modes()) {
            if (mode == QScalarMode::hl_sum) continue;
            const QPoly other = graded_scalar_product_q(x, y, qspec, mode, M);
            r.add("graded " + to_string(mode) + " " + tag, "qboson-graded-agreement", other == graded,
                  "degree<=" + std::to_string(M) + " " + inputs);
          }
          add_equal(r, "twisted=big_schur " + tag, "qboson-twisted-vs-big-schur",
                    scalar_product_q(x, y, qspec, QScalarMode::twisted_schur),
                    scalar_product_q(x, y, qspec, QScalarMode::big_schur), inputs);
          if (q == c.q_values.front()) {
            const Rational phase = scalar_product(x, y, box, ScalarMode::det);
            for (auto mode : all_qscalar_modes()) {
              add_equal(r, "Q=0 " + to_string(mode) + " " + size_tag(N, M) + " trial " + std::to_string(t),
                        "qboson-phase-limit", scalar_product_q(x, y, QBosonSpec{box, 0}, mode), phase, inputs);
            }
          }
        }
      }
    }
  }
}

void kostka(const SuiteConfig& c, Report& r) {
  for (int d = 0; d <= c.cutoff; ++d) {
    const auto& t = kostka_tables(d);
    const auto n = static_cast<Eigen::Index>(t.order.size());
    bool unitri = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!(t.K(i, i) == QPoly(1))) unitri = false;
      for (Eigen::Index j = 0; j < i; ++j) {
        if (!t.K(i, j).is_zero()) unitri = false;
      }
    }
    const std::string tag = "weight " + std::to_string(d);
    r.add("unitriangular " + tag, "kostka-unitriangular", unitri, "size=" + std::to_string(n));
    const Matrix<QPoly> prod = multiply(t.K, t.K_inv);
    bool identity = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (!(prod(i, j) == QPoly(i == j ? 1 : 0))) identity = false;
      }
    }
    r.add("K*K_inv=I " + tag, "kostka-inverse", identity, "size=" + std::to_string(n));
    bool classical = true;
    std::string first_bad;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto& lambda = t.order[static_cast<std::size_t>(i)];
        const auto& mu = t.order[static_cast<std::size_t>(j)];
        if (t.K(i, j)(Rational(1)) != Rational(tableau_kostka_number(lambda, mu))) {
          if (classical) first_bad = to_string(lambda) + "," + to_string(mu);
          classical = false;
        }
      }
    }
    r.add("K(1)=tableau count " + tag, "kostka-classical-limit", classical,
          classical ? "size=" + std::to_string(n) : "first mismatch " + first_bad);
    r.add("c~ inverse " + tag, "kostka-c-tilde-inverse", c_tilde_inverse_holds(d), "size=" + std::to_string(n));
  }
}

void supersym(const SuiteConfig& c, Report& r) {
  RandomRationals rng(c.seed);
  const int weight = std::min(c.cutoff, 6);
  for (int t = 0; t < c.trials; ++t) {
    for (int n = 1; n <= std::min(c.n_max, 3); ++n) {
      const auto y = rng.distinct(static_cast<std::size_t>(n));
      const Rational q = rng();
      PointSet beta = y;
      for (auto& b : beta) b *= -q;
      const MiwaCoords T = twist(from_points(y, std::max(weight, 1)), q);
      for (int w = 0; w <= weight; ++w) {
        bool ok = true;
        std::string bad;
        for (const auto& lambda : partitions_of(w)) {
          const Rational big = big_schur_eval(lambda, y, q);
          const bool same = big == supersymmetric_schur_eval(lambda, y, beta) && big == schur_in_miwa(lambda, T);
          if (!same && ok) bad = " first mismatch " + to_string(lambda);
          ok = ok && same;
        }
        r.add("supersymmetric |lambda|=" + std::to_string(w) + " |y|=" + std::to_string(n) + " trial " +
                  std::to_string(t),
              "supersymmetric-schur", ok, "y=" + join(y) + " Q=" + to_string(q) + bad);
      }
    }
  }
}

void giambelli(const SuiteConfig& c, Report& r) {
  RandomRationals rng(c.seed);
  for (int t = 0; t < c.trials; ++t) {
    const auto y = rng.distinct(static_cast<std::size_t>(std::min(c.n_max, 3)));
    for (int w = 0; w <= c.cutoff; ++w) {
      bool ok = true;
      std::string bad;
      for (const auto& lambda : partitions_of(w)) {
        const bool holds = giambelli_check(y, lambda);
        if (!holds && ok) bad = " first failure " + to_string(lambda);
        ok = ok && holds;
      }
      r.add("giambelli |lambda|=" + std::to_string(w) + " trial " + std::to_string(t), "giambelli-pluecker", ok,
            "y=" + join(y) + bad);
    }
  }
}

void oracle_cross(const SuiteConfig& c, Report& r) {
  RandomRationals rng(c.seed);
  for (int N = 1; N <= std::min(c.n_max, 3); ++N) {
    for (int M = 0; M <= std::min(c.m_max, 3); ++M) {
      const BoxSpec box(N, M);
      const OracleSpec spec{Model::phase, box, 0};
      for (int t = 0; t < c.trials; ++t) {
        const auto u = rng.distinct_square_roots(static_cast<std::size_t>(N));
        const auto v = rng.distinct_square_roots(static_cast<std::size_t>(N));
        const auto x = squares(u);
        const auto y = squares(v);
        const std::string tag = size_tag(N, M) + " trial " + std::to_string(t);
        const std::string inputs = "x=" + join(x) + " y=" + join(y);
        const Rational oracle = oracle_pairing(spec, u, v);
        add_equal(r, "oracle=det " + tag, "oracle-scalar-product", oracle, scalar_product(x, y, box, ScalarMode::det),
                  inputs);
        add_equal(r, "oracle=schur-sum " + tag, "oracle-scalar-product", oracle,
                  scalar_product(x, y, box, ScalarMode::schur_sum), inputs);
        const auto state = bethe_state(spec, v);
        const auto partitions = enumerate_in_box(N, M);
        bool ok = state.coefficients.size() == static_cast<Eigen::Index>(partitions.size());
        for (std::size_t i = 0; ok && i < partitions.size(); ++i) {
          ok = state.coefficients(static_cast<Eigen::Index>(i)) == schur_eval(partitions[i], y);
        }
        r.add("bethe coefficients " + tag, "bethe-state-schur-expansion", ok, inputs);
      }
    }
  }
}

void matrix_integral(const SuiteConfig& c, Report& r) {
  RandomRationals rng(c.seed);
  const int cutoff = c.cutoff;
  for (int n = 1; n <= std::min(c.n_max, 2); ++n) {
    for (int t = 0; t < c.trials; ++t) {
      std::vector<Rational> a, b;
      for (int k = 0; k < std::max(cutoff, 1); ++k) {
        a.push_back(rng());
        b.push_back(rng());
      }
      const MiwaCoords tm(a), tp(b);
      const Rational pairing = miwa_schur_pairing(n, tm, tp, cutoff);
      const Rational plus = matrix_integral_constant_term(n, tm, tp, cutoff, SignConvention::plus);
      const Rational minus = matrix_integral_constant_term(n, tm, tp, cutoff, SignConvention::minus);
      const std::string tag = "N=" + std::to_string(n) + " cutoff=" + std::to_string(cutoff) + " trial " +
                              std::to_string(t);
      add_equal(r, "constant term (+) " + tag, "matrix-integral-constant-term", plus, pairing,
                "t=" + join(a) + " t'=" + join(b));
      r.add("unique sign convention " + tag, "matrix-integral-sign", plus == pairing && minus != pairing,
            std::string("plus ") + (plus == pairing ? "matches" : "differs") + ", minus " +
                (minus == pairing ? "matches" : "differs"));
    }
  }
}

void bethe_suite(const SuiteConfig& c, Report& r) {
  for (int M = 0; M <= c.m_max; ++M) {
    double worst = 0;
    for (int k = 0; k <= M; ++k) {
      const auto roots = bethe::solve_phase(1, M, {k});
      const auto expected = std::polar(1.0, 2 * std::numbers::pi * k / (M + 1));
      worst = std::max(worst, std::abs(roots.roots[0] - expected));
    }
    r.add("roots of unity M=" + std::to_string(M), "bethe-single-particle", worst < 1e-12, "max error " + sci(worst));
  }
  for (int N = 1; N <= std::min(c.n_max, 3); ++N) {
    for (int M = 0; M <= c.m_max; ++M) {
      double worst = 0;
      double worst_path = 0;
      bool branches = true;
      const auto choices = subsets(N + M + 1, N);
      for (const auto& qn : choices) {
        worst = std::max(worst, bethe::solve_phase(N, M, qn).residual);
        for (const auto& step : bethe::continue_qboson(N, M, qn, 0.3, 0.05)) {
          worst_path = std::max(worst_path, step.roots.residual);
          branches = branches && step.matched;
        }
      }
      const std::string tag = size_tag(N, M) + " (" + std::to_string(choices.size()) + " quantum-number sets)";
      r.add("phase residual " + tag, "bethe-phase-equations", worst < 1e-10, "max residual " + sci(worst));
      r.add("q-boson continuation to Q=0.3 " + tag, "bethe-qboson-continuation", worst_path < 1e-10 && branches,
            "max residual " + sci(worst_path) + (branches ? "" : " branch jump"));
    }
  }
}

using SuiteFn = void (*)(const SuiteConfig&, Report&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table{
      {"phase-scalar", phase_scalar}, {"phase-corr", phase_corr},       {"hl-cauchy", hl_cauchy},
      {"qboson-modes", qboson_modes}, {"kostka", kostka},               {"supersym", supersym},
      {"giambelli", giambelli},       {"oracle-cross", oracle_cross},   {"matrix-integral", matrix_integral},
      {"bethe", bethe_suite}};
  return table;
}

}  // namespace

SizeCaps size_caps() {
  SizeCaps caps;
  if (const char* env = std::getenv("QTAU_MAX_SIZE")) {
    try {
      const int k = std::stoi(env);
      caps.n_max = std::max(caps.n_max, k);
      caps.m_max = std::max(caps.m_max, k);
      caps.cutoff = std::max(caps.cutoff, k);
    } catch (const std::exception&) {
      throw std::invalid_argument("QTAU_MAX_SIZE must be an integer");
    }
  }
  return caps;
}

const std::vector<std::string>& registered_suites() {
  static const std::vector<std::string> names{"phase-scalar", "phase-corr", "hl-cauchy",    "qboson-modes",
                                              "kostka",       "supersym",   "giambelli",    "oracle-cross",
                                              "matrix-integral", "bethe"};
  return names;
}

void validate(const SuiteConfig& config) {
  if (!suite_table().count(config.suite)) throw std::invalid_argument("unknown suite '" + config.suite + "'");
  const SizeCaps caps = size_caps();
  if (config.n_max < 1 || config.n_max > caps.n_max) {
    throw std::invalid_argument("n must lie in [1, " + std::to_string(caps.n_max) + "]");
  }
  if (config.m_max < 0 || config.m_max > caps.m_max) {
    throw std::invalid_argument("m must lie in [0, " + std::to_string(caps.m_max) + "]");
  }
  if (config.cutoff < 0 || config.cutoff > caps.cutoff) {
    throw std::invalid_argument("cutoff must lie in [0, " + std::to_string(caps.cutoff) + "]");
  }
  if (config.trials < 1) throw std::invalid_argument("trials must be positive");
  if (config.q_values.empty()) throw std::invalid_argument("need at least one Q value");
}

Report run_suite(const SuiteConfig& config) {
  validate(config);
  Report report;
  report.suite = config.suite;
  report.seed = config.seed;
  suite_table().at(config.suite)(config, report);
  return report;
}

}  // namespace qtau
