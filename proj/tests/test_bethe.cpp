#include "doctest.h"

#include "qtau/bethe.hpp"

#include <cmath>
#include <numbers>

using namespace qtau::bethe;

namespace {

// All strictly increasing N-subsets of {0, ..., L-1}.
std::vector<std::vector<int>> subsets(int L, int N) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == N) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < L; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("single particle roots of unity") {
  for (int M = 0; M <= 6; ++M) {
    for (int k = 0; k <= M; ++k) {
      const auto r = solve_phase(1, M, {k});
      const Complex expected = std::polar(1.0, 2 * std::numbers::pi * k / (M + 1));
      CHECK(std::abs(r.roots[0] - expected) < 1e-12);
      CHECK(std::abs(std::abs(r.roots[0]) - 1.0) < 1e-12);
      for (double q : {0.1, 0.3, 0.7}) {
        const auto rq = solve_qboson(1, M, q, r);
        CHECK(std::abs(rq.roots[0] - expected) < 1e-12);
      }
    }
  }
  CHECK(residual(BetheModel::phase, 1, 3, 0, {Complex(0, 1)}) < 1e-15);
}

TEST_CASE("phase residuals over all quantum numbers") {
  for (int N = 1; N <= 3; ++N) {
    for (int M = 0; M <= 6; ++M) {
      for (const auto& qn : subsets(N + M + 1, N)) {
        const auto r = solve_phase(N, M, qn);
        CHECK(r.residual < 1e-10);
        CHECK(residual(BetheModel::phase, N, M, 0, r.roots) == r.residual);
        // product of all equations
        Complex prod(1), lhs(1);
        for (const auto& y : r.roots) {
          prod *= y;
          lhs *= std::pow(y, N + M);
        }
        const double sign = (N * (N - 1)) % 2 ? -1.0 : 1.0;
        CHECK(std::abs(lhs - sign * std::pow(prod, N - 1)) < 1e-10);
        for (std::size_t i = 1; i < r.roots.size(); ++i) CHECK(r.roots[i - 1] != r.roots[i]);
      }
    }
  }
}

TEST_CASE("phase solver errors and sensitivity") {
  CHECK_THROWS_AS(solve_phase(2, 2, {0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(solve_phase(2, 2, {1}), std::invalid_argument);
  CHECK_THROWS_AS(solve_phase(0, 2, {}), std::invalid_argument);
  const auto r = solve_phase(2, 2, {0, 1});
  CHECK(r.residual < 1e-12);
  auto perturbed = r.roots;
  perturbed[0] += 1e-3;
  CHECK(residual(BetheModel::phase, 2, 2, 0, perturbed) > 1e-4);
}

TEST_CASE("q-boson at Q = 0 reproduces the phase model") {
  for (int N = 1; N <= 3; ++N) {
    for (int M = 0; M <= 4; ++M) {
      const auto r = solve_phase(N, M, subsets(N + M + 1, N).front());
      const auto q = solve_qboson(N, M, 0.0, r);
      for (int i = 0; i < N; ++i) CHECK(std::abs(q.roots[static_cast<std::size_t>(i)] - r.roots[static_cast<std::size_t>(i)]) < 1e-12);
    }
  }
  CHECK_THROWS_AS(solve_qboson(1, 1, 1.0, solve_phase(1, 1, {0})), std::invalid_argument);
}

TEST_CASE("q-boson continuation") {
  for (int N = 1; N <= 3; ++N) {
    for (int M = 0; M <= 6; ++M) {
      for (const auto& qn : subsets(N + M + 1, N)) {
        const auto path = continue_qboson(N, M, qn, 0.3, 0.05);
        REQUIRE(path.size() == 7);
        for (const auto& step : path) {
          CHECK(step.roots.residual < 1e-10);
          CHECK(step.matched);
          CHECK(step.max_shift < 0.5);
        }
        CHECK(std::abs(path.back().Q - 0.3) < 1e-12);
      }
    }
  }
}
