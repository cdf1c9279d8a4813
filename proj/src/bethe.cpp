#include "qtau/bethe.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace qtau::bethe {

namespace {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

constexpr int kMaxNewton = 100;
constexpr int kMaxFixedPoint = 10000;

void check_size(int N, int M) {
  if (N < 1) throw std::invalid_argument("Bethe equations need N >= 1");
  if (M < 0) throw std::invalid_argument("Bethe equations need M >= 0");
}

// arg in [-pi, pi), with the negative real axis pinned to -pi so rounding
// noise in the imaginary part cannot reorder it.
double phase_key(const Complex& z) {
  const double a = std::arg(z);
  return a > std::numbers::pi - 1e-9 ? a - 2 * std::numbers::pi : a;
}

void sort_by_phase(std::vector<Complex>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    const double pa = phase_key(a);
    const double pb = phase_key(b);
    if (pa != pb) return pa < pb;
    return std::abs(a) < std::abs(b);
  });
}

// F_i = y_i^{M+1} prod_{j!=i}(y_i - Q y_j) - prod_{j!=i}(Q y_i - y_j); Q = 0 is the phase model
// up to the factor y_i^{N-1}, which leaves the roots on the unit circle unchanged.
CVector system(int M, double Q, const CVector& y) {
  const auto n = y.size();
  CVector f(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex lhs = std::pow(y(i), M + 1);
    Complex rhs(1);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      lhs *= y(i) - Q * y(j);
      rhs *= Q * y(i) - y(j);
    }
    f(i) = lhs - rhs;
  }
  return f;
}

CMatrix jacobian(int M, double Q, const CVector& y) {
  const auto n = y.size();
  CMatrix J = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    // factors of each side as (value, d/dy_k) pairs
    std::vector<Complex> lv, rv;
    std::vector<Eigen::Index> partner;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      lv.push_back(y(i) - Q * y(j));
      rv.push_back(Q * y(i) - y(j));
      partner.push_back(j);
    }
    const Complex head = std::pow(y(i), M + 1);
    const Complex dhead = Complex(M + 1) * std::pow(y(i), M);
    Complex lprod(1), rprod(1);
    for (std::size_t a = 0; a < lv.size(); ++a) {
      lprod *= lv[a];
      rprod *= rv[a];
    }
    J(i, i) += dhead * lprod;
    for (std::size_t a = 0; a < lv.size(); ++a) {
      Complex lrest(1), rrest(1);
      for (std::size_t b = 0; b < lv.size(); ++b) {
        if (b == a) continue;
        lrest *= lv[b];
        rrest *= rv[b];
      }
      const Eigen::Index j = partner[a];
      J(i, i) += head * lrest - Q * rrest;
      J(i, j) += head * lrest * (-Q) + rrest;
    }
  }
  return J;
}

BetheRoots newton(int N, int M, double Q, CVector y, double tolerance) {
  BetheRoots out;
  for (int it = 0; it < kMaxNewton; ++it) {
    const CVector f = system(M, Q, y);
    const CMatrix J = jacobian(M, Q, y);
    Eigen::FullPivLU<CMatrix> lu(J);
    if (!lu.isInvertible()) throw std::runtime_error("Bethe Jacobian is singular");
    const CVector dy = lu.solve(f);
    y -= dy;
    out.iterations = it + 1;
    if (dy.cwiseAbs().maxCoeff() < tolerance) break;
  }
  out.roots.assign(y.data(), y.data() + y.size());
  out.residual = residual(Q == 0 ? BetheModel::phase : BetheModel::qboson, N, M, Q, out.roots);
  if (!(out.residual < 1e3 * tolerance)) {
    throw std::runtime_error("Bethe Newton iteration did not converge (residual " + std::to_string(out.residual) +
                             ")");
  }
  sort_by_phase(out.roots);
  return out;
}

}  // namespace

double residual(BetheModel model, int N, int M, double Q, const std::vector<Complex>& roots) {
  check_size(N, M);
  if (static_cast<int>(roots.size()) != N) throw std::invalid_argument("expected N roots");
  double worst = 0;
  for (int i = 0; i < N; ++i) {
    const Complex yi = roots[static_cast<std::size_t>(i)];
    Complex lhs, rhs(1);
    if (model == BetheModel::phase) {
      lhs = std::pow(yi, N + M);
      for (int j = 0; j < N; ++j) {
        if (j != i) rhs *= roots[static_cast<std::size_t>(j)];
      }
      if ((N - 1) % 2) rhs = -rhs;
    } else {
      lhs = std::pow(yi, M + 1);
      for (int j = 0; j < N; ++j) {
        if (j == i) continue;
        const Complex yj = roots[static_cast<std::size_t>(j)];
        lhs *= yi - Q * yj;
        rhs *= Q * yi - yj;
      }
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

BetheRoots solve_phase(int N, int M, const std::vector<int>& quantum_numbers, double tolerance) {
  check_size(N, M);
  if (static_cast<int>(quantum_numbers.size()) != N) throw std::invalid_argument("need N quantum numbers");
  const int L = N + M + 1;
  std::set<int> residues;
  for (int I : quantum_numbers) residues.insert(((I % L) + L) % L);
  if (static_cast<int>(residues.size()) != N) {
    throw std::invalid_argument("quantum numbers must be distinct modulo N + M + 1");
  }
  // |y_i| = 1 and y_i^{N+M+1} = (-1)^{N-1} prod_j y_j; in log form
  //   L theta_i = (N-1) pi + 2 pi I_i + sum_j theta_j,
  // a contraction with ratio N / L.
  const double pi = std::numbers::pi;
  std::vector<double> theta(static_cast<std::size_t>(N), 0.0);
  for (int it = 0; it < kMaxFixedPoint; ++it) {
    double total = 0;
    for (double t : theta) total += t;
    double change = 0;
    for (int i = 0; i < N; ++i) {
      const double next = ((N - 1) * pi + 2 * pi * quantum_numbers[static_cast<std::size_t>(i)] + total) / L;
      change = std::max(change, std::abs(next - theta[static_cast<std::size_t>(i)]));
      theta[static_cast<std::size_t>(i)] = next;
    }
    if (change < 1e-15) break;
  }
  CVector y(N);
  for (int i = 0; i < N; ++i) y(i) = std::polar(1.0, theta[static_cast<std::size_t>(i)]);
  return newton(N, M, 0.0, y, tolerance);
}

BetheRoots solve_qboson(int N, int M, double Q, const BetheRoots& initial, double tolerance) {
  check_size(N, M);
  if (!(Q >= 0 && Q < 1)) throw std::invalid_argument("Q must lie in [0, 1)");
  if (static_cast<int>(initial.roots.size()) != N) throw std::invalid_argument("initial guess needs N roots");
  CVector y(N);
  for (int i = 0; i < N; ++i) y(i) = initial.roots[static_cast<std::size_t>(i)];
  BetheRoots out = newton(N, M, Q, y, tolerance);
  out.residual = residual(BetheModel::qboson, N, M, Q, out.roots);
  return out;
}

std::vector<ContinuationStep> continue_qboson(int N, int M, const std::vector<int>& quantum_numbers, double q_end,
                                              double step) {
  if (!(step > 0)) throw std::invalid_argument("continuation step must be positive");
  std::vector<ContinuationStep> path;
  ContinuationStep first;
  first.roots = solve_phase(N, M, quantum_numbers);
  path.push_back(first);
  const int steps = static_cast<int>(std::llround(q_end / step));
  for (int k = 1; k <= steps; ++k) {
    ContinuationStep next;
    next.Q = k * step;
    const auto& prev = path.back().roots.roots;
    next.roots = solve_qboson(N, M, next.Q, path.back().roots);
    std::set<std::size_t> used;
    for (const auto& r : prev) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < next.roots.roots.size(); ++j) {
        if (std::abs(next.roots.roots[j] - r) < std::abs(next.roots.roots[best] - r)) best = j;
      }
      used.insert(best);
      next.max_shift = std::max(next.max_shift, std::abs(next.roots.roots[best] - r));
    }
    next.matched = used.size() == prev.size();
    path.push_back(std::move(next));
  }
  return path;
}

}  // namespace qtau::bethe
