#pragma once

#include <complex>
#include <vector>

namespace qtau::bethe {

using Complex = std::complex<double>;

enum class BetheModel { phase, qboson };

struct BetheRoots {
  std::vector<Complex> roots;  // sorted by arg in [-pi, pi)
  double residual = 0;         // max_i |LHS_i - RHS_i|
  int iterations = 0;
};

/// Phase model: y_i^{N+M} = (-1)^{N-1} prod_{j != i} y_j.
/// Quantum numbers must be pairwise distinct modulo N + M + 1.
/// Throws std::runtime_error when Newton does not reach `tolerance`.
BetheRoots solve_phase(int N, int M, const std::vector<int>& quantum_numbers, double tolerance = 1e-13);

/// q-boson model in polynomial form:
///   y_i^{M+1} prod_{j != i} (y_i - Q y_j) = prod_{j != i} (Q y_i - y_j),
/// which at Q = 0 is the phase-model system. Newton from `initial`.
BetheRoots solve_qboson(int N, int M, double Q, const BetheRoots& initial, double tolerance = 1e-13);

double residual(BetheModel model, int N, int M, double Q, const std::vector<Complex>& roots);

struct ContinuationStep {
  double Q = 0;
  BetheRoots roots;
  double max_shift = 0;  // largest |y_new - y_old| under nearest-match pairing
  bool matched = true;   // nearest-match pairing was a bijection
};

/// Follows the phase solution with `quantum_numbers` from Q = 0 to `q_end`
/// in increments of `step`. The first entry is Q = 0.
std::vector<ContinuationStep> continue_qboson(int N, int M, const std::vector<int>& quantum_numbers, double q_end,
                                              double step);

}  // namespace qtau::bethe
