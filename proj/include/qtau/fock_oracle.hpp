#pragma once

#include "qtau/phase_model.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qtau {

enum class Model { phase, qboson };

/// Chain with sites 0..box.M holding at most box.N particles. The phase model
/// is the q-boson model at Q = 0; `q` is ignored for Model::phase.
struct OracleSpec {
  Model model = Model::phase;
  BoxSpec box;
  Rational q = 0;
  Rational deformation() const { return model == Model::phase ? Rational(0) : q; }
};

/// Occupation states with at most N particles, grouped by particle number.
/// Within a sector the order is that of enumerate_in_box(p, M).
class SectorBasis {
 public:
  SectorBasis(int M, int N);

  int M() const { return M_; }
  int N() const { return N_; }
  const std::vector<OccupationState>& sector(int p) const { return sectors_.at(static_cast<std::size_t>(p)); }
  Eigen::Index dimension(int p) const { return static_cast<Eigen::Index>(sector(p).size()); }
  /// Index of a state inside its sector; -1 if the state is not in the basis.
  Eigen::Index index_of(const OccupationState& s) const;

 private:
  int M_;
  int N_;
  std::vector<std::vector<OccupationState>> sectors_;
  std::map<OccupationState, Eigen::Index> index_;
};

/// Linear map from one particle sector to another.
struct SectorOperator {
  int source = 0;
  int target = 0;
  Matrix<Rational> matrix;
};

/// One block per source sector that the operator maps inside the basis.
using GradedOperator = std::vector<SectorOperator>;

struct Monodromy {
  GradedOperator A, B, C, D;
};

/// Sparse image of a basis state in the untruncated Fock space.
using FockImage = std::map<OccupationState, Rational>;

/// Entry (a, b) of T = L_M ... L_0 with L = [[1/s, raise], [lower, s]], applied to one
/// occupation state. a, b are 1 or 2; s = x^{1/2} is the spectral square root.
FockImage apply_monodromy_entry(const OracleSpec& spec, int a, int b, const Rational& s, const OccupationState& state);

/// The four entries as sector blocks at s = u. Throws for u = 0. Images of B that leave the
/// basis (from the top sector) are dropped; no other truncation occurs.
Monodromy build_monodromy(const OracleSpec& spec, const Rational& u);

/// y^{M/2} B(y) and x^{M/2} C(1/x) from the square roots v = y^{1/2}, u = x^{1/2}.
GradedOperator bethe_b(const OracleSpec& spec, const SectorBasis& basis, const Rational& v);
GradedOperator bethe_c(const OracleSpec& spec, const SectorBasis& basis, const Rational& u);

struct StateVector {
  int sector = 0;
  Vector<Rational> coefficients;
};

StateVector vacuum();
/// Basis vector of a partition in sector p (n_0 = p - length).
StateVector partition_state(const SectorBasis& basis, const Partition& lambda, int p);

/// prod_j B(v_j) applied to `start`; the result must stay inside the basis.
StateVector apply_bethe(const OracleSpec& spec, const SectorBasis& basis, std::span<const Rational> v, StateVector start);

/// prod_j B(v_j)|0>, indexed like basis.sector(|v|).
StateVector bethe_state(const OracleSpec& spec, std::span<const Rational> v);

/// Row of <0| prod_j C(u_j) over sector |u|: entry n is <0| prod C |n>.
StateVector dual_state(const OracleSpec& spec, std::span<const Rational> u);

struct PairingOptions {
  /// Raising operator at this site, applied to the vacuum before the B's.
  std::optional<int> insertion;
  /// Diagonal operator prod_i w_i^{n_i} between the two products.
  std::optional<std::vector<Rational>> site_weights;
  /// Divide the contribution of each state by [n_0]! (a no-op at Q = 0). With it the
  /// q-boson pairing is the Hall-Littlewood sum weighted by b_lambda.
  bool site0_normalization = false;
};

/// <0| prod C(u) [options] prod B(v) |0>, computed by applying the sector matrices and
/// pairing the bra row with the ket column.
Rational oracle_pairing(const OracleSpec& spec, std::span<const Rational> u, std::span<const Rational> v,
                        const PairingOptions& options = {});

/// B raises and C lowers the particle number by exactly one on every basis state
/// (checked on the untruncated images), and A, D preserve it.
bool grading_holds(const OracleSpec& spec, const Rational& s);

/// B(v1) B(v2) = B(v2) B(v1) on every sector where both products stay in the basis.
bool bethe_b_commute(const OracleSpec& spec, const Rational& v1, const Rational& v2);

}  // namespace qtau
