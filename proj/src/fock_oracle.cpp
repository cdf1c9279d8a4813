#include "qtau/fock_oracle.hpp"

#include <stdexcept>

namespace qtau {

SectorBasis::SectorBasis(int M, int N) : M_(M), N_(N) {
  if (M < 0 || N < 0) throw std::invalid_argument("basis dimensions must be nonnegative");
  for (int p = 0; p <= N; ++p) {
    std::vector<OccupationState> states;
    for (const auto& lambda : enumerate_in_box(p, M)) {
      auto s = occupation_from_partition(lambda, p, M);
      index_.emplace(s, static_cast<Eigen::Index>(states.size()));
      states.push_back(std::move(s));
    }
    sectors_.push_back(std::move(states));
  }
}

Eigen::Index SectorBasis::index_of(const OccupationState& s) const {
  const auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

namespace {

struct Walker {
  const OracleSpec& spec;
  Rational q;
  Rational s;
  Rational s_inv;
  int target;
  FockImage out;

  void step(int site, int row, OccupationState state, Rational coeff) {
    if (site < 0) {
      if (row == target) out[state] += coeff;
      return;
    }
    const auto i = static_cast<std::size_t>(site);
    if (row == 1) {
      step(site - 1, 1, state, coeff * s_inv);
      // raising operator
      const int n = state.counts[i];
      Rational c = site == 0 ? Rational(1) : Rational(1) - power(q, n + 1);
      if (c != 0) {
        state.counts[i] = n + 1;
        step(site - 1, 2, state, coeff * c);
      }
    } else {
      step(site - 1, 2, state, coeff * s);
      const int n = state.counts[i];
      if (n > 0) {
        Rational c = site == 0 ? Rational(1) - power(q, n) : Rational(1);
        if (c != 0) {
          state.counts[i] = n - 1;
          step(site - 1, 1, state, coeff * c);
        }
      }
    }
  }
};

void drop_zeros(FockImage& image) {
  for (auto it = image.begin(); it != image.end();) {
    if (it->second == 0) {
      it = image.erase(it);
    } else {
      ++it;
    }
  }
}

SectorOperator block(const OracleSpec& spec, const SectorBasis& basis, int a, int b, const Rational& s, int source,
                     const Rational& scale) {
  const int target = source + (a == 1 && b == 2 ? 1 : 0) - (a == 2 && b == 1 ? 1 : 0);
  SectorOperator op{source, target, Matrix<Rational>::Zero(basis.dimension(target), basis.dimension(source))};
  const auto& states = basis.sector(source);
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(states.size()); ++j) {
    for (const auto& [image, coeff] : apply_monodromy_entry(spec, a, b, s, states[static_cast<std::size_t>(j)])) {
      const Eigen::Index i = basis.index_of(image);
      if (i < 0) throw std::logic_error("monodromy image left the sector basis");
      op.matrix(i, j) = coeff * scale;
    }
  }
  return op;
}

GradedOperator graded(const OracleSpec& spec, const SectorBasis& basis, int a, int b, const Rational& s,
                      const Rational& scale) {
  GradedOperator out;
  const int shift = (a == 1 && b == 2 ? 1 : 0) - (a == 2 && b == 1 ? 1 : 0);
  for (int p = 0; p <= basis.N(); ++p) {
    if (p + shift < 0 || p + shift > basis.N()) continue;
    out.push_back(block(spec, basis, a, b, s, p, scale));
  }
  return out;
}

const SectorOperator& block_from(const GradedOperator& op, int source) {
  for (const auto& b : op) {
    if (b.source == source) return b;
  }
  throw std::out_of_range("operator has no block for sector " + std::to_string(source));
}

StateVector apply_graded(const GradedOperator& op, const StateVector& v) {
  const auto& b = block_from(op, v.sector);
  StateVector out;
  out.sector = b.target;
  out.coefficients = multiply(b.matrix, v.coefficients);
  return out;
}

GradedOperator site_raise(const OracleSpec& spec, const SectorBasis& basis, int site) {
  const Rational q = spec.deformation();
  GradedOperator out;
  for (int p = 0; p < basis.N(); ++p) {
    SectorOperator op{p, p + 1, Matrix<Rational>::Zero(basis.dimension(p + 1), basis.dimension(p))};
    const auto& states = basis.sector(p);
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(states.size()); ++j) {
      OccupationState s = states[static_cast<std::size_t>(j)];
      const int n = s.counts[static_cast<std::size_t>(site)];
      const Rational c = site == 0 ? Rational(1) : Rational(1) - power(q, n + 1);
      s.counts[static_cast<std::size_t>(site)] = n + 1;
      op.matrix(basis.index_of(s), j) = c;
    }
    out.push_back(std::move(op));
  }
  return out;
}

}  // namespace

FockImage apply_monodromy_entry(const OracleSpec& spec, int a, int b, const Rational& s, const OccupationState& state) {
  if (s == 0) throw std::invalid_argument("spectral parameter must be nonzero");
  if (a < 1 || a > 2 || b < 1 || b > 2) throw std::invalid_argument("monodromy indices are 1 or 2");
  if (static_cast<int>(state.counts.size()) != spec.box.M + 1) throw std::invalid_argument("state has wrong site count");
  Walker w{spec, spec.deformation(), s, Rational(1) / s, b, {}};
  w.step(spec.box.M, a, state, Rational(1));
  drop_zeros(w.out);
  return std::move(w.out);
}

Monodromy build_monodromy(const OracleSpec& spec, const Rational& u) {
  if (u == 0) throw std::invalid_argument("spectral parameter must be nonzero");
  const SectorBasis basis(spec.box.M, spec.box.N);
  return {graded(spec, basis, 1, 1, u, Rational(1)), graded(spec, basis, 1, 2, u, Rational(1)),
          graded(spec, basis, 2, 1, u, Rational(1)), graded(spec, basis, 2, 2, u, Rational(1))};
}

GradedOperator bethe_b(const OracleSpec& spec, const SectorBasis& basis, const Rational& v) {
  if (v == 0) throw std::invalid_argument("spectral parameter must be nonzero");
  return graded(spec, basis, 1, 2, v, power(v, spec.box.M));
}

GradedOperator bethe_c(const OracleSpec& spec, const SectorBasis& basis, const Rational& u) {
  if (u == 0) throw std::invalid_argument("spectral parameter must be nonzero");
  return graded(spec, basis, 2, 1, Rational(1) / u, power(u, spec.box.M));
}

StateVector vacuum() {
  StateVector v;
  v.sector = 0;
  v.coefficients = Vector<Rational>::Constant(1, Rational(1));
  return v;
}

StateVector partition_state(const SectorBasis& basis, const Partition& lambda, int p) {
  const auto s = occupation_from_partition(lambda, p, basis.M());
  StateVector v;
  v.sector = p;
  v.coefficients = Vector<Rational>::Zero(basis.dimension(p));
  v.coefficients(basis.index_of(s)) = 1;
  return v;
}

StateVector apply_bethe(const OracleSpec& spec, const SectorBasis& basis, std::span<const Rational> v,
                        StateVector start) {
  if (start.sector + static_cast<int>(v.size()) > basis.N()) throw std::invalid_argument("too many roots for the basis");
  for (auto it = v.rbegin(); it != v.rend(); ++it) start = apply_graded(bethe_b(spec, basis, *it), start);
  return start;
}

StateVector bethe_state(const OracleSpec& spec, std::span<const Rational> v) {
  const SectorBasis basis(spec.box.M, static_cast<int>(v.size()));
  return apply_bethe(spec, basis, v, vacuum());
}

StateVector dual_state(const OracleSpec& spec, std::span<const Rational> u) {
  const int n = static_cast<int>(u.size());
  const SectorBasis basis(spec.box.M, n);
  // r_k = <0| C(u_1) ... C(u_k), a row over sector k.
  Matrix<Rational> row = Matrix<Rational>::Constant(1, 1, Rational(1));
  for (int k = 1; k <= n; ++k) {
    const auto c = bethe_c(spec, basis, u[static_cast<std::size_t>(k - 1)]);
    row = multiply(row, block_from(c, k).matrix);
  }
  StateVector out;
  out.sector = n;
  out.coefficients = row.transpose();
  return out;
}

Rational oracle_pairing(const OracleSpec& spec, std::span<const Rational> u, std::span<const Rational> v,
                        const PairingOptions& options) {
  const int n = static_cast<int>(u.size());
  const int inserted = options.insertion ? 1 : 0;
  if (static_cast<int>(v.size()) + inserted != n) {
    throw std::invalid_argument("particle numbers of the bra and ket do not match");
  }
  if (options.insertion && (*options.insertion < 0 || *options.insertion > spec.box.M)) {
    throw std::invalid_argument("insertion site out of range");
  }
  const SectorBasis basis(spec.box.M, n);
  StateVector ket = vacuum();
  if (options.insertion) ket = apply_graded(site_raise(spec, basis, *options.insertion), ket);
  ket = apply_bethe(spec, basis, v, ket);
  const auto& states = basis.sector(ket.sector);
  if (options.site_weights) {
    const auto& w = *options.site_weights;
    if (static_cast<int>(w.size()) != spec.box.M + 1) throw std::invalid_argument("need one weight per site");
    for (std::size_t j = 0; j < states.size(); ++j) {
      Rational c(1);
      for (std::size_t i = 0; i < states[j].counts.size(); ++i) {
        if (states[j].counts[i] != 0) c *= power(w[i], states[j].counts[i]);
      }
      ket.coefficients(static_cast<Eigen::Index>(j)) *= c;
    }
  }
  if (options.site0_normalization) {
    const Rational q = spec.deformation();
    for (std::size_t j = 0; j < states.size(); ++j) {
      const Rational f = q_factorial(states[j].counts[0])(q);
      if (f == 0) throw std::domain_error("site-0 normalization vanishes at this Q");
      ket.coefficients(static_cast<Eigen::Index>(j)) /= f;
    }
  }
  const StateVector bra = dual_state(spec, u);
  Rational acc(0);
  for (Eigen::Index j = 0; j < bra.coefficients.size(); ++j) acc += bra.coefficients(j) * ket.coefficients(j);
  return acc;
}

bool grading_holds(const OracleSpec& spec, const Rational& s) {
  const SectorBasis basis(spec.box.M, spec.box.N);
  for (int p = 0; p <= basis.N(); ++p) {
    for (const auto& state : basis.sector(p)) {
      for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
          const int shift = (a == 1 && b == 2 ? 1 : 0) - (a == 2 && b == 1 ? 1 : 0);
          for (const auto& [image, coeff] : apply_monodromy_entry(spec, a, b, s, state)) {
            if (image.particles() != p + shift) return false;
          }
        }
      }
    }
  }
  return true;
}

bool bethe_b_commute(const OracleSpec& spec, const Rational& v1, const Rational& v2) {
  const SectorBasis basis(spec.box.M, spec.box.N);
  const auto b1 = bethe_b(spec, basis, v1);
  const auto b2 = bethe_b(spec, basis, v2);
  for (int p = 0; p + 2 <= basis.N(); ++p) {
    const auto lhs = multiply(block_from(b1, p + 1).matrix, block_from(b2, p).matrix);
    const auto rhs = multiply(block_from(b2, p + 1).matrix, block_from(b1, p).matrix);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace qtau
