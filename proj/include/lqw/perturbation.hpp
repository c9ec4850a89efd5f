#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "lqw/analytic.hpp"

namespace lqw {

/// Which quantity dominates for large n: n alone (M = o(n)), or n and M
/// together with M = k n.
enum class Regime { large_n, large_m };

struct EigenPair {
  /// Eigenvalue in exponential form (e^{-i alpha}, i e^{-i phi}, ...), used
  /// for propagation. For generic solver output this equals first_order.
  Complex value;
  /// Eigenvalue to first order in 1/sqrt(n) (1 - i sqrt(2(l+1)/n), ...).
  Complex first_order;
  Vector9 vector;
  int label = 0;  // 1..9
};

/// Leading-order operator U0, next-order correction U1 (so U0 + U1 is the
/// truncated U'), and the analytically known eigenbasis of U0.
struct PerturbationProblem {
  Matrix9 leading;
  Matrix9 correction;
  std::array<Vector9, 9> basis;
  std::array<Complex, 9> basis_values;
  double tolerance = 1e-9;

  Matrix9 truncated() const { return leading + correction; }
};

/// Builds the truncated expansion of the 9D operator for the given regime.
/// For large_m, k = M / n must lie in (0, 1).
PerturbationProblem leading_order(const SubspaceModel& model, Regime regime);

/// First-order degenerate perturbation theory: groups the U0 eigenbasis by
/// eigenvalue, diagonalizes <v_i|U'|v_j> inside each group and lifts the
/// solutions back. Throws ModelError if the supplied basis is not an
/// eigenbasis of U0 or an eigenvalue is off the unit circle.
std::vector<EigenPair> degenerate_pt(const PerturbationProblem& problem);

/// Closed-form asymptotic eigenpairs, M = o(n). Requires l > 0.
std::vector<EigenPair> eigenpairs_largeN(double n, double loop);
/// Closed-form asymptotic eigenpairs, M = k n. Requires 0 < k < 1, l > 0.
std::vector<EigenPair> eigenpairs_largeM(double n, double k, double loop);

/// Asymptotic initial states: |cc> for large n, and
/// k|bb> + sqrt(k(1-k))(|bc> + |cb>) + (1-k)|cc> for large n and M.
Vector9 asymptotic_initial_largeN();
Vector9 asymptotic_initial_largeM(double k);

/// Coefficients c with sum_i c_i Psi_i = initial. Throws ModelError when the
/// eigenvector matrix is numerically singular.
std::array<Complex, 9> decompose_initial(std::span<const EigenPair> pairs, const Vector9& initial);

/// sum_i c_i value_i^t Psi_i.
Vector9 propagate(std::span<const EigenPair> pairs, const std::array<Complex, 9>& coefficients,
                  double t);

/// ||U psi - value psi|| / ||psi||.
double eigen_residual(const Matrix9& op, const EigenPair& pair);

/// Largest principal angle (radians) between the column spans of a and b.
/// Spans of different dimension are reported as pi/2.
double max_principal_angle(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Indices of pairs grouped by first_order eigenvalue (within tol), in order
/// of first appearance.
std::vector<std::vector<std::size_t>> group_by_eigenvalue(std::span<const EigenPair> pairs,
                                                          double tol);

}  // namespace lqw
