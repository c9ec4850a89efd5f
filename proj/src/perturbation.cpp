#include "lqw/perturbation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "lqw/errors.hpp"

namespace lqw {

namespace {

constexpr Complex kI(0.0, 1.0);

Vector9 vec(std::initializer_list<Complex> values) {
  Vector9 v;
  std::size_t i = 0;
  for (const auto& x : values) v(static_cast<Eigen::Index>(i++)) = x;
  return v;
}

void check_loop_positive(double loop) {
  if (!(loop > 0) || !std::isfinite(loop)) {
    throw DomainError("closed-form eigenpairs need l > 0 (they contain 1/sqrt(l))");
  }
}

void check_k(double k) {
  if (!(k > 0.0 && k < 1.0)) throw ParameterError("k must lie in (0, 1), got " + std::to_string(k));
}

// First-order expansion for M = o(n).
PerturbationProblem large_n_problem(const SubspaceModel& model) {
  const double root_n = std::sqrt(model.n);
  const double l = model.loop;
  const double M_1 = model.m - 1;
  const double M_l = model.m + l - 2;

  Matrix9 U0 = Matrix9::Zero();
  U0(0, 0) = 1;
  U0(1, 3) = -1;
  U0(2, 6) = -1;
  U0(3, 1) = 1;
  U0(4, 4) = -1;
  U0(5, 7) = -1;
  U0(6, 2) = -1;
  U0(7, 5) = 1;
  U0(8, 8) = 1;

  Matrix9 U1 = Matrix9::Zero();
  U1(0, 2) = -2 * std::sqrt(l) / root_n;
  U1(1, 5) = 2 / root_n;
  U1(2, 8) = 2 / root_n;
  U1(3, 2) = -2 * std::sqrt(M_1) / root_n;
  U1(4, 5) = 2 * std::sqrt(M_l) / root_n;
  U1(5, 8) = 2 * std::sqrt(M_1) / root_n;
  U1(6, 0) = -2 * std::sqrt(l) / root_n;
  U1(6, 1) = -2 * std::sqrt(M_1) / root_n;
  U1(7, 3) = 2 / root_n;
  U1(7, 4) = 2 * std::sqrt(M_l) / root_n;
  U1(8, 6) = 2 / root_n;
  U1(8, 7) = 2 * std::sqrt(M_1) / root_n;

  const double h = std::numbers::sqrt2 / 2;
  PerturbationProblem p{U0, U1, {}, {}};
  p.basis = {
      vec({0, 0, h, 0, 0, 0, h, 0, 0}),
      vec({0, 0, 0, 0, 1, 0, 0, 0, 0}),
      vec({0, 0, 0, 0, 0, kI * h, 0, h, 0}),
      vec({0, kI * h, 0, h, 0, 0, 0, 0, 0}),
      vec({0, 0, 0, 0, 0, -kI * h, 0, h, 0}),
      vec({0, -kI * h, 0, h, 0, 0, 0, 0, 0}),
      vec({0, 0, 0, 0, 0, 0, 0, 0, 1}),
      vec({0, 0, -h, 0, 0, 0, h, 0, 0}),
      vec({1, 0, 0, 0, 0, 0, 0, 0, 0}),
  };
  p.basis_values = {-1.0, -1.0, kI, kI, -kI, -kI, 1.0, 1.0, 1.0};
  return p;
}

// Expansion for M = k n.
PerturbationProblem large_m_problem(const SubspaceModel& model) {
  const double k = model.m / model.n;
  check_k(k);
  const double root_n = std::sqrt(model.n);
  const double l = model.loop;
  const double r = std::sqrt(k * (1 - k));
  const double sk = std::sqrt(k);
  const double sk1 = std::sqrt(1 - k);

  Matrix9 U0 = Matrix9::Zero();
  U0(0, 0) = 1;
  U0(1, 3) = -1;
  U0(2, 6) = -1;
  U0(3, 1) = 1 - 2 * k;
  U0(3, 2) = -2 * r;
  U0(4, 4) = 2 * k - 1;
  U0(4, 5) = 2 * r;
  U0(5, 7) = 2 * k - 1;
  U0(5, 8) = 2 * r;
  U0(6, 1) = -2 * r;
  U0(6, 2) = 2 * k - 1;
  U0(7, 4) = 2 * r;
  U0(7, 5) = 1 - 2 * k;
  U0(8, 7) = 2 * r;
  U0(8, 8) = 1 - 2 * k;

  Matrix9 U1 = Matrix9::Zero();
  U1(0, 1) = -2 * std::sqrt(k * l) / root_n;
  U1(0, 2) = -2 * std::sqrt((1 - k) * l) / root_n;
  U1(1, 4) = 2 * sk / root_n;
  U1(1, 5) = 2 * sk1 / root_n;
  U1(2, 7) = 2 * sk / root_n;
  U1(2, 8) = 2 * sk1 / root_n;
  U1(3, 0) = -2 * std::sqrt(k * l) / root_n;
  U1(4, 3) = 2 * sk / root_n;
  U1(5, 6) = 2 * sk / root_n;
  U1(6, 0) = -2 * std::sqrt((1 - k) * l) / root_n;
  U1(7, 3) = 2 * sk1 / root_n;
  U1(8, 6) = 2 * sk1 / root_n;

  const double h = std::numbers::sqrt2 / 2;
  const Complex lo = k - 0.5 - 0.5 * kI;
  const Complex hi = k - 0.5 + 0.5 * kI;
  PerturbationProblem p{U0, U1, {}, {}};
  p.basis = {
      vec({0, 0, 0, 0, 1 - k, -r, 0, -r, k}),
      vec({0, h * sk, h * sk1, h * sk, 0, 0, h * sk1, 0, 0}),
      vec({0, 0, 0, 0, -r, lo, 0, hi, r}),
      vec({0, -kI * h * sk1, kI * h * sk, -h * sk1, 0, 0, h * sk, 0, 0}),
      vec({0, 0, 0, 0, -r, hi, 0, lo, r}),
      vec({0, kI * h * sk1, -kI * h * sk, -h * sk1, 0, 0, h * sk, 0, 0}),
      vec({0, 0, 0, 0, k, r, 0, r, 1 - k}),
      vec({0, -h * sk, -h * sk1, h * sk, 0, 0, h * sk1, 0, 0}),
      vec({1, 0, 0, 0, 0, 0, 0, 0, 0}),
  };
  p.basis_values = {-1.0, -1.0, kI, kI, -kI, -kI, 1.0, 1.0, 1.0};
  return p;
}

}  // namespace

PerturbationProblem leading_order(const SubspaceModel& model, Regime regime) {
  model.validate();
  return regime == Regime::large_n ? large_n_problem(model) : large_m_problem(model);
}

std::vector<std::vector<std::size_t>> group_by_eigenvalue(std::span<const EigenPair> pairs,
                                                          double tol) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool placed = false;
    for (auto& g : groups) {
      if (std::abs(pairs[g.front()].first_order - pairs[i].first_order) <= tol) {
        g.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({i});
  }
  return groups;
}

std::vector<EigenPair> degenerate_pt(const PerturbationProblem& problem) {
  const double tol = problem.tolerance;
  for (std::size_t i = 0; i < 9; ++i) {
    const Complex value = problem.basis_values[i];
    const Vector9& v = problem.basis[i];
    if (std::abs(std::abs(value) - 1.0) > tol) {
      throw ModelError("leading-order eigenvalue " + std::to_string(i + 1) + " is off the unit circle");
    }
    if (std::abs(v.norm() - 1.0) > tol) {
      throw ModelError("leading-order basis vector " + std::to_string(i + 1) + " is not normalized");
    }
    if ((problem.leading * v - value * v).norm() > tol) {
      throw ModelError("basis vector " + std::to_string(i + 1) + " is not an eigenvector of U0");
    }
  }

  // Group indices by leading-order eigenvalue.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < 9; ++i) {
    bool placed = false;
    for (auto& g : groups) {
      if (std::abs(problem.basis_values[g.front()] - problem.basis_values[i]) <= tol) {
        g.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({i});
  }

  const Matrix9 truncated = problem.truncated();
  std::vector<EigenPair> out;
  out.reserve(9);
  for (const auto& g : groups) {
    const auto size = static_cast<Eigen::Index>(g.size());
    Eigen::MatrixXcd V(9, size);
    for (Eigen::Index j = 0; j < size; ++j) V.col(j) = problem.basis[g[j]];
    for (Eigen::Index a = 0; a < size; ++a) {
      for (Eigen::Index b = 0; b < size; ++b) {
        if (std::abs(V.col(a).dot(V.col(b)) - (a == b ? 1.0 : 0.0)) > tol) {
          throw ModelError("degenerate group basis is not orthonormal");
        }
      }
    }
    const Eigen::MatrixXcd effective = V.adjoint() * truncated * V;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(effective);
    if (solver.info() != Eigen::Success) throw ModelError("effective eigenproblem did not converge");
    for (Eigen::Index j = 0; j < size; ++j) {
      const Complex value = solver.eigenvalues()(j);
      EigenPair pair{value, value, V * solver.eigenvectors().col(j), static_cast<int>(out.size() + 1)};
      out.push_back(std::move(pair));
    }
  }
  return out;
}

std::vector<EigenPair> eigenpairs_largeN(double n, double loop) {
  check_loop_positive(loop);
  const double a = alpha(n, loop);
  const double phi = std::asin(1.0 / std::sqrt(n));
  const double inv_root_n = 1.0 / std::sqrt(n);
  const double h = std::numbers::sqrt2 / 2;
  const double b = std::sqrt((loop + 1) / (2 * loop));
  const double s = std::sqrt(2 * (loop + 1) / n);
  const auto e = [](double theta) { return std::polar(1.0, theta); };

  std::vector<EigenPair> p = {
      {-1.0, -1.0, vec({0, 0, 0, 0, 1, 0, 0, 0, 0}), 1},
      {-1.0, -1.0, vec({0, 0, h, 0, 0, 0, h, 0, 0}), 2},
      {kI * e(phi), kI - inv_root_n, vec({0, kI * h, 0, h, 0, -kI * h, 0, -h, 0}), 3},
      {kI * e(-phi), kI + inv_root_n, vec({0, kI * h, 0, h, 0, kI * h, 0, h, 0}), 4},
      {-kI * e(-phi), -kI - inv_root_n, vec({0, -kI * h, 0, h, 0, kI * h, 0, -h, 0}), 5},
      {-kI * e(phi), -kI + inv_root_n, vec({0, -kI * h, 0, h, 0, -kI * h, 0, h, 0}), 6},
      {e(-a), 1.0 - kI * s, vec({1, 0, kI * b, 0, 0, 0, -kI * b, 0, 1 / std::sqrt(loop)}), 7},
      {e(a), 1.0 + kI * s, vec({1, 0, -kI * b, 0, 0, 0, kI * b, 0, 1 / std::sqrt(loop)}), 8},
      {1.0, 1.0, vec({1, 0, 0, 0, 0, 0, 0, 0, -std::sqrt(loop)}), 9},
  };
  return p;
}

std::vector<EigenPair> eigenpairs_largeM(double n, double k, double loop) {
  check_k(k);
  check_loop_positive(loop);
  const double a = alpha(n, loop);
  const double phi = std::asin(1.0 / std::sqrt(n));
  const double inv_root_n = 1.0 / std::sqrt(n);
  const double h = std::numbers::sqrt2 / 2;
  const double r = std::sqrt(k * (1 - k));
  const double sk = std::sqrt(k);
  const double sk1 = std::sqrt(1 - k);
  const double gk = std::sqrt(k * (loop + 1) / (2 * loop));
  const double gk1 = std::sqrt((1 - k) * (loop + 1) / (2 * loop));
  const double rl = std::sqrt(k * (1 - k) / loop);
  const double sl = std::sqrt(loop);
  const double s = std::sqrt(2 * (loop + 1) / n);
  const Complex p1 = 1.0 + kI;
  const Complex m1 = 1.0 - kI;
  const Complex lo = k - 0.5 - 0.5 * kI;
  const Complex hi = k - 0.5 + 0.5 * kI;
  const auto e = [](double theta) { return std::polar(1.0, theta); };

  std::vector<EigenPair> p = {
      {-1.0, -1.0, vec({0, h * sk, h * sk1, h * sk, 0, 0, h * sk1, 0, 0}), 1},
      {-1.0, -1.0, vec({0, 0, 0, 0, 1 - k, -r, 0, -r, k}), 2},
      {kI * e(-phi), kI + inv_root_n,
       h * vec({0, -kI * sk1, kI * sk, -sk1, -p1 * r, p1 * lo, sk, p1 * hi, p1 * r}), 3},
      {kI * e(phi), kI - inv_root_n,
       h * vec({0, -kI * sk1, kI * sk, -sk1, p1 * r, -p1 * lo, sk, -p1 * hi, -p1 * r}), 4},
      {-kI * e(phi), -kI + inv_root_n,
       h * vec({0, kI * sk1, -kI * sk, -sk1, -m1 * r, m1 * hi, sk, m1 * lo, m1 * r}), 5},
      {-kI * e(-phi), -kI - inv_root_n,
       h * vec({0, kI * sk1, -kI * sk, -sk1, m1 * r, -m1 * hi, sk, -m1 * lo, -m1 * r}), 6},
      {e(-a), 1.0 - kI * s,
       vec({1, kI * gk, kI * gk1, -kI * gk, k / sl, rl, -kI * gk1, rl, (1 - k) / sl}), 7},
      {e(a), 1.0 + kI * s,
       vec({1, -kI * gk, -kI * gk1, kI * gk, k / sl, rl, kI * gk1, rl, (1 - k) / sl}), 8},
      {1.0, 1.0, vec({1, 0, 0, 0, -k * sl, -r * sl, 0, -r * sl, -(1 - k) * sl}), 9},
  };
  return p;
}

Vector9 asymptotic_initial_largeN() { return vec({0, 0, 0, 0, 0, 0, 0, 0, 1}); }

Vector9 asymptotic_initial_largeM(double k) {
  check_k(k);
  const double r = std::sqrt(k * (1 - k));
  return vec({0, 0, 0, 0, k, r, 0, r, 1 - k});
}

std::array<Complex, 9> decompose_initial(std::span<const EigenPair> pairs, const Vector9& initial) {
  if (pairs.size() != 9) throw ParameterError("decomposition needs exactly 9 eigenpairs");
  Matrix9 V;
  for (Eigen::Index j = 0; j < 9; ++j) V.col(j) = pairs[static_cast<std::size_t>(j)].vector;
  Eigen::JacobiSVD<Matrix9> svd(V);
  const Eigen::VectorXd sv = svd.singularValues();
  if (!(sv(8) > 1e-10 * sv(0))) {
    throw ModelError("eigenvector matrix is numerically singular (reciprocal condition " +
                     std::to_string(sv(8) / sv(0)) + ")");
  }
  const Vector9 c = V.fullPivLu().solve(initial);
  std::array<Complex, 9> out{};
  for (std::size_t i = 0; i < 9; ++i) out[i] = c(static_cast<Eigen::Index>(i));
  return out;
}

Vector9 propagate(std::span<const EigenPair> pairs, const std::array<Complex, 9>& coefficients,
                  double t) {
  if (pairs.size() != 9) throw ParameterError("propagation needs exactly 9 eigenpairs");
  Vector9 psi = Vector9::Zero();
  for (std::size_t i = 0; i < 9; ++i) {
    psi += coefficients[i] * std::pow(pairs[i].value, t) * pairs[i].vector;
  }
  return psi;
}

double eigen_residual(const Matrix9& op, const EigenPair& pair) {
  return (op * pair.vector - pair.value * pair.vector).norm() / pair.vector.norm();
}

double max_principal_angle(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows()) return std::numbers::pi / 2;
  const auto orthonormal = [](const Eigen::MatrixXcd& m) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    return Eigen::MatrixXcd(qr.householderQ() * Eigen::MatrixXcd::Identity(m.rows(), m.cols()));
  };
  const Eigen::MatrixXcd qa = orthonormal(a), qb = orthonormal(b);
  // Sine form: the component of span(b) outside span(a).
  const Eigen::MatrixXcd residual = qb - qa * (qa.adjoint() * qb);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(residual);
  const double largest = svd.singularValues().maxCoeff();
  return std::asin(std::min(1.0, largest));
}

}  // namespace lqw
