#include "lqw/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lqw/errors.hpp"

namespace lqw {

namespace {

void check_homogeneous(double n, double loop) {
  if (!(n >= 3)) throw ParameterError("homogeneous model needs n >= 3");
  if (!(loop >= 0) || !std::isfinite(loop)) throw ParameterError("loop weight must be >= 0");
}

double checked_asin(double x) {
  if (x > 1.0) throw DomainError("asin argument " + std::to_string(x) + " exceeds 1");
  return std::asin(x);
}

}  // namespace

double alpha(double n, double loop) {
  check_homogeneous(n, loop);
  return checked_asin(std::sqrt(2.0 * (loop + 1.0) / n));
}

double alpha_exact(double n, double loop) {
  check_homogeneous(n, loop);
  return checked_asin(std::sqrt((2.0 * n + loop - 3.0) * (loop + 1.0)) / (n + loop - 1.0));
}

double p_homogeneous_exact(double n, double loop, double t) {
  const double a = alpha_exact(n, loop);
  const double root = std::sqrt(n + loop - 2.0);
  const double first = (1.0 - std::cos(a * t)) * std::sqrt(loop * (n - 1.0)) / ((loop + 1.0) * root);
  const double second = std::sqrt((2.0 * n + loop - 3.0) * (loop + 1.0)) * std::sin(a * t) /
                        (2.0 * (loop + 1.0) * root);
  return first * first + second * second;
}

double p_homogeneous(double n, double loop, double t) {
  const double a = alpha(n, loop);
  const double half = std::sin(a * t / 2.0);
  const double full = std::sin(a * t);
  return (8.0 * loop * half * half * half * half + (loop + 1.0) * full * full) /
         (2.0 * (loop + 1.0) * (loop + 1.0));
}

Peak peak(double n, double loop, PeakRegime regime, std::optional<double> c) {
  check_homogeneous(n, loop);
  if (regime != PeakRegime::linear && c) {
    throw ParameterError("the proportionality constant c only applies to the linear regime");
  }
  const double pi = std::numbers::pi;
  switch (regime) {
    case PeakRegime::small:
      if (loop >= 1.0 / 3.0) throw ParameterError("small regime requires l < 1/3");
      return {1.0 / (2.0 * (1.0 - loop)),
              std::acos(2.0 * loop / (loop - 1.0)) / std::sqrt(2.0 * (loop + 1.0)) * std::sqrt(n)};
    case PeakRegime::moderate:
      if (loop < 1.0 / 3.0) throw ParameterError("moderate regime requires l >= 1/3");
      return {4.0 * loop / ((loop + 1.0) * (loop + 1.0)),
              pi / std::sqrt(2.0 * (loop + 1.0)) * std::sqrt(n)};
    case PeakRegime::linear: {
      if (!c) throw ParameterError("linear regime requires the constant c in l = c n");
      const double cc = *c;
      if (!(cc > 0) || !std::isfinite(cc)) throw ParameterError("linear regime requires c > 0");
      return {(16.0 + 9.0 * cc) / (4.0 * cc * (cc + 1.0)) / n,
              pi / std::asin(std::sqrt(cc * (cc + 2.0)) / (cc + 1.0))};
    }
    case PeakRegime::large:
      if (!(loop > 0)) throw ParameterError("large regime requires l > 0");
      return {9.0 / (4.0 * loop), 2.0};
  }
  throw ParameterError("unknown peak regime");
}

void SubspaceModel::validate() const {
  if (!(n >= 3) || n != std::floor(n)) throw ParameterError("subspace model needs integral n >= 3");
  if (m != std::floor(m)) throw ParameterError("subspace model needs integral M");
  if (m < 2 || m > n - 1) {
    throw ParameterError("subspace model needs 2 <= M <= n-1 (got M=" + std::to_string(m) + ")");
  }
  if (!(loop >= 0) || !(other_loop >= 0) || !std::isfinite(loop) || !std::isfinite(other_loop)) {
    throw ParameterError("subspace model needs nonnegative loop weights");
  }
}

Matrix9 subspace_operator(const SubspaceModel& model) {
  model.validate();
  const double N = model.n;
  const double M = model.m;
  const double l = model.loop;
  const double lp = model.other_loop;

  const double M_1 = M - 1;
  const double M_l = M + l - 2;
  const double N_M = N - M;
  const double N_Mlp = N - M + lp - 1;
  const double N_2Ml = N - 2 * M + l + 1;
  const double N_2Mlp = N - 2 * M + lp + 1;
  const double N_m2Ml = N - 2 * M - l + 1;
  const double N_m2Mlp = N - 2 * M + lp - 1;

  const double D = N + l - 1;
  const double Dp = N + lp - 1;
  using std::sqrt;

  Matrix9 U = Matrix9::Zero();
  // aa, ab, ac rows
  U(0, 0) = (N - l - 1) / D;
  U(0, 1) = -2 * sqrt(l * M_1) / D;
  U(0, 2) = -2 * sqrt(l) * sqrt(N_M) / D;
  U(1, 3) = (-N - l + 3) / D;
  U(1, 4) = 2 * sqrt(M_l) / D;
  U(1, 5) = 2 * sqrt(N_M) / D;
  U(2, 6) = (-N - lp + 3) / Dp;
  U(2, 7) = 2 * sqrt(M_1) / Dp;
  U(2, 8) = 2 * sqrt(N_Mlp) / Dp;
  // ba, bb, bc rows
  U(3, 0) = -2 * sqrt(l * M_1) / D;
  U(3, 1) = N_2Ml / D;
  U(3, 2) = -2 * sqrt(N_M * M_1) / D;
  U(4, 3) = 2 * sqrt(M_l) / D;
  U(4, 4) = -(N_m2Ml + 2) / D;
  U(4, 5) = 2 * sqrt(M_l * N_M) / D;
  U(5, 6) = 2 * sqrt(M_1) / Dp;
  U(5, 7) = -N_2Mlp / Dp;
  U(5, 8) = 2 * sqrt(M_1 * N_Mlp) / Dp;
  // ca, cb, cc rows
  U(6, 0) = -2 * sqrt(l * N_M) / D;
  U(6, 1) = -2 * sqrt(N_M * M_1) / D;
  U(6, 2) = -N_m2Ml / D;
  U(7, 3) = 2 * sqrt(N_M) / D;
  U(7, 4) = 2 * sqrt(M_l * N_M) / D;
  U(7, 5) = N_m2Ml / D;
  U(8, 6) = 2 * sqrt(N_Mlp) / Dp;
  U(8, 7) = 2 * sqrt(M_1 * N_Mlp) / Dp;
  U(8, 8) = N_m2Mlp / Dp;
  return U;
}

Vector9 subspace_initial(const SubspaceModel& model) {
  model.validate();
  const double N = model.n;
  const double M = model.m;
  const double l = model.loop;
  const double lp = model.other_loop;
  const double D = N + l - 1;
  const double Dp = N + lp - 1;
  const double pre = 1.0 / std::sqrt(N);
  using std::sqrt;

  Vector9 psi;
  psi << sqrt(l / D), sqrt((M - 1) / D), sqrt((N - M) / D),  //
      sqrt((M - 1) / D), sqrt((M - 1) * (M + l - 2) / D), sqrt((M - 1) * (N - M) / D),
      sqrt((N - M) / Dp), sqrt((M - 1) * (N - M) / Dp), sqrt((N - M) * (N - M + lp - 1) / Dp);
  return pre * psi;
}

double subspace_success(const Vector9& state) {
  return std::norm(state(0)) + std::norm(state(1)) + std::norm(state(2));
}

std::vector<double> subspace_evolve(const SubspaceModel& model, std::size_t steps) {
  const Matrix9 U = subspace_operator(model);
  Vector9 psi = subspace_initial(model);
  std::vector<double> p;
  p.reserve(steps + 1);
  p.push_back(subspace_success(psi));
  for (std::size_t t = 0; t < steps; ++t) {
    psi = (U * psi).eval();
    p.push_back(subspace_success(psi));
  }
  return p;
}

Vector9 asymptotic_state_largeN(double loop, double t, double alpha) {
  if (!(loop >= 0)) throw ParameterError("loop weight must be >= 0");
  const double c = std::cos(alpha * t);
  const double s = std::sin(alpha * t);
  const double side = s / std::sqrt(2.0 * (loop + 1.0));
  Vector9 psi = Vector9::Zero();
  psi(0) = std::sqrt(loop) * (c - 1.0) / (loop + 1.0);
  psi(2) = side;
  psi(6) = -side;
  psi(8) = (loop + c) / (loop + 1.0);
  return psi;
}

double asymptotic_prob(double loop, double t, double alpha, std::optional<double> k) {
  if (!(loop >= 0)) throw ParameterError("loop weight must be >= 0");
  const double c = std::cos(alpha * t);
  const double s2 = std::sin(alpha * t) * std::sin(alpha * t);
  const double main = loop / ((loop + 1.0) * (loop + 1.0)) * (c - 1.0) * (c - 1.0);
  if (!k) return main + s2 / (2.0 * (loop + 1.0));
  const double kk = *k;
  if (!(kk > 0.0 && kk < 1.0)) throw ParameterError("k must lie in (0, 1)");
  // The b- and c-vertex contributions; their k-dependence cancels.
  return main + kk * s2 / (2.0 * (loop + 1.0)) + (1.0 - kk) * s2 / (2.0 * (loop + 1.0));
}

}  // namespace lqw
