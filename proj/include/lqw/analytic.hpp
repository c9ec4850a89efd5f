#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace lqw {

using Complex = std::complex<double>;
using Matrix9 = Eigen::Matrix<Complex, 9, 9>;
using Vector9 = Eigen::Matrix<Complex, 9, 1>;

// Complete graph with homogeneous loop weight l. All functions require n >= 3
// and l >= 0 (ParameterError otherwise).

/// asin(sqrt(2(l+1)/n)); DomainError when the argument exceeds 1.
double alpha(double n, double loop);
/// asin(sqrt((2n+l-3)(l+1)) / (n+l-1)).
double alpha_exact(double n, double loop);

/// Two-bracket large-n form, evaluated with alpha_exact.
double p_homogeneous_exact(double n, double loop, double t);
/// (8 l sin^4(a t/2) + (l+1) sin^2(a t)) / (2 (l+1)^2) with a = alpha(n, l).
double p_homogeneous(double n, double loop, double t);

/// Asymptotic regime of the peak formulas. A finite (n, l) pair cannot decide
/// it, so callers name it:
///   small    l = o(n), l < 1/3
///   moderate l = o(n), l >= 1/3
///   linear   l = c n (c required)
///   large    l = omega(n)
enum class PeakRegime { small, moderate, linear, large };

struct Peak {
  double probability = 0.0;
  double time = 0.0;
};

Peak peak(double n, double loop, PeakRegime regime, std::optional<double> c = std::nullopt);

/// Two-weight complete graph: vertices 0..M-1 carry weight `loop`, the rest
/// carry `other_loop`, and vertex 0 is marked.
struct SubspaceModel {
  double n = 0;
  double m = 0;
  double loop = 0;
  double other_loop = 0;

  /// 2 <= m <= n-1 (both b and c classes non-empty), integral n and m,
  /// nonnegative weights.
  void validate() const;
};

inline constexpr std::array<std::string_view, 9> kSubspaceBasis = {
    "aa", "ab", "ac", "ba", "bb", "bc", "ca", "cb", "cc"};

/// The search operator U = SCQ restricted to the 9D invariant subspace.
Matrix9 subspace_operator(const SubspaceModel& model);
/// Uniform initial state expressed in the 9D basis.
Vector9 subspace_initial(const SubspaceModel& model);
/// |aa|^2 + |ab|^2 + |ac|^2.
double subspace_success(const Vector9& state);
/// p(t) for t = 0..steps.
std::vector<double> subspace_evolve(const SubspaceModel& model, std::size_t steps);

/// Large-n closed-form state starting from |cc>.
Vector9 asymptotic_state_largeN(double loop, double t, double alpha);

/// Success probability of the large-n (k absent) or large-n-and-M (k given)
/// closed form. Both reduce to the homogeneous expression; k must lie in (0,1).
double asymptotic_prob(double loop, double t, double alpha, std::optional<double> k = std::nullopt);

}  // namespace lqw
