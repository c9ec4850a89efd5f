#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lqw/analytic.hpp"
#include "lqw/errors.hpp"
#include "lqw/graphs.hpp"
#include "lqw/rng.hpp"
#include "lqw/walk.hpp"
#include "lqw/weights.hpp"

using namespace lqw;
constexpr double pi = std::numbers::pi;

namespace {

// The nine subspace basis vectors written out in the full arc space of the
// complete graph (vertex 0 = a, 1..M-1 = b, M..N-1 = c).
std::vector<std::vector<Complex>> full_basis(const LackadaisicalWalk& walk, std::size_t n, std::size_t m,
                                             double l, double lp) {
  auto cls = [&](Vertex v) { return v == 0 ? 0 : (v < m ? 1 : 2); };
  const double size[3] = {1.0, double(m - 1), double(n - m)};
  std::vector<std::vector<Complex>> basis(9, std::vector<Complex>(walk.arc_count()));
  for (Vertex u = 0; u < n; ++u) {
    const int cu = cls(u);
    for (Vertex v = 0; v < n; ++v) {
      const int cv = cls(v);
      const std::size_t arc = (u == v) ? walk.loop_arc(u) : walk.block_start(u) + (v < u ? v : v - 1);
      const int index = 3 * cu + cv;
      double amp = 1.0 / std::sqrt(size[cu]);
      if (cu == cv && cu != 0) {
        // |bb> and |cc> mix same-class neighbors with the weighted loop.
        const double w = cu == 1 ? l : lp;
        amp /= std::sqrt(size[cu] - 1.0 + w);
        if (u == v) amp *= std::sqrt(w);
      } else if (cu == cv) {
        if (u != v) continue;
      } else {
        if (u == v) continue;
        amp /= std::sqrt(size[cv]);
      }
      basis[index][arc] = amp;
    }
  }
  return basis;
}

Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace

TEST_CASE("alpha") {
  CHECK(alpha(256, 1) == doctest::Approx(0.125327831168065397).epsilon(1e-15));
  CHECK(alpha(4, 1) == doctest::Approx(pi / 2));
  CHECK(alpha(10, 4) == doctest::Approx(pi / 2));
  CHECK_THROWS_AS(alpha(3, 1), DomainError);
  CHECK(std::abs(alpha_exact(256, 1) / alpha(256, 1) - 1.0) < 0.01);
  CHECK_THROWS_AS(alpha(2, 0), ParameterError);
  CHECK_THROWS_AS(alpha(100, -1), ParameterError);
}

TEST_CASE("homogeneous success probability") {
  CHECK(p_homogeneous(256, 1, 0) == 0.0);
  CHECK(p_homogeneous(256, 1, pi / alpha(256, 1)) == doctest::Approx(1.0));
  double best = 0.0;
  for (double t = 0; t < 60; t += 1e-3) best = std::max(best, p_homogeneous(256, 0.3, t));
  CHECK(best == doctest::Approx(0.71).epsilon(0.01));

  SplitMix64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const double l = rng.uniform(0, 10);
    const double n = std::ceil(2 * (l + 1)) + std::floor(rng.uniform(0, 5000));
    const double t = rng.uniform(0, 500);
    const double p = p_homogeneous(n, l, t);
    REQUIRE(p >= 0.0);
    REQUIRE(p <= 1.0 + 1e-12);
    const double pe = p_homogeneous_exact(n, l, t);
    REQUIRE(pe >= 0.0);
    REQUIRE(pe <= 1.0 + 1e-12);
  }
}

TEST_CASE("exact and simplified forms agree for large n") {
  for (double l : {0.0, 0.5, 1.0, 3.0}) {
    double worst = 0.0;
    const double n = 1e6;
    for (double t = 0; t < 3000; t += 7.3) worst = std::max(worst, std::abs(p_homogeneous(n, l, t) - p_homogeneous_exact(n, l, t)));
    CHECK(worst < 5e-3);
  }
}

TEST_CASE("peak regimes") {
  const auto small = peak(256, 0, PeakRegime::small);
  CHECK(small.probability == doctest::Approx(0.5));
  CHECK(small.time == doctest::Approx(pi * 16 / (2 * std::sqrt(2.0))));
  CHECK(peak(256, 2, PeakRegime::moderate).probability == doctest::Approx(8.0 / 9.0));
  CHECK(peak(256, 1, PeakRegime::moderate).time == doctest::Approx(pi * 16 / 2));
  const auto linear = peak(256, 256, PeakRegime::linear, 1.0);
  CHECK(linear.probability == doctest::Approx(25.0 / (8 * 256)));
  CHECK(linear.time == doctest::Approx(3.0));
  const auto large = peak(100, 1e6, PeakRegime::large);
  CHECK(large.probability == doctest::Approx(9.0 / 4e6));
  CHECK(large.time == 2.0);

  CHECK_THROWS_AS(peak(256, 100, PeakRegime::linear), ParameterError);
  CHECK_THROWS_AS(peak(256, 1, PeakRegime::moderate, 0.5), ParameterError);
  CHECK_THROWS_AS(peak(256, 0.5, PeakRegime::small), ParameterError);
  CHECK_THROWS_AS(peak(256, 0.2, PeakRegime::moderate), ParameterError);
  CHECK_THROWS_AS(peak(256, 256, PeakRegime::linear, -1.0), ParameterError);
}

TEST_CASE("o(N) peak formulas match the maximum of the simplified curve") {
  const double n = 1e8;
  for (double l : {0.0, 0.1, 0.25, 1.0 / 3.0, 0.5, 1.0, 2.0, 5.0}) {
    CAPTURE(l);
    const auto regime = l < 1.0 / 3.0 ? PeakRegime::small : PeakRegime::moderate;
    const auto pk = peak(n, l, regime);
    // Scan the first period of the simplified curve directly.
    const double a = alpha(n, l);
    double best = 0.0, arg = 0.0;
    for (double x = 0; x <= pi; x += 1e-5) {
      const double p = p_homogeneous(n, l, x / a);
      if (p > best) {
        best = p;
        arg = x / a;
      }
    }
    CHECK(pk.probability == doctest::Approx(best).epsilon(1e-6));
    CHECK(pk.time == doctest::Approx(arg).epsilon(1e-3));
  }
}

TEST_CASE("subspace operator entries and unitarity") {
  const SubspaceModel m{256, 10, 1.5, 0.5};
  const auto u = subspace_operator(m);
  CHECK(u(0, 0).real() == doctest::Approx((256 - 1.5 - 1) / (256 + 1.5 - 1)));
  CHECK(u(0, 3) == Complex(0.0));
  CHECK((u.adjoint() * u - Matrix9::Identity()).cwiseAbs().maxCoeff() < 1e-12);

  SplitMix64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const double n = 3 + std::floor(rng.uniform(0, 5000));
    const double mm = 2 + std::floor(rng.uniform(0, n - 2));
    const SubspaceModel draw{n, std::min(mm, n - 1), rng.uniform(0, 10), rng.uniform(0, 10)};
    const auto ud = subspace_operator(draw);
    REQUIRE((ud.adjoint() * ud - Matrix9::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("subspace model rejects degenerate classes") {
  CHECK_THROWS_AS(subspace_operator({8, 1, 1, 1}), ParameterError);
  CHECK_THROWS_AS(subspace_operator({8, 8, 1, 1}), ParameterError);
  CHECK_THROWS_AS(subspace_operator({8, 2.5, 1, 1}), ParameterError);
  CHECK_THROWS_AS(subspace_operator({8, 3, -1, 1}), ParameterError);
  CHECK_THROWS_AS(subspace_initial({8, 1, 1, 1}), ParameterError);
}

TEST_CASE("subspace operator and initial state equal projections of the full walk") {
  struct Case {
    std::size_t n, m;
    double l, lp;
  };
  for (const Case c : {Case{6, 4, 1, 1}, Case{6, 4, 1, 2}, Case{9, 3, 0.5, 2}, Case{10, 4, 2, 0.3}}) {
    CAPTURE(c.n);
    CAPTURE(c.l);
    CAPTURE(c.lp);
    const LackadaisicalWalk walk(build_complete(c.n), realize_weights(TwoClass{c.m, c.l, c.lp}, c.n, 0));
    const auto basis = full_basis(walk, c.n, c.m, c.l, c.lp);
    const SubspaceModel model{double(c.n), double(c.m), c.l, c.lp};
    const auto u9 = subspace_operator(model);
    double worst = 0.0;
    for (int j = 0; j < 9; ++j) {
      REQUIRE(std::abs(inner(basis[j], basis[j]) - 1.0) < 1e-14);
      WalkState s{basis[j]};
      walk.step(s, 0);
      // The image must stay inside the span.
      Complex captured = 0.0;
      for (int i = 0; i < 9; ++i) {
        const Complex e = inner(basis[i], s.amplitudes);
        captured += std::norm(e);
        worst = std::max(worst, std::abs(e - u9(i, j)));
      }
      CHECK(captured.real() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(worst < 1e-13);

    const auto init = walk.initial_uniform();
    const auto s9 = subspace_initial(model);
    for (int i = 0; i < 9; ++i) CHECK(std::abs(inner(basis[i], init.amplitudes) - s9[i]) < 1e-14);
  }
}

TEST_CASE("subspace initial state") {
  const SubspaceModel m{100, 7, 2, 3};
  const auto s = subspace_initial(m);
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s[0].real() == doctest::Approx(std::sqrt(2.0 / (100 * (100 + 2 - 1)))));
  const auto p = subspace_evolve(m, 0);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == doctest::Approx(1.0 / 100));
}

TEST_CASE("subspace evolution matches the full simulation") {
  const SubspaceModel m{255, 254, 1, 7};
  const auto sub = subspace_evolve(m, 60);
  const LackadaisicalWalk walk(build_complete(255), realize_weights(TwoClass{254, 1, 7}, 255, 0));
  const auto full = walk.evolve_record(0, 60, InitialState::uniform);
  for (std::size_t t = 0; t <= 60; ++t) CHECK(std::abs(sub[t] - full.probability[t]) < 1e-9);
}

TEST_CASE("subspace peak error against the closed form decreases with n") {
  double previous = 1.0;
  for (double n : {256.0, 1024.0, 4096.0}) {
    CAPTURE(n);
    const auto sub = subspace_evolve({n, 2, 1, 1}, std::size_t(2 * std::sqrt(n)));
    const double sim_peak = *std::max_element(sub.begin(), sub.end());
    double formula = 0.0;
    for (double t = 0; t < 2 * std::sqrt(n); t += 1e-3) formula = std::max(formula, p_homogeneous(n, 1, t));
    const double err = std::abs(sim_peak - formula);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 0.02);
}

TEST_CASE("subspace curve converges to the exact closed form") {
  double previous = 1.0;
  for (double n : {256.0, 1024.0, 4096.0}) {
    const auto sub = subspace_evolve({n, 2, 1, 1}, std::size_t(2 * std::sqrt(n)));
    double dev = 0.0;
    for (std::size_t t = 0; t < sub.size(); ++t) dev = std::max(dev, std::abs(sub[t] - p_homogeneous_exact(n, 1, double(t))));
    CHECK(dev < 0.6 * previous);
    previous = dev;
  }
  CHECK(previous < 0.02);
}

TEST_CASE("large-N asymptotic state") {
  const auto s0 = asymptotic_state_largeN(1.0, 0.0, 0.1);
  CHECK(std::abs(s0[8] - 1.0) < 1e-15);
  CHECK((s0.head<8>()).norm() < 1e-15);

  const auto sp = asymptotic_state_largeN(1.0, pi, 1.0);
  CHECK(sp[0].real() == doctest::Approx(-1.0));
  CHECK(std::abs(sp[8]) < 1e-15);

  for (double l : {0.5, 1.0, 3.0}) {
    for (double t = 0; t < 100; t += 3.7) {
      const double a = 0.05;
      const auto s = asymptotic_state_largeN(l, t, a);
      CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(subspace_success(s) == doctest::Approx(asymptotic_prob(l, t, a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("asymptotic probability") {
  CHECK(asymptotic_prob(1.0, pi, 1.0) == doctest::Approx(1.0));
  for (double k : {1e-6, 0.25, 0.5, 0.9, 1 - 1e-9}) {
    for (double t : {0.0, 3.0, 17.5}) {
      CHECK(asymptotic_prob(0.7, t, 0.11, k) == doctest::Approx(asymptotic_prob(0.7, t, 0.11)).epsilon(1e-15));
    }
  }
  CHECK(asymptotic_prob(2.0, 7.0, 0.1) == doctest::Approx(p_homogeneous(2.0 * (2 + 1) / std::pow(std::sin(0.1), 2), 2.0, 7.0)));
  CHECK_THROWS_AS(asymptotic_prob(1.0, 1.0, 0.1, 0.0), ParameterError);
  CHECK_THROWS_AS(asymptotic_prob(1.0, 1.0, 0.1, 1.0), ParameterError);
}
