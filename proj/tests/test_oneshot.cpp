#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sdiv/oneshot.hpp"
#include "sdiv/oracles.hpp"
#include "sdiv/states.hpp"

using namespace sdiv;

namespace {

DensityMatrix diag2(double a, double b) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return DensityMatrix(m);
}

const DensityMatrix kRho = diag2(0.9, 0.1);
const DensityMatrix kSigma = diag2(0.5, 0.5);

}  // namespace

TEST_CASE("boundary vertices of the reference pair") {
  const NPBoundary nb = np_boundary(kRho, kSigma);
  REQUIRE(nb.vertices().size() == 3);
  CHECK(nb.vertices()[0].alpha == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(nb.vertices()[0].beta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(nb.vertices()[1].alpha == doctest::Approx(0.1).epsilon(1e-10));
  CHECK(nb.vertices()[1].beta == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(nb.vertices()[2].alpha == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(nb.vertices()[2].beta == doctest::Approx(0.0).epsilon(1e-12));
  std::ostringstream os;
  nb.write_csv(os);
  CHECK(os.str().rfind("mu,alpha,beta\n", 0) == 0);
}

TEST_CASE("beta_epsilon on the reference pair") {
  const NPBoundary nb = np_boundary(kRho, kSigma);
  CHECK(beta_epsilon(nb, 0.05) == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(beta_epsilon(nb, 0.1) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(beta_epsilon(nb, 0.5) ==
        doctest::Approx(0.5 - 0.5 * (0.4 / 0.9)).epsilon(1e-10));
  CHECK(beta_epsilon(nb, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
  // monotone in eps
  double prev = 2.0;
  for (double eps : {0.01, 0.05, 0.1, 0.3, 0.7}) {
    const double b = beta_epsilon(nb, eps);
    CHECK(b <= prev + 1e-12);
    prev = b;
  }
  CHECK_THROWS_AS(beta_epsilon(nb, -0.1), DomainError);
}

TEST_CASE("one-shot objectives on the reference pair") {
  const NPBoundary nb = np_boundary(kRho, kSigma);
  CHECK(q_min(kRho, kSigma) == doctest::Approx(5.0 / 14.0).epsilon(1e-10));
  CHECK(q_s_c(nb, 2.0, 1.0) == doctest::Approx(0.4453624047073712).epsilon(1e-10));
  CHECK(p_err_bayes(nb, 0.5) == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(p_err_s_c(nb, 0.5, 1.0) == doctest::Approx(0.4783950617283951).epsilon(1e-9));
  // q_min is symmetric
  CHECK(q_min(kSigma, kRho) == doctest::Approx(q_min(kRho, kSigma)).epsilon(1e-10));
  // constraint satisfied with equality by the optimizer
  const OneShotSolution sol = q_s_c_solution(nb, 2.0, 1.0);
  CHECK(sol.optimizer.alpha ==
        doctest::Approx(std::pow(sol.optimizer.beta, 2.0)).epsilon(1e-8));
  CHECK_THROWS_AS(q_s_c(nb, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(q_s_c(nb, 1.0, 0.0), DomainError);
}

TEST_CASE("non-equivalence witness") {
  const DensityMatrix sigma = diag2(1.0, 0.0);
  const DensityMatrix rho = diag2(0.3, 0.7);
  CHECK(beta_epsilon(rho, sigma, 0.3) <= 1e-12);
  CHECK(beta_epsilon(rho, sigma, 0.1) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("certificates on quantum pairs") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const DensityMatrix rho = random_state(2, 2, 40 + seed);
    const DensityMatrix sigma = random_state(2, 2, 50 + seed);
    const NPBoundary nb = np_boundary(rho, sigma);
    for (const ErrorPoint& v : nb.vertices()) {
      if (!std::isfinite(v.mu)) continue;
      const double rhs =
          1.0 - positive_part_trace(rho.matrix() - v.mu * sigma.matrix());
      CHECK(v.alpha + v.mu * v.beta == doctest::Approx(rhs).epsilon(1e-7));
    }
  }
}

TEST_CASE("duality between s and 1/s") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const DensityMatrix rho = random_state(2, 2, 60 + seed);
    const DensityMatrix sigma = random_state(2, 2, 70 + seed);
    const NPBoundary fwd = np_boundary(rho, sigma);
    const NPBoundary rev = np_boundary(sigma, rho);
    for (double s : {0.5, 2.0}) {
      CHECK(q_s_c(fwd, s, 1.0) ==
            doctest::Approx(std::pow(q_s_c(rev, 1.0 / s, 1.0), 1.0 / s)).epsilon(1e-7));
      for (double c : {0.5, 2.0}) {
        const double dual = std::pow(
            q_s_c(rev, 1.0 / s, std::pow(c, -1.0 / s)) / c, 1.0 / s);
        CHECK(q_s_c(fwd, s, c) == doctest::Approx(dual).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("sandwiches between the two one-shot quantities") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const DensityMatrix rho = random_state(2, 2, 80 + seed);
    const DensityMatrix sigma = random_state(2, 2, 90 + seed);
    const NPBoundary nb = np_boundary(rho, sigma);
    for (double s : {0.5, 1.0, 2.0}) {
      for (double c : {0.5, 1.0, 2.0}) {
        const double q = q_s_c(nb, s, c);
        const double scale = std::pow(c, 1.0 / s);
        const double pe = p_err_s_c(nb, s, scale);
        CHECK(scale * q <= pe + 1e-9);
        CHECK(pe <= 2.0 * scale * q + 1e-9);
        // scaling sandwich against C = 1
        const double p1 = p_err_s_c(nb, s, 1.0);
        const double pc = p_err_s_c(nb, s, c);
        CHECK(std::min(c, 1.0) * p1 <= pc + 1e-9);
        CHECK(pc <= std::max(c, 1.0) * p1 + 1e-9);
      }
      // q_s_c non-increasing in C
      CHECK(q_s_c(nb, s, 0.5) >= q_s_c(nb, s, 1.0) - 1e-12);
      CHECK(q_s_c(nb, s, 1.0) >= q_s_c(nb, s, 2.0) - 1e-12);
    }
  }
}

TEST_CASE("degenerate pairs") {
  // rho == sigma: the boundary is the single segment alpha + beta = 1
  const NPBoundary nb = np_boundary(kSigma, kSigma);
  CHECK(q_s_c(nb, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(p_err_bayes(nb, 0.25) == doctest::Approx(0.25).epsilon(1e-10));
  // orthogonal pure states: perfect discrimination
  const DensityMatrix e0 = diag2(1.0, 0.0);
  const DensityMatrix e1 = diag2(0.0, 1.0);
  CHECK(q_min(e0, e1) <= 1e-12);
  CHECK(p_err_bayes(np_boundary(e0, e1), 0.5) <= 1e-12);
}

TEST_CASE("error_pair of concrete tests") {
  const ErrorPoint id = error_pair(kRho, kSigma, TestOperator::identity(2));
  CHECK(id.alpha == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(id.beta == doctest::Approx(1.0).epsilon(1e-12));
  const ErrorPoint zero = error_pair(kRho, kSigma, TestOperator::zero(2));
  CHECK(zero.alpha == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(zero.beta == doctest::Approx(0.0).epsilon(1e-12));
}
