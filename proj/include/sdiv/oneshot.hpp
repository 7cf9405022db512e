#pragma once

#include <iosfwd>
#include <vector>

#include "sdiv/matrix_core.hpp"
#include "sdiv/policy.hpp"

namespace sdiv {

// A point on (or an optimizer over) the achievable error region.
// mu is the supporting Lagrange multiplier (+inf on the beta = 0 face),
// mix the randomization weight along the hull segment it lies on.
struct ErrorPoint {
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double mix = 0.0;
};

// Lower-left boundary of the achievable (type I, type II) error region.
// vertices() runs from (0, q(0)) to (q(1), 0) with alpha strictly increasing;
// path() additionally includes the (0, 1) and (1, 0) corners so that every
// achievable Pareto point lies on one of its segments.
class NPBoundary {
 public:
  explicit NPBoundary(std::vector<ErrorPoint> vertices);

  const std::vector<ErrorPoint>& vertices() const { return vertices_; }
  const std::vector<ErrorPoint>& path() const { return path_; }

  // CSV export, columns: mu, alpha, beta.
  void write_csv(std::ostream& os) const;

 private:
  std::vector<ErrorPoint> vertices_;
  std::vector<ErrorPoint> path_;
};

// Error pair (Tr((I - L) rho), Tr(L sigma)) of a concrete test.
ErrorPoint error_pair(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const TestOperator& test);

// Trace the Neyman-Pearson boundary from the extremal tests
// L_mu = projector onto the strictly positive eigenspace of rho - mu sigma.
NPBoundary np_boundary(const DensityMatrix& rho, const DensityMatrix& sigma);

// min beta subject to alpha <= eps.
double beta_epsilon(const NPBoundary& boundary, double eps);
double beta_epsilon(const DensityMatrix& rho, const DensityMatrix& sigma, double eps);

// Q_C^(s): min beta subject to alpha <= C beta^s, s, C > 0. The returned
// optimizer satisfies the constraint with equality.
struct OneShotSolution {
  double beta = 0.0;
  ErrorPoint optimizer;
};
OneShotSolution q_s_c_solution(const NPBoundary& boundary, double s, double c);
double q_s_c(const NPBoundary& boundary, double s, double c);
double q_s_c(const DensityMatrix& rho, const DensityMatrix& sigma, double s, double c);

// Q_min = Q_1^(1); symmetric in rho and sigma.
double q_min(const DensityMatrix& rho, const DensityMatrix& sigma);

// Bayesian error min_L (p alpha + (1-p) beta), p in (0, 1).
double p_err_bayes(const NPBoundary& boundary, double p);
double p_err_bayes(double p, const DensityMatrix& rho, const DensityMatrix& sigma);

// min_L (alpha^(1/s) + C beta), s, C > 0.
double p_err_s_c(const NPBoundary& boundary, double s, double c);
double p_err_s_c(const DensityMatrix& rho, const DensityMatrix& sigma, double s, double c);

}  // namespace sdiv
