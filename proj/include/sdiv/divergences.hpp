#pragma once

#include <vector>

#include "sdiv/matrix_core.hpp"
#include "sdiv/policy.hpp"

namespace sdiv {

// Evaluator for q(alpha) = Tr(rho^alpha sigma^(1-alpha)) on [0, 1], with the
// support-projector conventions q(0) = Tr(pi_rho sigma), q(1) = Tr(rho pi_sigma).
// Eigensystems are taken from the states (cached at their construction); the
// profile itself is immutable and safe for concurrent reads.
class RenyiProfile {
 public:
  RenyiProfile(DensityMatrix rho, DensityMatrix sigma);

  double q(double alpha) const;          // clamped to [0, 1]
  double log_q(double alpha) const;      // -inf when q(alpha) == 0
  bool orthogonal_supports() const { return orthogonal_; }

  const DensityMatrix& rho() const { return rho_; }
  const DensityMatrix& sigma() const { return sigma_; }
  const NumericPolicy& policy() const { return rho_.policy(); }

  // Tr(rho log rho), and Tr(rho log sigma) restricted to supp(sigma).
  double tr_rho_log_rho() const { return tr_rho_log_rho_; }
  double tr_rho_log_sigma() const { return tr_rho_log_sigma_; }
  // Weight of rho outside supp(sigma), Tr((I - pi_sigma) rho).
  double rho_outside_sigma() const { return rho_outside_sigma_; }

 private:
  DensityMatrix rho_, sigma_;
  // q(alpha) = sum_k w_k exp(b_k + alpha (a_k - b_k)) over support pairs,
  // a_k = log lambda_i, b_k = log mu_j, w_k = |<u_i|v_j>|^2.
  std::vector<double> term_b_, term_slope_, term_w_;
  bool orthogonal_ = false;
  double tr_rho_log_rho_ = 0.0;
  double tr_rho_log_sigma_ = 0.0;
  double rho_outside_sigma_ = 0.0;
};

// Tr(rho^a sigma^(1-a)) for a in [0, 1].
double q_alpha(const RenyiProfile& profile, double a);

// Petz-Renyi relative entropy log(q(a)) / (a - 1), a in (0, 1).
ExtendedReal petz_renyi(const RenyiProfile& profile, double a);

// Umegaki relative entropy Tr(rho (log rho - log sigma)); infinite unless
// supp(rho) is contained in supp(sigma).
ExtendedReal umegaki(const RenyiProfile& profile);
ExtendedReal umegaki(const DensityMatrix& rho, const DensityMatrix& sigma);

// Min-relative entropy -log Tr(pi_rho sigma).
ExtendedReal d_min(const RenyiProfile& profile);
ExtendedReal d_min(const DensityMatrix& rho, const DensityMatrix& sigma);

// Chernoff divergence -log min_alpha q(alpha).
ExtendedReal chernoff(const RenyiProfile& profile);
ExtendedReal chernoff(const DensityMatrix& rho, const DensityMatrix& sigma);

// The one-parameter divergence family: sup_alpha log(q(alpha)) / (alpha(1-s) - 1)
// for s > 0; equals the Umegaki relative entropy at s = 0.
ExtendedReal xi_s(const RenyiProfile& profile, double s);
ExtendedReal xi_s(const DensityMatrix& rho, const DensityMatrix& sigma, double s);

// Hoeffding bound sup_{alpha in (0,1]} (alpha-1)/alpha (r - D_alpha), r > 0.
// Infinite iff r <= d_min, decided analytically.
ExtendedReal hoeffding_b(const RenyiProfile& profile, double r);
ExtendedReal hoeffding_b(const DensityMatrix& rho, const DensityMatrix& sigma, double r);

// Root of B(r) = s r by bisection, exploiting that B is decreasing. Rejects
// rho == sigma (within tolerance); infinite for orthogonal supports.
ExtendedReal solve_fixed_point(const RenyiProfile& profile, double s);

// sup_alpha |alpha log q(alpha)| / (alpha(1-c) - 1)^2, the Lipschitz constant
// of s -> xi_s on [c, inf). Infinite for orthogonal supports.
ExtendedReal lipschitz_constant(const RenyiProfile& profile, double c);

}  // namespace sdiv
