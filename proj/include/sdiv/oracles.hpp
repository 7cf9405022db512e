#pragma once

#include <cstdint>
#include <vector>

#include "sdiv/matrix_core.hpp"
#include "sdiv/oneshot.hpp"
#include "sdiv/policy.hpp"

namespace sdiv {

// A pair of classical probability vectors, treated as commuting diagonal
// states. Ground truth for the quantum one-shot solvers.
struct ClassicalPair {
  std::vector<double> p;
  std::vector<double> q;

  ClassicalPair(std::vector<double> p_in, std::vector<double> q_in);
  std::size_t size() const { return p.size(); }

  DensityMatrix rho_diag() const;
  DensityMatrix sigma_diag() const;
};

// Exact Neyman-Pearson boundary by sorting atoms by descending likelihood
// ratio (ties merged).
NPBoundary classical_boundary(const ClassicalPair& pair);

// Exact crossing of alpha = C beta^s on the classical boundary.
double classical_q_s(const ClassicalPair& pair, double s, double c);

// Exact Q_C^(s) for the n-fold product of a binary pair via the n+1 type
// classes, all arithmetic in the log domain. Returns log Q.
double iid_type_log_q_s(const ClassicalPair& pair, long n, double s, double c);

// Stochastic upper bound on q_s_c: minimum feasible beta over random tests
// plus the boundary-derived optimum.
double random_test_search(const DensityMatrix& rho, const DensityMatrix& sigma, double s,
                          double c, int trials, std::uint64_t seed);

// Closed-form Helstrom value p - Tr[(p rho - (1-p) sigma)_+] for the Bayesian
// error probability.
double helstrom_check(double p, const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace sdiv
