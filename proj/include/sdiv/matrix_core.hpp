#pragma once

#include <Eigen/Dense>
#include <complex>
#include <nlohmann/json_fwd.hpp>

#include "sdiv/policy.hpp"

namespace sdiv {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Max-entry deviation from Hermiticity, max_ij |A_ij - conj(A_ji)|.
double hermiticity_defect(const CMat& a);

// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending, columns of
// `eigenvectors` are the corresponding orthonormal eigenvectors.
struct EigenSystem {
  RVec eigenvalues;
  CMat eigenvectors;
};

EigenSystem hermitian_eigensystem(const CMat& h,
                                  const NumericPolicy& policy = NumericPolicy::defaults());

// Density matrix: Hermitian, PSD and unit trace within policy tolerances.
// The eigendecomposition is computed once at construction and cached.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMat m, const NumericPolicy& policy = NumericPolicy::defaults());

  Eigen::Index dim() const { return matrix_.rows(); }
  const CMat& matrix() const { return matrix_; }
  const EigenSystem& eig() const { return eig_; }
  const NumericPolicy& policy() const { return policy_; }

  // Projector onto the support (eigenvalues above the clip threshold).
  CMat support_projector() const;
  Eigen::Index rank() const;

 private:
  CMat matrix_;
  EigenSystem eig_;
  NumericPolicy policy_;
};

// Measurement effect: Hermitian with spectrum in [0, 1] within tolerance.
class TestOperator {
 public:
  explicit TestOperator(CMat m, const NumericPolicy& policy = NumericPolicy::defaults());

  Eigen::Index dim() const { return matrix_.rows(); }
  const CMat& matrix() const { return matrix_; }

  static TestOperator identity(Eigen::Index dim);
  static TestOperator zero(Eigen::Index dim);

 private:
  CMat matrix_;
};

// a-th power of a PSD matrix in its eigenbasis, with eigenvalues at or below
// the clip threshold mapped to zero for every a (so rho^0 is the support
// projector).
CMat fractional_power(const CMat& psd, double a,
                      const NumericPolicy& policy = NumericPolicy::defaults());
CMat fractional_power(const DensityMatrix& rho, double a);

// n-fold Kronecker power. Rejects results larger than policy.tensor_cap.
DensityMatrix tensor_power(const DensityMatrix& rho, int n);

// Sum of the positive eigenvalues of a Hermitian matrix.
double positive_part_trace(const CMat& a,
                           const NumericPolicy& policy = NumericPolicy::defaults());

// JSON state format: {"dim": d, "matrix": [[[re,im],...],...]} row-major.
nlohmann::json matrix_to_json(const CMat& m);
CMat matrix_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j,
                              const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace sdiv
