#include "sdiv/matrix_core.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

namespace sdiv {

double hermiticity_defect(const CMat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

EigenSystem hermitian_eigensystem(const CMat& h, const NumericPolicy& policy) {
  if (h.rows() != h.cols()) throw ValidationError("hermitian_eigensystem: matrix not square");
  if (!h.allFinite()) throw ValidationError("hermitian_eigensystem: non-finite entries");
  const double defect = hermiticity_defect(h);
  if (defect > 1e-8) {
    std::ostringstream os;
    os << "hermitian_eigensystem: input not Hermitian, max asymmetry " << defect;
    throw ValidationError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<CMat> solver((h + h.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw ValidationError("hermitian_eigensystem: eigensolver failed to converge");
  EigenSystem sys{solver.eigenvalues(), solver.eigenvectors()};

  const double scale = std::max(1e-300, h.cwiseAbs().maxCoeff());
  const CMat recon = sys.eigenvectors * sys.eigenvalues.asDiagonal() * sys.eigenvectors.adjoint();
  if ((recon - h).cwiseAbs().maxCoeff() > policy.eig_recon_tol * scale + policy.hermitian_tol)
    throw ValidationError("hermitian_eigensystem: reconstruction error above tolerance");
  return sys;
}

DensityMatrix::DensityMatrix(CMat m, const NumericPolicy& policy) : policy_(policy) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw ValidationError("DensityMatrix: matrix must be square with dim >= 1");
  if (!m.allFinite()) throw ValidationError("DensityMatrix: non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > policy.hermitian_tol) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian, max asymmetry " << defect;
    throw ValidationError(os.str());
  }
  matrix_ = (m + m.adjoint()) / 2.0;
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > policy.trace_tol) {
    std::ostringstream os;
    os << "DensityMatrix: trace deviates from 1 by " << (tr - 1.0);
    throw ValidationError(os.str());
  }
  eig_ = hermitian_eigensystem(matrix_, policy);
  if (eig_.eigenvalues.minCoeff() < -policy.psd_tol) {
    std::ostringstream os;
    os << "DensityMatrix: negative eigenvalue " << eig_.eigenvalues.minCoeff();
    throw ValidationError(os.str());
  }
}

CMat DensityMatrix::support_projector() const {
  const Eigen::Index d = dim();
  CMat p = CMat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (eig_.eigenvalues(i) > policy_.support_clip) {
      const CVec v = eig_.eigenvectors.col(i);
      p += v * v.adjoint();
    }
  }
  return p;
}

Eigen::Index DensityMatrix::rank() const {
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < dim(); ++i)
    if (eig_.eigenvalues(i) > policy_.support_clip) ++r;
  return r;
}

TestOperator::TestOperator(CMat m, const NumericPolicy& policy) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw ValidationError("TestOperator: matrix must be square with dim >= 1");
  const double defect = hermiticity_defect(m);
  if (defect > policy.hermitian_tol) {
    std::ostringstream os;
    os << "TestOperator: not Hermitian, max asymmetry " << defect;
    throw ValidationError(os.str());
  }
  matrix_ = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> solver(matrix_, Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  const double hi = solver.eigenvalues().maxCoeff();
  if (lo < -policy.psd_tol || hi > 1.0 + policy.psd_tol) {
    std::ostringstream os;
    os << "TestOperator: spectrum [" << lo << ", " << hi << "] outside [0, 1]";
    throw ValidationError(os.str());
  }
}

TestOperator TestOperator::identity(Eigen::Index dim) {
  return TestOperator(CMat::Identity(dim, dim));
}

TestOperator TestOperator::zero(Eigen::Index dim) {
  return TestOperator(CMat::Zero(dim, dim));
}

CMat fractional_power(const CMat& psd, double a, const NumericPolicy& policy) {
  if (a < 0.0 || a > 1.0) throw DomainError("fractional_power: exponent outside [0, 1]");
  const EigenSystem sys = hermitian_eigensystem(psd, policy);
  const double min_eig = sys.eigenvalues.minCoeff();
  if (min_eig < -policy.frac_power_neg_tol) {
    std::ostringstream os;
    os << "fractional_power: negative eigenvalue " << min_eig;
    throw ValidationError(os.str());
  }
  RVec powered(sys.eigenvalues.size());
  for (Eigen::Index i = 0; i < sys.eigenvalues.size(); ++i) {
    const double lam = sys.eigenvalues(i);
    powered(i) = (lam <= policy.support_clip) ? 0.0 : std::pow(lam, a);
  }
  return sys.eigenvectors * powered.asDiagonal() * sys.eigenvectors.adjoint();
}

CMat fractional_power(const DensityMatrix& rho, double a) {
  const NumericPolicy& policy = rho.policy();
  if (a < 0.0 || a > 1.0) throw DomainError("fractional_power: exponent outside [0, 1]");
  RVec powered(rho.dim());
  const EigenSystem& sys = rho.eig();
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    const double lam = sys.eigenvalues(i);
    powered(i) = (lam <= policy.support_clip) ? 0.0 : std::pow(lam, a);
  }
  return sys.eigenvectors * powered.asDiagonal() * sys.eigenvectors.adjoint();
}

DensityMatrix tensor_power(const DensityMatrix& rho, int n) {
  if (n < 1) throw DomainError("tensor_power: n must be >= 1");
  const NumericPolicy& policy = rho.policy();
  double needed = 1.0;
  for (int i = 0; i < n; ++i) needed *= static_cast<double>(rho.dim());
  if (needed > static_cast<double>(policy.tensor_cap)) {
    std::ostringstream os;
    os << "tensor_power: required dimension " << needed << " exceeds cap " << policy.tensor_cap;
    throw ResourceError(os.str());
  }
  CMat out = rho.matrix();
  for (int i = 1; i < n; ++i) {
    const CMat& a = out;
    const CMat& b = rho.matrix();
    CMat next(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c)
        next.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    out = std::move(next);
  }
  // Validation tolerances accumulate under Kronecker products; widen slightly.
  NumericPolicy relaxed = policy;
  relaxed.trace_tol = std::max(policy.trace_tol, 1e-12 * needed);
  return DensityMatrix(out, relaxed);
}

double positive_part_trace(const CMat& a, const NumericPolicy& policy) {
  if (hermiticity_defect(a) > 1e-8) {
    std::ostringstream os;
    os << "positive_part_trace: input not Hermitian, max asymmetry " << hermiticity_defect(a);
    throw ValidationError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<CMat> solver((a + a.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    if (solver.eigenvalues()(i) > 0.0) sum += solver.eigenvalues()(i);
  (void)policy;
  return sum;
}

nlohmann::json matrix_to_json(const CMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"matrix", std::move(rows)}};
}

CMat matrix_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("matrix"))
    throw ValidationError("matrix_from_json: missing 'dim' or 'matrix'");
  const Eigen::Index d = j.at("dim").get<Eigen::Index>();
  const auto& rows = j.at("matrix");
  if (d < 1 || static_cast<Eigen::Index>(rows.size()) != d)
    throw ValidationError("matrix_from_json: row count does not match dim");
  CMat m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const auto& row = rows.at(r);
    if (static_cast<Eigen::Index>(row.size()) != d)
      throw ValidationError("matrix_from_json: column count does not match dim");
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto& e = row.at(c);
      if (e.size() != 2) throw ValidationError("matrix_from_json: entry is not [re, im]");
      m(r, c) = std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

nlohmann::json state_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

DensityMatrix state_from_json(const nlohmann::json& j, const NumericPolicy& policy) {
  return DensityMatrix(matrix_from_json(j), policy);
}

}  // namespace sdiv
