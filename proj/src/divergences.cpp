#include "sdiv/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sdiv/detail/opt1d.hpp"

namespace sdiv {

RenyiProfile::RenyiProfile(DensityMatrix rho, DensityMatrix sigma)
    : rho_(std::move(rho)), sigma_(std::move(sigma)) {
  if (rho_.dim() != sigma_.dim()) {
    std::ostringstream os;
    os << "RenyiProfile: dimension mismatch " << rho_.dim() << " vs " << sigma_.dim();
    throw ValidationError(os.str());
  }
  const NumericPolicy& pol = rho_.policy();
  const EigenSystem& er = rho_.eig();
  const EigenSystem& es = sigma_.eig();
  const Eigen::Index d = rho_.dim();

  // Overlaps between the two eigenbases.
  const CMat overlap = er.eigenvectors.adjoint() * es.eigenvectors;

  double q0 = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double lam = er.eigenvalues(i);
    if (lam <= pol.support_clip) continue;
    tr_rho_log_rho_ += lam * std::log(lam);
    for (Eigen::Index j = 0; j < d; ++j) {
      const double mu = es.eigenvalues(j);
      if (mu <= pol.support_clip) continue;
      const double w = std::norm(overlap(i, j));
      if (w <= 0.0) continue;
      term_b_.push_back(std::log(mu));
      term_slope_.push_back(std::log(lam) - std::log(mu));
      term_w_.push_back(w);
      q0 += w * mu;
    }
  }
  orthogonal_ = q0 <= pol.support_clip;

  // Tr(rho log sigma) over supp(sigma), and the weight of rho outside it.
  double inside = 0.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mu = es.eigenvalues(j);
    if (mu <= pol.support_clip) continue;
    const CVec v = es.eigenvectors.col(j);
    const double r = std::max(0.0, (v.adjoint() * rho_.matrix() * v)(0, 0).real());
    tr_rho_log_sigma_ += r * std::log(mu);
    inside += r;
  }
  rho_outside_sigma_ = std::max(0.0, 1.0 - inside);
}

double RenyiProfile::q(double alpha) const {
  if (alpha < 0.0 || alpha > 1.0) throw DomainError("q_alpha: alpha outside [0, 1]");
  double sum = 0.0;
  for (std::size_t k = 0; k < term_w_.size(); ++k)
    sum += term_w_[k] * std::exp(term_b_[k] + alpha * term_slope_[k]);
  return std::clamp(sum, 0.0, 1.0);
}

double RenyiProfile::log_q(double alpha) const {
  const double v = q(alpha);
  return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
}

double q_alpha(const RenyiProfile& profile, double a) { return profile.q(a); }

ExtendedReal petz_renyi(const RenyiProfile& profile, double a) {
  if (a <= 0.0 || a >= 1.0)
    throw DomainError("petz_renyi: order must lie in (0, 1); endpoints are d_min and umegaki");
  const double q = profile.q(a);
  if (q <= 0.0) return ExtendedReal::infinity();
  return std::log(q) / (a - 1.0);
}

ExtendedReal umegaki(const RenyiProfile& profile) {
  if (profile.rho_outside_sigma() > 1e-10) return ExtendedReal::infinity();
  return std::max(0.0, profile.tr_rho_log_rho() - profile.tr_rho_log_sigma());
}

ExtendedReal umegaki(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return umegaki(RenyiProfile(rho, sigma));
}

ExtendedReal d_min(const RenyiProfile& profile) {
  const double q0 = profile.q(0.0);
  if (q0 <= profile.policy().support_clip) return ExtendedReal::infinity();
  return -std::log(q0);
}

ExtendedReal d_min(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return d_min(RenyiProfile(rho, sigma));
}

ExtendedReal chernoff(const RenyiProfile& profile) {
  if (profile.orthogonal_supports()) return ExtendedReal::infinity();
  const NumericPolicy& pol = profile.policy();
  const auto best = detail::maximize_1d([&](double a) { return -profile.log_q(a); }, 0.0, 1.0,
                                        pol.grid_points, pol.refine_tol);
  return std::max(0.0, best.value);
}

ExtendedReal chernoff(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return chernoff(RenyiProfile(rho, sigma));
}

ExtendedReal xi_s(const RenyiProfile& profile, double s) {
  if (s < 0.0) throw DomainError("xi_s: s must be >= 0");
  if (s == 0.0) return umegaki(profile);
  if (profile.orthogonal_supports()) return ExtendedReal::infinity();
  const NumericPolicy& pol = profile.policy();
  const auto best = detail::maximize_1d(
      [&](double a) { return profile.log_q(a) / (a * (1.0 - s) - 1.0); }, 0.0, 1.0,
      pol.grid_points, pol.refine_tol);
  return std::max(0.0, best.value);
}

ExtendedReal xi_s(const DensityMatrix& rho, const DensityMatrix& sigma, double s) {
  return xi_s(RenyiProfile(rho, sigma), s);
}

ExtendedReal hoeffding_b(const RenyiProfile& profile, double r) {
  if (r <= 0.0) throw DomainError("hoeffding_b: r must be > 0");
  const ExtendedReal dm = d_min(profile);
  if (dm.is_infinite() || r <= dm.value()) return ExtendedReal::infinity();
  const NumericPolicy& pol = profile.policy();
  // (alpha-1)/alpha (r - D_alpha) rewritten as ((alpha-1) r - log q(alpha)) / alpha.
  const auto best = detail::maximize_1d(
      [&](double a) { return ((a - 1.0) * r - profile.log_q(a)) / a; }, pol.hoeffding_alpha_min,
      1.0, pol.grid_points, pol.refine_tol);
  return std::max(0.0, best.value);
}

ExtendedReal hoeffding_b(const DensityMatrix& rho, const DensityMatrix& sigma, double r) {
  return hoeffding_b(RenyiProfile(rho, sigma), r);
}

ExtendedReal solve_fixed_point(const RenyiProfile& profile, double s) {
  if (s <= 0.0) throw DomainError("solve_fixed_point: s must be > 0");
  const double dist =
      (profile.rho().matrix() - profile.sigma().matrix()).cwiseAbs().maxCoeff();
  const NumericPolicy& pol = profile.policy();
  if (dist <= pol.equal_state_tol)
    throw DegenerateInputError(
        "solve_fixed_point: rho == sigma; the root set degenerates to an infimum at 0");
  if (profile.orthogonal_supports()) return ExtendedReal::infinity();

  const ExtendedReal dm = d_min(profile);
  const double dmin = dm.value();
  double lo = dmin + std::max(1e-12, 1e-9 * std::max(1.0, dmin));
  auto g = [&](double r) { return hoeffding_b(profile, r).as_double() - s * r; };
  // B(lo) may still be huge; it is finite for lo > dmin so g(lo) > 0 holds
  // whenever lo is below the root. Expand hi until g turns negative.
  double hi = std::max(2.0 * lo, lo + 1.0);
  int guard = 0;
  while (g(hi) > 0.0 && guard++ < 200) hi *= 2.0;
  if (guard >= 200) throw DomainError("solve_fixed_point: failed to bracket the root");
  if (g(lo) <= 0.0) lo = dmin;  // root sits right above d_min
  while (hi - lo > pol.fixed_point_tol * std::max(1.0, hi)) {
    const double mid = (lo + hi) / 2.0;
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2.0;
}

ExtendedReal lipschitz_constant(const RenyiProfile& profile, double c) {
  if (c <= 0.0) throw DomainError("lipschitz_constant: c must be > 0");
  if (profile.orthogonal_supports()) return ExtendedReal::infinity();
  const NumericPolicy& pol = profile.policy();
  const auto best = detail::maximize_1d(
      [&](double a) {
        const double den = a * (1.0 - c) - 1.0;
        return std::abs(a * profile.log_q(a)) / (den * den);
      },
      0.0, 1.0, pol.grid_points, pol.refine_tol);
  return std::max(0.0, best.value);
}

}  // namespace sdiv
