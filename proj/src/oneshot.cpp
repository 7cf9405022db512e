#include "sdiv/oneshot.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "sdiv/detail/opt1d.hpp"

namespace sdiv {

namespace {

constexpr double kSnapTol = 1e-12;
constexpr double kPosEigTol = 1e-13;
const double kInf = std::numeric_limits<double>::infinity();

double snap01(double x) {
  if (x < kSnapTol) return 0.0;
  if (x > 1.0 - kSnapTol) return 1.0;
  return std::clamp(x, 0.0, 1.0);
}

// Supporting multiplier of the hull segment between two vertices,
// mu = -1 / slope. Vertical segments are supported by mu = 0, horizontal
// ones by mu = +inf.
double segment_mu(const ErrorPoint& a, const ErrorPoint& b) {
  const double da = b.alpha - a.alpha;
  const double db = a.beta - b.beta;
  if (da <= kSnapTol) return 0.0;
  if (db <= kSnapTol) return kInf;
  return da / db;
}

}  // namespace

NPBoundary::NPBoundary(std::vector<ErrorPoint> vertices) {
  if (vertices.empty()) throw ValidationError("NPBoundary: empty vertex list");
  for (auto& v : vertices) {
    v.alpha = snap01(v.alpha);
    v.beta = snap01(v.beta);
  }
  std::sort(vertices.begin(), vertices.end(), [](const ErrorPoint& a, const ErrorPoint& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.beta < b.beta;
  });
  // Collapse alpha-duplicates to the lowest beta, then keep only the lower
  // convex hull (slopes strictly increasing toward zero).
  std::vector<ErrorPoint> dedup;
  for (const auto& v : vertices) {
    if (!dedup.empty() && v.alpha - dedup.back().alpha <= kSnapTol) continue;
    if (!dedup.empty() && v.beta >= dedup.back().beta - kSnapTol) continue;
    dedup.push_back(v);
  }
  auto slope = [](const ErrorPoint& a, const ErrorPoint& b) {
    return (b.beta - a.beta) / (b.alpha - a.alpha);
  };
  for (const auto& v : dedup) {
    while (vertices_.size() >= 2 &&
           slope(vertices_[vertices_.size() - 2], vertices_.back()) >=
               slope(vertices_.back(), v) - 1e-15)
      vertices_.pop_back();
    vertices_.push_back(v);
  }

  path_ = vertices_;
  if (path_.front().beta < 1.0)
    path_.insert(path_.begin(), ErrorPoint{0.0, 1.0, 0.0, 0.0});
  if (path_.back().alpha < 1.0) path_.push_back(ErrorPoint{1.0, 0.0, kInf, 0.0});
}

void NPBoundary::write_csv(std::ostream& os) const {
  os << std::setprecision(12) << "mu,alpha,beta\n";
  for (const auto& v : vertices_) {
    if (std::isinf(v.mu))
      os << "inf";
    else
      os << v.mu;
    os << ',' << v.alpha << ',' << v.beta << '\n';
  }
}

ErrorPoint error_pair(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const TestOperator& test) {
  if (rho.dim() != sigma.dim() || rho.dim() != test.dim()) {
    std::ostringstream os;
    os << "error_pair: dimension mismatch (rho " << rho.dim() << ", sigma " << sigma.dim()
       << ", test " << test.dim() << ")";
    throw ValidationError(os.str());
  }
  ErrorPoint pt;
  pt.alpha = std::clamp(1.0 - (test.matrix() * rho.matrix()).trace().real(), 0.0, 1.0);
  pt.beta = std::clamp((test.matrix() * sigma.matrix()).trace().real(), 0.0, 1.0);
  return pt;
}

NPBoundary np_boundary(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream os;
    os << "np_boundary: dimension mismatch " << rho.dim() << " vs " << sigma.dim();
    throw ValidationError(os.str());
  }
  const NumericPolicy& pol = rho.policy();
  const Eigen::Index d = rho.dim();

  struct Point {
    double alpha, beta;
  };
  // (alpha, beta) of the extremal test at multiplier mu: the projector onto
  // the strictly positive eigenspace of rho - mu sigma.
  auto eval = [&](double mu) -> Point {
    Eigen::SelfAdjointEigenSolver<CMat> solver(rho.matrix() - mu * sigma.matrix());
    double tr_rho = 0.0, tr_sigma = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) {
      if (solver.eigenvalues()(k) <= kPosEigTol) continue;
      const CVec v = solver.eigenvectors().col(k);
      tr_rho += (v.adjoint() * rho.matrix() * v)(0, 0).real();
      tr_sigma += (v.adjoint() * sigma.matrix() * v)(0, 0).real();
    }
    return {std::clamp(1.0 - tr_rho, 0.0, 1.0), std::clamp(tr_sigma, 0.0, 1.0)};
  };

  const double lam_max_rho = rho.eig().eigenvalues.maxCoeff();
  double lam_min_pos_sigma = kInf;
  bool sigma_singular = false;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double mu = sigma.eig().eigenvalues(i);
    if (mu > pol.support_clip)
      lam_min_pos_sigma = std::min(lam_min_pos_sigma, mu);
    else
      sigma_singular = true;
  }
  double mu_max = lam_max_rho / lam_min_pos_sigma * 1.01 + 1e-9;

  std::map<double, Point> samples;
  auto sample_at = [&](double mu) {
    if (mu < 0.0 || mu > mu_max) return;
    if (samples.count(mu)) return;
    samples.emplace(mu, eval(mu));
  };

  sample_at(0.0);
  auto add_geometric = [&](double lo, double hi, int count) {
    const double ratio = std::pow(hi / lo, 1.0 / (count - 1));
    double mu = lo;
    for (int i = 0; i < count; ++i, mu *= ratio) sample_at(std::min(mu, hi));
    sample_at(hi);
  };
  add_geometric(mu_max * 1e-6, mu_max, pol.mu_grid_points);

  // When sigma has full rank the crossing multipliers are the generalized
  // eigenvalues of the pencil (rho, sigma); seed the sweep with them so the
  // bisection converges immediately.
  if (!sigma_singular) {
    Eigen::GeneralizedSelfAdjointEigenSolver<CMat> ges(rho.matrix(), sigma.matrix(),
                                                       Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    std::vector<double> crossings;
    for (Eigen::Index i = 0; i < d; ++i) {
      const double mu = ges.eigenvalues()(i);
      if (mu > 0.0 && mu < mu_max) crossings.push_back(mu);
    }
    std::sort(crossings.begin(), crossings.end());
    double prev = 0.0;
    for (const double mu : crossings) {
      const double h = std::max(1e-13, 0.5 * pol.mu_bisect_rel_tol * mu);
      sample_at(mu - h);
      sample_at(mu + h);
      sample_at((prev + mu) / 2.0);
      prev = mu;
    }
    if (!crossings.empty()) sample_at((prev + mu_max) / 2.0);
  }

  auto points_differ = [&](const Point& a, const Point& b) {
    return std::abs(a.alpha - b.alpha) > pol.mu_point_tol ||
           std::abs(a.beta - b.beta) > pol.mu_point_tol;
  };

  // Subdivide intervals whose endpoints disagree. Two regimes: when the
  // midpoint coincides with one endpoint the boundary jumps inside the
  // interval (commuting pairs), so localize the crossing in mu; otherwise the
  // curve is smooth there and we split until the midpoint's sagitta against
  // the chord drops below resolution. The vertex budget is a stopping rule.
  auto refine = [&]() {
    std::deque<std::pair<double, double>> work;
    for (auto it = samples.begin(); std::next(it) != samples.end(); ++it)
      work.emplace_back(it->first, std::next(it)->first);
    int evals = 0;
    const int eval_cap = 64 * pol.max_boundary_vertices;
    while (!work.empty() && evals < eval_cap &&
           static_cast<int>(samples.size()) < pol.max_boundary_vertices) {
      auto [a, b] = work.front();
      work.pop_front();
      if (b - a <= 1e-13 + pol.mu_bisect_rel_tol * std::max(1.0, b)) continue;
      const Point pa = samples.at(a);
      const Point pb = samples.at(b);
      if (!points_differ(pa, pb)) continue;
      const double mid = (a + b) / 2.0;
      if (!samples.count(mid)) {
        samples.emplace(mid, eval(mid));
        ++evals;
      }
      const Point pm = samples.at(mid);
      const bool same_a = !points_differ(pa, pm);
      const bool same_b = !points_differ(pm, pb);
      if (same_a && same_b) continue;
      if (same_a) {
        work.emplace_back(mid, b);
        continue;
      }
      if (same_b) {
        work.emplace_back(a, mid);
        continue;
      }
      const double dx = pb.alpha - pa.alpha;
      const double dy = pb.beta - pa.beta;
      const double len = std::hypot(dx, dy);
      const double sag =
          len > 0.0
              ? std::abs(dx * (pm.beta - pa.beta) - dy * (pm.alpha - pa.alpha)) / len
              : 0.0;
      if (sag <= pol.boundary_sag_tol) continue;
      work.emplace_back(a, mid);
      work.emplace_back(mid, b);
    }
  };
  refine();

  // For rank-deficient sigma the beta = 0 face is approached only as
  // mu -> inf; extend the sweep a few times, then close with the analytic
  // endpoint from the maximal test supported on ker(sigma).
  if (sigma_singular) {
    for (int round = 0; round < 6 && samples.rbegin()->second.beta > 1e-10; ++round) {
      const double lo = mu_max;
      mu_max *= 2.0;
      add_geometric(lo * 1.01, mu_max, 16);
      refine();
    }
  }

  // Group samples into plateaus of constant (alpha, beta); each plateau is a
  // vertex, certified at the midpoint of its mu range.
  std::vector<ErrorPoint> vertices;
  auto it = samples.begin();
  while (it != samples.end()) {
    double mu_lo = it->first, mu_hi = it->first;
    const Point pt = it->second;
    auto jt = std::next(it);
    while (jt != samples.end() && !points_differ(pt, jt->second)) {
      mu_hi = jt->first;
      ++jt;
    }
    vertices.push_back(ErrorPoint{pt.alpha, pt.beta, (mu_lo + mu_hi) / 2.0, 0.0});
    it = jt;
  }

  // Analytic beta = 0 endpoint: alpha = Tr(pi_sigma rho).
  const double alpha_end =
      snap01((sigma.support_projector() * rho.matrix()).trace().real());
  vertices.push_back(ErrorPoint{alpha_end, 0.0, kInf, 0.0});

  return NPBoundary(std::move(vertices));
}

double beta_epsilon(const NPBoundary& boundary, double eps) {
  if (eps < 0.0 || eps > 1.0) throw DomainError("beta_epsilon: eps outside [0, 1]");
  const auto& path = boundary.path();
  std::size_t i = 0;
  for (std::size_t k = 0; k < path.size(); ++k)
    if (path[k].alpha <= eps) i = k;
  if (i + 1 >= path.size()) return path.back().beta;
  const auto& a = path[i];
  const auto& b = path[i + 1];
  const double t = (eps - a.alpha) / (b.alpha - a.alpha);
  return std::clamp(a.beta + t * (b.beta - a.beta), 0.0, 1.0);
}

double beta_epsilon(const DensityMatrix& rho, const DensityMatrix& sigma, double eps) {
  return beta_epsilon(np_boundary(rho, sigma), eps);
}

OneShotSolution q_s_c_solution(const NPBoundary& boundary, double s, double c) {
  if (s <= 0.0) throw DomainError("q_s_c: s must be > 0 (beta_epsilon serves s = 0)");
  if (c <= 0.0) throw DomainError("q_s_c: C must be > 0");
  const auto& path = boundary.path();
  auto g = [&](double alpha, double beta) { return alpha - c * std::pow(beta, s); };

  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& a = path[i];
    const auto& b = path[i + 1];
    const double ga = g(a.alpha, a.beta);
    const double gb = g(b.alpha, b.beta);
    if (ga > 0.0) break;  // g is increasing along the path; no root ahead
    if (gb < 0.0) continue;
    if (ga == 0.0) return {a.beta, a};
    double lo = 0.0, hi = 1.0;
    auto at = [&](double t) {
      return std::pair<double, double>{a.alpha + t * (b.alpha - a.alpha),
                                       a.beta + t * (b.beta - a.beta)};
    };
    while (hi - lo > 1e-12) {
      const double mid = (lo + hi) / 2.0;
      auto [al, be] = at(mid);
      if (g(al, be) < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    const double t = (lo + hi) / 2.0;
    auto [al, be] = at(t);
    ErrorPoint opt{al, be, segment_mu(a, b), t};
    return {be, opt};
  }
  // g >= 0 already at the start of the path: the (0, 1 - side) corner itself
  // is feasible only when beta can be driven to the first vertex directly.
  const auto& front = path.front();
  return {front.beta, front};
}

double q_s_c(const NPBoundary& boundary, double s, double c) {
  return q_s_c_solution(boundary, s, c).beta;
}

double q_s_c(const DensityMatrix& rho, const DensityMatrix& sigma, double s, double c) {
  return q_s_c(np_boundary(rho, sigma), s, c);
}

double q_min(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return q_s_c(rho, sigma, 1.0, 1.0);
}

double p_err_bayes(const NPBoundary& boundary, double p) {
  if (p <= 0.0 || p >= 1.0) throw DomainError("p_err_bayes: p must lie in (0, 1)");
  double best = kInf;
  for (const auto& v : boundary.path())
    best = std::min(best, p * v.alpha + (1.0 - p) * v.beta);
  return best;
}

double p_err_bayes(double p, const DensityMatrix& rho, const DensityMatrix& sigma) {
  return p_err_bayes(np_boundary(rho, sigma), p);
}

double p_err_s_c(const NPBoundary& boundary, double s, double c) {
  if (s <= 0.0) throw DomainError("p_err_s_c: s must be > 0");
  if (c <= 0.0) throw DomainError("p_err_s_c: C must be > 0");
  const auto& path = boundary.path();
  const double inv_s = 1.0 / s;
  auto h = [&](double alpha, double beta) { return std::pow(alpha, inv_s) + c * beta; };

  double best = kInf;
  for (const auto& v : path) best = std::min(best, h(v.alpha, v.beta));

  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& a = path[i];
    const auto& b = path[i + 1];
    const double da = b.alpha - a.alpha;
    const double db = b.beta - a.beta;
    if (da <= kSnapTol || -db <= kSnapTol) continue;  // extreme faces: endpoints suffice
    if (s < 1.0) {
      // h is convex along the segment; closed-form stationary point.
      const double m = db / da;
      const double alpha_star = std::pow(-s * c * m, s / (1.0 - s));
      if (alpha_star > a.alpha && alpha_star < b.alpha) {
        const double beta_star = a.beta + (alpha_star - a.alpha) * m;
        best = std::min(best, h(alpha_star, beta_star));
      }
    } else if (s > 1.0) {
      const auto r = detail::maximize_1d(
          [&](double t) { return -h(a.alpha + t * da, a.beta + t * db); }, 0.0, 1.0, 65, 1e-10);
      best = std::min(best, -r.value);
    }
  }
  return best;
}

double p_err_s_c(const DensityMatrix& rho, const DensityMatrix& sigma, double s, double c) {
  return p_err_s_c(np_boundary(rho, sigma), s, c);
}

}  // namespace sdiv
