#include "sdiv/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace sdiv {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

double logaddexp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

}  // namespace

ClassicalPair::ClassicalPair(std::vector<double> p_in, std::vector<double> q_in)
    : p(std::move(p_in)), q(std::move(q_in)) {
  if (p.size() != q.size() || p.empty())
    throw ValidationError("ClassicalPair: vectors must be non-empty and of equal length");
  for (const auto& vec : {p, q}) {
    double sum = 0.0;
    for (double x : vec) {
      if (!(x >= 0.0)) throw ValidationError("ClassicalPair: negative entry");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw ValidationError("ClassicalPair: entries do not sum to 1");
  }
}

DensityMatrix ClassicalPair::rho_diag() const {
  CMat m = CMat::Zero(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = p[i];
  return DensityMatrix(m);
}

DensityMatrix ClassicalPair::sigma_diag() const {
  CMat m = CMat::Zero(q.size(), q.size());
  for (std::size_t i = 0; i < q.size(); ++i) m(i, i) = q[i];
  return DensityMatrix(m);
}

NPBoundary classical_boundary(const ClassicalPair& pair) {
  struct Atom {
    double p, q, ratio;
  };
  // Merge likelihood-ratio ties so each hull facet is a single atom.
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const double p = pair.p[i], q = pair.q[i];
    if (p <= 0.0 && q <= 0.0) continue;
    const double ratio = q > 0.0 ? p / q : kInf;
    bool merged = false;
    for (auto& a : atoms) {
      const bool same = (a.ratio == kInf && ratio == kInf) ||
                        (a.ratio != kInf && ratio != kInf && std::abs(a.ratio - ratio) <= 1e-14);
      if (same) {
        a.p += p;
        a.q += q;
        merged = true;
        break;
      }
    }
    if (!merged) atoms.push_back({p, q, ratio});
  }
  // Drop atoms in ascending ratio order: steepest hull facet first.
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.ratio < b.ratio; });

  std::vector<ErrorPoint> vertices;
  double alpha = 0.0, beta = 1.0;
  double prev_ratio = 0.0;
  auto vertex_mu = [&](double lo, double hi) {
    if (hi == kInf) return lo > 0.0 ? 2.0 * lo + 1.0 : 1.0;
    return (lo + hi) / 2.0;
  };
  for (std::size_t k = 0; k <= atoms.size(); ++k) {
    const double next_ratio = k < atoms.size() ? atoms[k].ratio : kInf;
    vertices.push_back(ErrorPoint{alpha, beta, vertex_mu(prev_ratio, next_ratio), 0.0});
    if (k < atoms.size()) {
      alpha += atoms[k].p;
      beta -= atoms[k].q;
      prev_ratio = next_ratio;
    }
  }
  return NPBoundary(std::move(vertices));
}

double classical_q_s(const ClassicalPair& pair, double s, double c) {
  if (s <= 0.0) throw DomainError("classical_q_s: s must be > 0");
  if (c <= 0.0) throw DomainError("classical_q_s: C must be > 0");
  const NPBoundary boundary = classical_boundary(pair);
  const auto& path = boundary.path();
  auto g = [&](double alpha, double beta) { return alpha - c * std::pow(beta, s); };
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& a = path[i];
    const auto& b = path[i + 1];
    if (g(a.alpha, a.beta) > 0.0) break;
    if (g(b.alpha, b.beta) < 0.0) continue;
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double t = (lo + hi) / 2.0;
      const double alpha = a.alpha + t * (b.alpha - a.alpha);
      const double beta = a.beta + t * (b.beta - a.beta);
      if (g(alpha, beta) < 0.0)
        lo = t;
      else
        hi = t;
    }
    const double t = (lo + hi) / 2.0;
    return a.beta + t * (b.beta - a.beta);
  }
  return path.back().beta;
}

double iid_type_log_q_s(const ClassicalPair& pair, long n, double s, double c) {
  if (pair.size() != 2) throw DomainError("iid_type_log_q_s: pair must be binary");
  if (n < 1 || n > 100000) throw DomainError("iid_type_log_q_s: n outside [1, 1e5]");
  if (s <= 0.0 || c <= 0.0) throw DomainError("iid_type_log_q_s: s and C must be > 0");

  const double lp1 = std::log(pair.p[0]), lp2 = std::log(pair.p[1]);
  const double lq1 = std::log(pair.q[0]), lq2 = std::log(pair.q[1]);

  // Type class j = count of symbol 1; log weights via log-binomials.
  std::vector<double> lp(n + 1), lq(n + 1);
  for (long j = 0; j <= n; ++j) {
    const double lc = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0);
    lp[j] = lc + j * lp1 + (n - j) * lp2;
    lq[j] = lc + j * lq1 + (n - j) * lq2;
  }
  // Drop order: ascending likelihood ratio; the log-ratio is linear in j.
  std::vector<long> order(n + 1);
  std::iota(order.begin(), order.end(), 0L);
  std::sort(order.begin(), order.end(),
            [&](long a, long b) { return lp[a] - lq[a] < lp[b] - lq[b]; });

  // la[k]: log alpha after dropping the first k atoms; lb[k]: log beta before.
  std::vector<double> la(n + 2, -kInf), lb(n + 2, -kInf);
  for (long k = 0; k <= n; ++k) la[k + 1] = logaddexp(la[k], lp[order[k]]);
  for (long k = n; k >= 0; --k) lb[k] = logaddexp(lb[k + 1], lq[order[k]]);

  const double lc_target = std::log(c);
  auto g = [&](double log_alpha, double log_beta) {
    if (log_beta == -kInf) return log_alpha == -kInf ? 0.0 : kInf;
    return log_alpha - s * log_beta - lc_target;
  };
  for (long k = 0; k <= n; ++k) {
    if (g(la[k], lb[k]) > 0.0) break;
    if (g(la[k + 1], lb[k + 1]) < 0.0) continue;
    // Randomize atom order[k] with weight t; solve g(t) = 0 in the log domain.
    const double lpk = lp[order[k]], lqk = lq[order[k]];
    auto log_beta_at = [&](double t) {
      return t < 1.0 ? logaddexp(lb[k + 1], lqk + std::log1p(-t)) : lb[k + 1];
    };
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
      const double t = (lo + hi) / 2.0;
      const double lat = t > 0.0 ? logaddexp(la[k], lpk + std::log(t)) : la[k];
      if (g(lat, log_beta_at(t)) < 0.0)
        lo = t;
      else
        hi = t;
    }
    return log_beta_at((lo + hi) / 2.0);
  }
  return lb[n + 1];
}

double random_test_search(const DensityMatrix& rho, const DensityMatrix& sigma, double s,
                          double c, int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("random_test_search: trials must be >= 1");
  if (s <= 0.0 || c <= 0.0) throw DomainError("random_test_search: s and C must be > 0");
  const Eigen::Index d = rho.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double best = q_s_c(rho, sigma, s, c);  // the boundary optimum is always included
  for (int t = 0; t < trials; ++t) {
    CMat g(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index col = 0; col < d; ++col)
        g(r, col) = std::complex<double>(gauss(rng), gauss(rng));
    Eigen::SelfAdjointEigenSolver<CMat> solver((g + g.adjoint()) / 2.0);
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    RVec mapped(d);
    for (Eigen::Index i = 0; i < d; ++i)
      mapped(i) = hi > lo ? (solver.eigenvalues()(i) - lo) / (hi - lo) : 0.5;
    const CMat lam =
        solver.eigenvectors() * mapped.asDiagonal() * solver.eigenvectors().adjoint();
    const double alpha = std::clamp(1.0 - (lam * rho.matrix()).trace().real(), 0.0, 1.0);
    const double beta = std::clamp((lam * sigma.matrix()).trace().real(), 0.0, 1.0);
    if (alpha <= c * std::pow(beta, s) + 1e-12) best = std::min(best, beta);
  }
  return best;
}

double helstrom_check(double p, const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (p <= 0.0 || p >= 1.0) throw DomainError("helstrom_check: p must lie in (0, 1)");
  return p - positive_part_trace(p * rho.matrix() - (1.0 - p) * sigma.matrix());
}

}  // namespace sdiv
