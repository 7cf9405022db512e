#include "sdiv/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "sdiv/oneshot.hpp"

namespace sdiv {

std::vector<ExponentTrace> quantum_exponent_traces(const DensityMatrix& rho,
                                                   const DensityMatrix& sigma,
                                                   const std::vector<double>& s_list, double c,
                                                   int n_max) {
  if (n_max < 1 || n_max > 8) throw DomainError("quantum_exponent_trace: n_max outside [1, 8]");
  const RenyiProfile profile(rho, sigma);
  std::vector<ExponentTrace> traces;
  for (double s : s_list) traces.push_back({s, c, {}, xi_s(profile, s)});

  for (int n = 1; n <= n_max; ++n) {
    DensityMatrix rho_n = tensor_power(rho, n);
    DensityMatrix sigma_n = tensor_power(sigma, n);
    if (n >= 4) {
      // large tensor powers only feed exponent estimates; a coarser boundary
      // keeps the dim-2^n eigendecomposition count manageable
      NumericPolicy coarse = rho.policy();
      coarse.boundary_sag_tol = std::max(coarse.boundary_sag_tol, 1e-6);
      rho_n = DensityMatrix(rho_n.matrix(), coarse);
      sigma_n = DensityMatrix(sigma_n.matrix(), coarse);
    }
    const NPBoundary boundary = np_boundary(rho_n, sigma_n);
    for (auto& trace : traces) {
      const double q = q_s_c(boundary, trace.s, c);
      const double log_q = q > 0.0 ? std::log(q) : -700.0;
      trace.points.push_back({n, log_q, std::max(0.0, -log_q / n)});
    }
  }
  return traces;
}

ExponentTrace quantum_exponent_trace(const DensityMatrix& rho, const DensityMatrix& sigma,
                                     double s, double c, int n_max) {
  return quantum_exponent_traces(rho, sigma, {s}, c, n_max).front();
}

ExponentTrace classical_exponent_trace(const ClassicalPair& pair, double s, double c,
                                       const std::vector<long>& n_list) {
  ExponentTrace trace{s, c, {}, xi_s(pair.rho_diag(), pair.sigma_diag(), s)};
  std::vector<long> ns = n_list;
  std::sort(ns.begin(), ns.end());
  for (long n : ns) {
    const double log_q = iid_type_log_q_s(pair, n, s, c);
    trace.points.push_back({n, log_q, std::max(0.0, -log_q / n)});
  }
  return trace;
}

Fig1Data fig1_data(const DensityMatrix& rho, const DensityMatrix& sigma, double s,
                   const std::vector<double>& r_grid) {
  const RenyiProfile profile(rho, sigma);
  const double dist = (rho.matrix() - sigma.matrix()).cwiseAbs().maxCoeff();
  if (dist <= profile.policy().equal_state_tol)
    throw DegenerateInputError("fig1_data: rho == sigma");
  if (profile.orthogonal_supports())
    throw DegenerateInputError("fig1_data: orthogonal supports");

  Fig1Data data;
  for (double r : r_grid) {
    Fig1Row row;
    row.r = r;
    row.b = r > 0.0 ? hoeffding_b(profile, r) : ExtendedReal::infinity();
    row.line1 = r;
    row.line_s = s * r;
    data.rows.push_back(row);
  }
  data.chernoff_intersection = solve_fixed_point(profile, 1.0).value();
  data.xi_s_intersection = solve_fixed_point(profile, s).value();
  return data;
}

std::vector<Fig2Row> fig2_data(const DensityMatrix& rho, const DensityMatrix& sigma,
                               const std::vector<double>& s_grid) {
  const RenyiProfile profile(rho, sigma);
  std::vector<Fig2Row> rows;
  rows.push_back({0.0, xi_s(profile, 0.0), "D"});
  std::vector<double> grid = s_grid;
  std::sort(grid.begin(), grid.end());
  for (double s : grid) {
    if (s <= 0.0) continue;
    Fig2Row row{s, xi_s(profile, s), ""};
    if (s == 1.0) row.label = "xi";
    rows.push_back(std::move(row));
  }
  if (std::find(grid.begin(), grid.end(), 1.0) == grid.end())
    rows.push_back({1.0, xi_s(profile, 1.0), "xi"});
  std::sort(rows.begin(), rows.end(), [](const Fig2Row& a, const Fig2Row& b) { return a.s < b.s; });
  return rows;
}

void write_trace_csv(std::ostream& os, const ExponentTrace& trace) {
  os << std::setprecision(12) << "n,logQ,exponent,target\n";
  for (const auto& pt : trace.points)
    os << pt.n << ',' << pt.log_q << ',' << pt.exponent << ',' << trace.target.str() << '\n';
}

void write_fig1_csv(std::ostream& os, const Fig1Data& data) {
  os << std::setprecision(12) << "r,B,line1,line_s\n";
  for (const auto& row : data.rows)
    os << row.r << ',' << row.b.str() << ',' << row.line1 << ',' << row.line_s << '\n';
}

void write_fig2_csv(std::ostream& os, const std::vector<Fig2Row>& rows) {
  os << std::setprecision(12) << "s,xi_s,label\n";
  for (const auto& row : rows) os << row.s << ',' << row.xi.str() << ',' << row.label << '\n';
}

}  // namespace sdiv
