#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sdiv/divergences.hpp"
#include "sdiv/matrix_core.hpp"
#include "sdiv/oracles.hpp"

namespace sdiv {

struct TracePoint {
  long n = 0;
  double log_q = 0.0;    // <= 0
  double exponent = 0.0;  // -log_q / n, never below 0
};

// Finite-n exponent samples of -log Q_C^(s)(rho^x n || sigma^x n) / n together
// with the asymptotic target xi_s.
struct ExponentTrace {
  double s = 0.0;
  double c = 0.0;
  std::vector<TracePoint> points;
  ExtendedReal target;
};

// Exact one-shot values on tensor powers n = 1..n_max (n_max <= 8 for qubits).
ExponentTrace quantum_exponent_trace(const DensityMatrix& rho, const DensityMatrix& sigma,
                                     double s, double c, int n_max);
// Same, sharing the boundary construction across several s values.
std::vector<ExponentTrace> quantum_exponent_traces(const DensityMatrix& rho,
                                                   const DensityMatrix& sigma,
                                                   const std::vector<double>& s_list, double c,
                                                   int n_max);

// Type-class values for a binary classical pair, arbitrary n in log domain.
ExponentTrace classical_exponent_trace(const ClassicalPair& pair, double s, double c,
                                       const std::vector<long>& n_list);

// Hoeffding-bound curve data: columns r, B(r), r (slope-1 line), s*r, plus the
// intersection abscissas of B with the two lines.
struct Fig1Row {
  double r = 0.0;
  ExtendedReal b;
  double line1 = 0.0;
  double line_s = 0.0;
};
struct Fig1Data {
  std::vector<Fig1Row> rows;
  double chernoff_intersection = 0.0;  // root of B(r) = r
  double xi_s_intersection = 0.0;      // root of B(r) = s r
};
Fig1Data fig1_data(const DensityMatrix& rho, const DensityMatrix& sigma, double s,
                   const std::vector<double>& r_grid);

// xi_s curve data with labeled endpoint rows for s -> 0 (D) and s = 1 (xi).
struct Fig2Row {
  double s = 0.0;
  ExtendedReal xi;
  std::string label;
};
std::vector<Fig2Row> fig2_data(const DensityMatrix& rho, const DensityMatrix& sigma,
                               const std::vector<double>& s_grid);

// CSV emitters matching the formats above.
void write_trace_csv(std::ostream& os, const ExponentTrace& trace);
void write_fig1_csv(std::ostream& os, const Fig1Data& data);
void write_fig2_csv(std::ostream& os, const std::vector<Fig2Row>& rows);

}  // namespace sdiv
