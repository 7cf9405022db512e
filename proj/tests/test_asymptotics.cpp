#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sdiv/asymptotics.hpp"
#include "sdiv/states.hpp"

using namespace sdiv;

namespace {
const ClassicalPair kPair({0.9, 0.1}, {0.5, 0.5});
}

TEST_CASE("classical trace reproduces the small-n oracle values") {
  const ExponentTrace tr = classical_exponent_trace(kPair, 1.0, 1.0, {1, 2});
  REQUIRE(tr.points.size() == 2);
  CHECK(tr.points[0].n == 1);
  CHECK(tr.points[0].log_q == doctest::Approx(std::log(5.0 / 14.0)).epsilon(1e-10));
  CHECK(tr.points[1].log_q == doctest::Approx(std::log(25.0 / 106.0)).epsilon(1e-10));
  CHECK(tr.points[1].exponent ==
        doctest::Approx(-std::log(25.0 / 106.0) / 2.0).epsilon(1e-10));
  CHECK(tr.target.value() == doctest::Approx(0.11237744635283689).epsilon(1e-8));
}

TEST_CASE("quantum trace agrees with the type-class oracle on diagonal pairs") {
  const ExponentTrace qt =
      quantum_exponent_trace(kPair.rho_diag(), kPair.sigma_diag(), 1.0, 1.0, 3);
  REQUIRE(qt.points.size() == 3);
  for (const TracePoint& pt : qt.points) {
    const double oracle = iid_type_log_q_s(kPair, pt.n, 1.0, 1.0);
    CHECK(pt.log_q == doctest::Approx(oracle).epsilon(1e-8));
  }
  CHECK_THROWS_AS(quantum_exponent_trace(kPair.rho_diag(), kPair.sigma_diag(), 1.0, 1.0, 9),
                  DomainError);
}

TEST_CASE("shared-boundary multi-s traces match the single-s path") {
  const DensityMatrix rho = random_state(2, 2, 4000);
  const DensityMatrix sigma = random_state(2, 2, 4001);
  const auto traces = quantum_exponent_traces(rho, sigma, {0.5, 1.0}, 1.0, 2);
  REQUIRE(traces.size() == 2);
  const ExponentTrace single = quantum_exponent_trace(rho, sigma, 0.5, 1.0, 2);
  for (std::size_t i = 0; i < single.points.size(); ++i)
    CHECK(traces[0].points[i].log_q == doctest::Approx(single.points[i].log_q).epsilon(1e-12));
}

TEST_CASE("figure one data") {
  const Fig1Data data =
      fig1_data(kPair.rho_diag(), kPair.sigma_diag(), 0.5, {0.05, 0.1, 0.2, 0.3});
  REQUIRE(data.rows.size() == 4);
  CHECK(data.rows[3].b.value() ==
        doctest::Approx(0.0057318331927186175).epsilon(1e-6));  // B(0.3)
  CHECK(data.chernoff_intersection == doctest::Approx(0.11237744635283689).epsilon(1e-5));
  CHECK(data.xi_s_intersection == doctest::Approx(0.14975289196131183).epsilon(1e-5));
  std::ostringstream os;
  write_fig1_csv(os, data);
  CHECK(os.str().rfind("r,B,line1,line_s\n", 0) == 0);
  CHECK_THROWS_AS(fig1_data(kPair.rho_diag(), kPair.rho_diag(), 0.5, {0.1}),
                  DegenerateInputError);
}

TEST_CASE("figure two data") {
  const auto rows =
      fig2_data(kPair.rho_diag(), kPair.sigma_diag(), {0.25, 0.5, 1.0, 2.0, 4.0});
  REQUIRE(rows.size() >= 5);
  CHECK(rows.front().label == "D");
  CHECK(rows.front().xi.value() == doctest::Approx(0.36806420716849714).epsilon(1e-10));
  bool saw_xi = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i - 1].xi.as_double() >= rows[i].xi.as_double() - 1e-9);
    if (rows[i].label == "xi") {
      saw_xi = true;
      CHECK(rows[i].s == 1.0);
      CHECK(rows[i].xi.value() == doctest::Approx(0.11237744635283689).epsilon(1e-8));
    }
  }
  CHECK(saw_xi);
  std::ostringstream os;
  write_fig2_csv(os, rows);
  CHECK(os.str().rfind("s,xi_s,label\n", 0) == 0);
}

TEST_CASE("trace CSV format") {
  const ExponentTrace tr = classical_exponent_trace(kPair, 1.0, 1.0, {1});
  std::ostringstream os;
  write_trace_csv(os, tr);
  CHECK(os.str().rfind("n,logQ,exponent,target\n", 0) == 0);
}
