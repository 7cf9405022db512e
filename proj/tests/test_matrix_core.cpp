#include <doctest.h>

#include <nlohmann/json.hpp>

#include "sdiv/matrix_core.hpp"
#include "sdiv/states.hpp"

using namespace sdiv;

namespace {
DensityMatrix diag2(double a, double b) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return DensityMatrix(m);
}
}  // namespace

TEST_CASE("hermiticity defect and validation") {
  CMat m = CMat::Zero(2, 2);
  m(0, 1) = std::complex<double>(0.0, 1.0);
  m(1, 0) = std::complex<double>(0.0, 1.0);  // not Hermitian
  CHECK(hermiticity_defect(m) == doctest::Approx(2.0));
  m(1, 0) = std::complex<double>(0.0, -1.0);
  CHECK(hermiticity_defect(m) == doctest::Approx(0.0));
}

TEST_CASE("DensityMatrix rejects bad inputs") {
  CMat m = CMat::Identity(2, 2);  // trace 2
  CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;  // negative eigenvalue
  CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);
  CMat bad = CMat::Zero(2, 2);
  bad(0, 1) = 1.0;  // badly non-Hermitian
  bad(0, 0) = 1.0;
  CHECK_THROWS_AS(DensityMatrix{bad}, ValidationError);
}

TEST_CASE("TestOperator spectrum window") {
  CHECK_NOTHROW(TestOperator(CMat::Identity(3, 3)));
  CHECK_NOTHROW(TestOperator::zero(3));
  CMat m = 1.5 * CMat::Identity(2, 2);
  CHECK_THROWS_AS(TestOperator{m}, ValidationError);
}

TEST_CASE("fractional powers and support projector") {
  const DensityMatrix rho = random_state(4, 3, 7);
  const CMat pa = fractional_power(rho, 0.3);
  const CMat pb = fractional_power(rho, 0.7);
  CHECK((pa * pb).trace().real() == doctest::Approx(1.0).epsilon(1e-9));
  // rho^0 is the support projector
  const CMat p0 = fractional_power(rho, 0.0);
  CHECK((p0 - rho.support_projector()).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(rho.rank() == 3);
  CHECK((p0 * p0 - p0).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("tensor power multiplicativity") {
  const DensityMatrix rho = random_state(2, 2, 1);
  const DensityMatrix sigma = random_state(2, 2, 2);
  const double q1 = (fractional_power(rho, 0.4) * fractional_power(sigma, 0.6)).trace().real();
  for (int n = 2; n <= 4; ++n) {
    const DensityMatrix rn = tensor_power(rho, n);
    const DensityMatrix sn = tensor_power(sigma, n);
    const double qn = (fractional_power(rn, 0.4) * fractional_power(sn, 0.6)).trace().real();
    CHECK(qn == doctest::Approx(std::pow(q1, n)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(tensor_power(rho, 13), ResourceError);  // 2^13 > cap
}

TEST_CASE("positive part trace splits the absolute spectrum") {
  const DensityMatrix rho = random_state(3, 3, 3);
  const DensityMatrix sigma = random_state(3, 3, 4);
  const CMat a = rho.matrix() - 0.7 * sigma.matrix();
  const EigenSystem es = hermitian_eigensystem(a);
  double abs_sum = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i)
    abs_sum += std::abs(es.eigenvalues(i));
  CHECK(positive_part_trace(a) + positive_part_trace(-a) ==
        doctest::Approx(abs_sum).epsilon(1e-9));
}

TEST_CASE("JSON round trip is bit-identical") {
  const DensityMatrix rho = random_state(3, 3, 11);
  const DensityMatrix back = state_from_json(state_to_json(rho));
  CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);
  nlohmann::json bad{{"dim", 2}, {"matrix", {{{1.0, 0.0}}}}};
  CHECK_THROWS_AS(state_from_json(bad), ValidationError);
}

TEST_CASE("state specs") {
  const DensityMatrix d = generate_state("diag:0.9,0.1", 0);
  CHECK(d.matrix()(0, 0).real() == doctest::Approx(0.9));
  const DensityMatrix p = generate_state("pure:1.0471975511965976", 0);  // theta = pi/3
  CHECK(p.rank() == 1);
  CHECK(p.matrix()(0, 0).real() == doctest::Approx(0.75));
  const DensityMatrix r1 = generate_state("random:3:2", 5);
  const DensityMatrix r2 = generate_state("random:3:2", 5);
  CHECK((r1.matrix() - r2.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(r1.rank() == 2);
  CHECK_THROWS_AS(generate_state("nonsense", 0), DomainError);
  CHECK_THROWS_AS(generate_state("diag:-1,2", 0), DomainError);
}

TEST_CASE("two trivial diagonal states sanity") {
  const DensityMatrix rho = diag2(0.9, 0.1);
  CHECK(rho.rank() == 2);
  CHECK(rho.eig().eigenvalues(0) == doctest::Approx(0.1));
}
