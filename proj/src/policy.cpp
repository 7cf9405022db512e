#include "sdiv/policy.hpp"

#include <cstdio>
#include <cstdlib>

namespace sdiv {

const NumericPolicy& NumericPolicy::defaults() {
  static const NumericPolicy p{};
  return p;
}

namespace {

void env_double(const char* name, double* out) {
  if (const char* v = std::getenv(name)) *out = std::strtod(v, nullptr);
}

void env_int(const char* name, int* out) {
  if (const char* v = std::getenv(name)) *out = static_cast<int>(std::strtol(v, nullptr, 10));
}

}  // namespace

NumericPolicy NumericPolicy::from_env() {
  NumericPolicy p;
  env_double("SDIV_HERMITIAN_TOL", &p.hermitian_tol);
  env_double("SDIV_PSD_TOL", &p.psd_tol);
  env_double("SDIV_TRACE_TOL", &p.trace_tol);
  env_double("SDIV_SUPPORT_CLIP", &p.support_clip);
  env_int("SDIV_GRID_POINTS", &p.grid_points);
  env_double("SDIV_REFINE_TOL", &p.refine_tol);
  env_int("SDIV_TENSOR_CAP", &p.tensor_cap);
  env_double("SDIV_FIXED_POINT_TOL", &p.fixed_point_tol);
  return p;
}

std::string ExtendedReal::str() const {
  if (infinite_) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value_);
  return buf;
}

}  // namespace sdiv
