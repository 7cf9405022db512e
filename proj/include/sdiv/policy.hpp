#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sdiv {

// Thrown when an input fails a structural invariant (Hermiticity, PSD, trace).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a parameter is outside the operation's domain.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a request exceeds configured resource limits.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown for inputs the solver rejects as degenerate (e.g. equal states).
class DegenerateInputError : public std::runtime_error {
 public:
  explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

// All numeric tolerances and solver knobs in one record. Values are defaults;
// callers may pass a modified copy at construction time.
struct NumericPolicy {
  double hermitian_tol = 1e-10;   // max-entry deviation |H - H^dag|
  double psd_tol = 1e-10;         // eigenvalues allowed down to -psd_tol
  double trace_tol = 1e-10;       // |trace - 1|
  double frac_power_neg_tol = 1e-8;  // reject eigenvalues below -this
  double support_clip = 1e-12;    // eigenvalues <= this count as zero
  double eig_recon_tol = 1e-9;    // relative reconstruction error cap

  int grid_points = 1025;         // uniform alpha grid for sup/inf
  double refine_tol = 1e-10;      // golden-section |delta alpha|
  double hoeffding_alpha_min = 1e-6;

  double mu_point_tol = 1e-11;    // (alpha,beta) equality during mu sweep
  double mu_bisect_rel_tol = 1e-12;
  int mu_grid_points = 64;
  int max_boundary_vertices = 10000;
  double boundary_sag_tol = 1e-9;  // chord-sagitta resolution of smooth arcs

  double arc_bisect_tol = 1e-12;  // parameter tolerance on hull segments
  double g_value_tol = 1e-10;

  double fixed_point_tol = 1e-9;
  double equal_state_tol = 1e-9;  // max-entry distance treated as rho == sigma

  int tensor_cap = 4096;          // largest allowed dim after tensor_power

  static const NumericPolicy& defaults();
  // Defaults with SDIV_* environment overrides applied.
  static NumericPolicy from_env();
};

// A real number extended with a +infinity marker. Infinity is always tagged,
// never produced by floating-point overflow.
class ExtendedReal {
 public:
  ExtendedReal() : value_(0.0), infinite_(false) {}
  /*implicit*/ ExtendedReal(double v) : value_(v), infinite_(false) {
    if (!std::isfinite(v)) throw DomainError("ExtendedReal: non-finite value; use infinity()");
  }
  static ExtendedReal infinity() {
    ExtendedReal x;
    x.infinite_ = true;
    return x;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  double value() const {
    if (infinite_) throw DomainError("ExtendedReal: value() on infinity");
    return value_;
  }
  // Finite value, or +inf as a double (for comparisons and printing).
  double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }
  std::string str() const;

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  double value_;
  bool infinite_;
};

}  // namespace sdiv
