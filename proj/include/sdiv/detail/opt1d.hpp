#pragma once

#include <cmath>
#include <functional>

namespace sdiv::detail {

struct MaxResult {
  double x = 0.0;
  double value = 0.0;
};

// Maximize f on [lo, hi]: uniform grid scan, then golden-section refinement
// inside the bracket around the best grid point until the bracket width is
// below x_tol.
inline MaxResult maximize_1d(const std::function<double(double)>& f, double lo, double hi,
                             int grid_points, double x_tol) {
  if (grid_points < 3) grid_points = 3;
  const double h = (hi - lo) / (grid_points - 1);
  int best = 0;
  double best_val = f(lo);
  double best_x = lo;
  for (int i = 1; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? hi : lo + i * h;
    const double v = f(x);
    if (v > best_val) {
      best_val = v;
      best_x = x;
      best = i;
    }
  }
  double a = (best == 0) ? lo : lo + (best - 1) * h;
  double b = (best == grid_points - 1) ? hi : lo + (best + 1) * h;

  static constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > x_tol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  MaxResult r{best_x, best_val};
  const double xm = (a + b) / 2;
  const double fm = f(xm);
  if (fm > r.value) r = {xm, fm};
  if (f1 > r.value) r = {x1, f1};
  if (f2 > r.value) r = {x2, f2};
  return r;
}

}  // namespace sdiv::detail
