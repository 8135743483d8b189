#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace breather::rootfind {

// Newton iteration safeguarded by a maintained bracket [lo, hi].
// fdf(x) returns {f(x), f'(x)}; f(lo) and f(hi) must have opposite signs
// (or be zero). Converges to |step| <= rel_tol*|x| + abs_tol.
template <class FDF>
double newton_bisect(FDF&& fdf, double lo, double hi, double rel_tol = 1e-13,
                     double abs_tol = 0.0, int max_iter = 200) {
  auto [flo, dflo] = fdf(lo);
  if (flo == 0.0) return lo;
  auto [fhi, dfhi] = fdf(hi);
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) throw std::invalid_argument("newton_bisect: root not bracketed");

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    auto [f, df] = fdf(x);
    if (f == 0.0) return x;
    if ((f > 0) == (fhi > 0)) {
      hi = x;
      fhi = f;
    } else {
      lo = x;
      flo = f;
    }
    double step = (df != 0.0) ? f / df : 0.0;
    double xn = x - step;
    if (!(xn > std::min(lo, hi) && xn < std::max(lo, hi)) || df == 0.0) {
      xn = 0.5 * (lo + hi);
      step = xn - x;
    }
    if (std::abs(step) <= rel_tol * std::abs(xn) + abs_tol) return xn;
    x = xn;
  }
  return x;
}

// Brent's method; f(lo), f(hi) must have opposite signs (or be zero).
template <class F>
double brent(F&& f, double lo, double hi, double rel_tol = 1e-13, double abs_tol = 0.0,
             int max_iter = 400) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0)) throw std::invalid_argument("brent: root not bracketed");
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    double tol = 2.0 * rel_tol * std::abs(b) + 0.5 * abs_tol;
    double m = 0.5 * (c - b);
    if (fb == 0.0 || std::abs(m) <= tol) return b;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = e = m;  // bisection
    } else {
      double s = fb / fa, pp, qq;
      if (a == c) {
        pp = 2.0 * m * s;
        qq = 1.0 - s;
      } else {
        double r = fb / fc, t = fa / fc;
        pp = s * (2.0 * m * t * (t - r) - (b - a) * (r - 1.0));
        qq = (t - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (pp > 0) qq = -qq; else pp = -pp;
      if (2.0 * pp < std::min(3.0 * m * qq - std::abs(tol * qq), std::abs(e * qq))) {
        e = d;
        d = pp / qq;
      } else {
        d = e = m;
      }
    }
    a = b; fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0 ? tol : -tol);
    fb = f(b);
    if ((fb > 0) == (fc > 0)) {
      c = a; fc = fa;
      d = e = b - a;
    }
  }
  return b;
}

}  // namespace breather::rootfind
