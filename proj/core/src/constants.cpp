#include "qfl/constants.hpp"

#include <cmath>
#include <numbers>

#include "qfl/error.hpp"

namespace qfl {

namespace {

using std::numbers::ln2;
using std::numbers::sqrt2;

double sigma_equation(double s) { return 2.0 - s - 2.0 * std::log(2.0 - s) - 1.25; }
double sigma_derivative(double s) { return -1.0 + 2.0 / (2.0 - s); }

double theta_equation(double t) { return 2.0 * (2.0 - t) - 2.0 * std::log(t - 1.0) - 1.0; }

// Bisection on a sign change over [lo, hi], run until the bracket stops shrinking.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double newton(const std::function<double(double)>& f, const std::function<double(double)>& df, double x) {
  for (int i = 0; i < 100; ++i) {
    const double step = f(x) / df(x);
    x -= step;
    if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, tol, 50);
}

ScalarRoot solve_sigma() {
  ScalarRoot r;
  r.bisection = bisect(sigma_equation, 1.0, 2.0 - 1e-12);
  r.value = newton(sigma_equation, sigma_derivative, 1.2);
  r.residual = sigma_equation(r.value);
  return r;
}

ThetaSolution solve_theta() {
  ThetaSolution s;
  double a = 2.0;
  s.iterates.push_back(a);
  for (int k = 0;; ++k) {
    if (k >= 200) throw Error(ErrorCode::NonConvergence, "theta iteration did not settle in 200 steps");
    const double next = 0.5 * (1.5 + a - std::log(a - 1.0));
    s.iterates.push_back(next);
    const bool done = std::abs(next - a) < 1e-13;
    a = next;
    if (done) break;
  }
  s.value = a;
  s.bisection = bisect(theta_equation, 1.5, 2.0);
  s.residual = theta_equation(s.value);
  return s;
}

DensityBounds bounds() {
  DensityBounds b;
  b.lower = 2.0 * solve_theta().value - 3.0;
  b.upper = 2.0 * solve_sigma().value - 1.5;
  b.lower_exceeds_0_5324 = b.lower > 0.5324;
  b.upper_below_0_905 = b.upper < 0.905;
  return b;
}

AlphaBeta solve_alpha_beta() {
  // F1 = 2 log((b-1)/(a-1)) - log 2,  F2 = 2 (b - a) + 2 log((b-1)/(a-1)) - 1.
  double a = 1.35, b = 1.5;
  for (int i = 0; i < 100; ++i) {
    const double l = std::log((b - 1.0) / (a - 1.0));
    const double f1 = 2.0 * l - ln2;
    const double f2 = 2.0 * (b - a) + 2.0 * l - 1.0;
    const double j11 = -2.0 / (a - 1.0), j12 = 2.0 / (b - 1.0);
    const double j21 = -2.0 + j11, j22 = 2.0 + j12;
    const double det = j11 * j22 - j12 * j21;
    const double da = (f1 * j22 - f2 * j12) / det;
    const double db = (j11 * f2 - j21 * f1) / det;
    a -= da;
    b -= db;
    if (std::abs(da) + std::abs(db) < 1e-16) break;
  }
  AlphaBeta r;
  r.alpha = a;
  r.beta = b;
  r.alpha_closed_form = 1.0 + (1.0 - ln2) / (2.0 * (sqrt2 - 1.0));
  r.beta_closed_form = 1.0 + (1.0 - ln2) / (2.0 - sqrt2);
  const double l = std::log((b - 1.0) / (a - 1.0));
  r.residual_log2 = 2.0 * l - ln2;
  r.residual_one = 2.0 * (b - a) + 2.0 * l - 1.0;
  return r;
}

ConjecturalSigma conjectural_sigma() {
  ConjecturalSigma c;
  c.value = 1.0 / ln2;
  c.discrepancy = c.value - c.printed;
  return c;
}

}  // namespace qfl
