#pragma once

// Scalar equations behind the density bounds for n^2 + b:
//
//   sigma:  2 - s - 2 log(2 - s) = 5/4          upper bound 2 sigma - 3/2
//   theta:  2 (2 - t) - 2 log(t - 1) = 1        lower bound 2 theta - 3
//   alpha < beta:  int_a^b 2/(t-1) dt = log 2,  int_a^b 2t/(t-1) dt = 1
//
// Every root is found twice (bracketed bisection and an independent second
// route) so the two can be compared.

#include <functional>
#include <vector>

namespace qfl {

struct ScalarRoot {
  double value = 0.0;      // the reported root (Newton-polished)
  double bisection = 0.0;  // independent bracketed root
  double residual = 0.0;   // defining equation evaluated at value
};

/// Root of 2 - s - 2 log(2 - s) = 5/4 on (1, 2).
ScalarRoot solve_sigma();

struct ThetaSolution {
  double value = 0.0;  // limit of the fixed-point iteration
  double bisection = 0.0;
  double residual = 0.0;
  std::vector<double> iterates;  // a_1 = 2, a_2, ...
};

/// Fixed-point iteration a_{k+1} = (3/2 + a_k - log(a_k - 1)) / 2 from a_1 = 2,
/// stopped once successive iterates differ by less than 1e-13.
/// Throws NonConvergence after 200 steps.
ThetaSolution solve_theta();

struct DensityBounds {
  double lower = 0.0;  // 2 theta - 3
  double upper = 0.0;  // 2 sigma - 3/2
  bool lower_exceeds_0_5324 = false;
  bool upper_below_0_905 = false;
};

DensityBounds bounds();

struct AlphaBeta {
  double alpha = 0.0;
  double beta = 0.0;
  double alpha_closed_form = 0.0;  // 1 + (1 - log 2) / (2 (sqrt 2 - 1))
  double beta_closed_form = 0.0;   // 1 + (1 - log 2) / (2 - sqrt 2)
  double residual_log2 = 0.0;      // int 2/(t-1) - log 2
  double residual_one = 0.0;       // int 2t/(t-1) - 1
};

/// Solves the two integral conditions by 2-D Newton on their closed forms.
AlphaBeta solve_alpha_beta();

struct ConjecturalSigma {
  double value = 0.0;           // 1 / log 2
  double printed = 1.4416;      // the digits given in the source derivation
  double discrepancy = 0.0;     // value - printed
};

ConjecturalSigma conjectural_sigma();

/// Adaptive Simpson quadrature to absolute tolerance `tol`.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-10);

}  // namespace qfl
