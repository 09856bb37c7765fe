#pragma once

#include "errors.hpp"

namespace metasir::beta {

/// Beta distribution matched to a mean/second-moment pair; the first shape
/// is a = mu*beta/(1-mu), so the mean is exactly mu and the variance
/// mu(1-mu)^2/(beta+1-mu).
struct Fit {
    double mu;
    double beta_shape;
    double alpha_shape;
};

/// Requires M1^2 < M2 < M1 (a genuine (0,1) random variable).
Fit fit(double m1, double m2);

/// Regularized incomplete beta I_x(a,b) by continued fraction with the
/// symmetry split at x = (a+1)/(a+b+2).
double reg_inc_beta(double a, double b, double x);

double ccdf(const Fit& fit, double x);

/// k-th raw moment of the fit via log-gamma differences; requires k > -a.
double moment(const Fit& fit, double k);

}  // namespace metasir::beta
