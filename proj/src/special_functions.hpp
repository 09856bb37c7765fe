#pragma once

#include <complex>

#include "errors.hpp"

namespace metasir {

using Complex = std::complex<double>;

namespace sf {

/// Principal branch of log Gamma. Accurate to ~1e-13 relative for |z| <= 1e4.
/// Raises errc::pole when z is within 1e-12 of a nonpositive integer.
Complex log_gamma(Complex z);

/// Generalized binomial coefficient b(b-1)...(b-k+1)/k!, computed by the
/// product form so nonpositive-integer b terminates exactly.
Complex binom(Complex b, unsigned k);

/// Gauss hypergeometric 2F1(a,b;c;z) for real b, c and z < 1.
/// Negative z is mapped into [0,1) through the Pfaff transformation before
/// summing; the untransformed alternating series is never used.
Complex gauss_2f1(Complex a, double b, double c, double z);

/// D_b(p,delta): the interference series sum_{k>=1} binom(b,k) binom(delta-1,k-1) p^k.
/// p = 1 uses the Gamma closed form Gamma(b+delta)/(Gamma(b) Gamma(1+delta)),
/// undefined when b or b+delta is a nonpositive integer. Large-|Im b| arguments
/// are routed through an integral representation; the direct series cancels
/// catastrophically there.
Complex d_b(Complex b, double p, double delta);
double d_b_real(double b, double p, double delta);

/// exp(w) - 1 without cancellation for small |w|.
Complex cexpm1(Complex w);

/// Gamma(1-delta) * Gamma(1+delta) = pi*delta / sin(pi*delta)
double gamma_symmetric_product(double delta);

/// sin(pi*delta) / (pi*delta)
double sinc(double delta);

}  // namespace sf
}  // namespace metasir
