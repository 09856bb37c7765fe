#pragma once

#include "special_functions.hpp"

namespace metasir::cellular {

/// Downlink with nearest-BS association. Every statistic here is free of the
/// BS and user densities; only the path-loss exponent and the independent
/// per-slot activity probability of interfering BSs enter.
struct Params {
    double alpha;       // > 2
    double activity_p;  // in (0, 1]

    explicit Params(double alpha_, double activity_p_ = 1.0);

    double delta() const { return 2.0 / alpha; }
};

/// M_b for always-active BSs: 1 / 2F1(b,-delta;1-delta;-theta) for real b
/// (evaluated through the transformed series), adaptive quadrature of the
/// relative-distance integral for complex b.
Complex moment(const Params& params, double theta, Complex b);
double moment_real(const Params& params, double theta, double b);

/// M_b with interfering BSs active independently with probability p,
/// through 1/(1 + 2 int_0^1 (1 - (1 - p theta r^alpha/(1+theta r^alpha))^b) r^-3 dr).
/// Reduces to moment() when p = 1.
Complex moment_with_activity(const Params& params, double theta, Complex b);

/// M2 - M1^2 at the model's activity probability.
double variance(const Params& params, double theta);

/// (1-delta)/(1-delta(1+theta)) below the phase transition theta < 1/delta - 1
/// (with activity p < 1 the transition moves to p_c); +infinity beyond it.
double mean_local_delay(const Params& params, double theta);

/// Critical activity probability for finite mean local delay: 1 when
/// theta < 1/delta - 1, otherwise the root of
/// g(p) = 1 - p theta (delta/(1-delta)) 2F1(1,1-delta;2-delta;-theta(1-p)).
double critical_activity(const Params& params, double theta);

/// Conjectured bracket for critical_activity above the transition:
/// [((delta/(1-delta)) theta)^{-delta}/2, ((delta/(1-delta)) theta)^{-delta}].
struct Bracket {
    double lower, upper;
};
Bracket critical_activity_bracket(const Params& params, double theta);

/// Small-p limit of the success probability at fixed t = p theta^delta:
/// sinc(delta) / (t + sinc(delta)).
double asymptotic_success(double delta, double t);

/// Small-p limit of var P_s along a constant target-success contour:
/// p_t/(2-p_t) - p_t^2.
double asymptotic_variance(double p_target);

}  // namespace metasir::cellular
