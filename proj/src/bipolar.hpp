#pragma once

#include "special_functions.hpp"

namespace metasir::bipolar {

/// Transmitter PPP of the given intensity, each with a receiver at fixed
/// link distance; nodes transmit independently with probability tx_prob per
/// slot under Rayleigh fading and path-loss exponent alpha.
struct Params {
    double intensity;      // > 0, per unit area
    double link_distance;  // > 0
    double tx_prob;        // in (0, 1]
    double alpha;          // > 2

    Params(double intensity_, double link_distance_, double tx_prob_, double alpha_);

    double delta() const { return 2.0 / alpha; }
    double tx_density() const { return intensity * tx_prob; }
    /// intensity * pi * R^2 * Gamma(1-delta) * Gamma(1+delta), derived on demand.
    double coefficient() const;
    /// coefficient * theta^delta, the exponent scale shared by all moments.
    double exponent_scale(double theta) const;
};

/// M_b(theta) = exp(-C theta^delta D_b(p, delta)).
Complex moment(const Params& params, double theta, Complex b);
double moment_real(const Params& params, double theta, double b);

/// var P_s = M1^2 (M1^{p(delta-1)} - 1) for p < 1; M2 - M1^2 at p = 1.
double variance(const Params& params, double theta);

/// Mean number of attempts until first success. Finite for p < 1,
/// +infinity at p = 1 (the phase transition is a value, not an error).
double mean_local_delay(const Params& params, double theta);

struct MomentBracket {
    double lower;
    double upper;
};

/// Bounds on M_b at p = 1 for b > 0. The two closed-form bounds swap roles
/// at b = 1, where both collapse onto M1 exactly.
MomentBracket moment_bounds_p1(const Params& params, double theta, double b);

/// Constant s such that var P_s ~ s * p as p -> 0 with the transmitter
/// density lambda*p (hence M1) held fixed: -M1^2 log(M1) (1 - delta).
double asymptotic_variance_slope(const Params& params, double theta);

}  // namespace metasir::bipolar
