#include "bipolar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metasir::bipolar {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void check_theta(double theta)
{
    if (!(theta >= 0.0) || !std::isfinite(theta))
        raise(errc::invalid_argument, "bipolar: theta must be finite and nonnegative");
}
}  // namespace

Params::Params(double intensity_, double link_distance_, double tx_prob_, double alpha_)
    : intensity(intensity_), link_distance(link_distance_), tx_prob(tx_prob_), alpha(alpha_)
{
    if (!(intensity > 0.0))
        raise(errc::invalid_argument, "bipolar: intensity must be positive");
    if (!(link_distance > 0.0))
        raise(errc::invalid_argument, "bipolar: link distance must be positive");
    if (!(tx_prob > 0.0 && tx_prob <= 1.0))
        raise(errc::invalid_argument, "bipolar: tx probability must lie in (0,1]");
    if (!(alpha > 2.0))
        raise(errc::invalid_argument, "bipolar: path-loss exponent must exceed 2");
}

double Params::coefficient() const
{
    return intensity * kPi * link_distance * link_distance * sf::gamma_symmetric_product(delta());
}

double Params::exponent_scale(double theta) const
{
    return coefficient() * std::pow(theta, delta());
}

Complex moment(const Params& params, double theta, Complex b)
{
    check_theta(theta);
    if (theta == 0.0)
        return {1.0, 0.0};
    Complex d = sf::d_b(b, params.tx_prob, params.delta());
    return std::exp(-params.exponent_scale(theta) * d);
}

double moment_real(const Params& params, double theta, double b)
{
    return moment(params, theta, Complex(b, 0.0)).real();
}

double variance(const Params& params, double theta)
{
    check_theta(theta);
    double m1 = moment_real(params, theta, 1.0);
    double v;
    if (params.tx_prob < 1.0) {
        v = m1 * m1 * std::expm1(params.tx_prob * (params.delta() - 1.0) * std::log(m1));
    } else {
        double m2 = moment_real(params, theta, 2.0);
        v = m2 - m1 * m1;
    }
    return std::max(v, 0.0);
}

double mean_local_delay(const Params& params, double theta)
{
    check_theta(theta);
    if (params.tx_prob == 1.0)
        return std::numeric_limits<double>::infinity();
    double p = params.tx_prob;
    return std::exp(params.exponent_scale(theta) * p * std::pow(1.0 - p, params.delta() - 1.0));
}

MomentBracket moment_bounds_p1(const Params& params, double theta, double b)
{
    check_theta(theta);
    if (params.tx_prob != 1.0)
        raise(errc::domain, "moment_bounds_p1: requires tx probability exactly 1");
    if (!(b > 0.0))
        raise(errc::domain, "moment_bounds_p1: requires b > 0");
    double x = params.exponent_scale(theta);
    double bd = std::pow(b, params.delta());
    double g_gamma = std::exp(std::lgamma(1.0 + params.delta()));
    // exp(-x b^delta / Gamma(1+delta)): below M_b for every b > 0 since
    // Gamma(b+delta)/Gamma(b) <= b^delta (log-convexity); asymptotically tight.
    double asym_lower = std::exp(-x * bd / g_gamma);
    // M1^{b^delta}: above M_b for b >= 1, below for b < 1.
    double power_delta = std::exp(-x * bd);
    // M1^b: Jensen, below for b >= 1 and above for b <= 1.
    double jensen = std::exp(-x * b);
    if (b >= 1.0)
        return {std::max(asym_lower, jensen), power_delta};
    return {std::max(asym_lower, power_delta), std::min(1.0, jensen)};
}

double asymptotic_variance_slope(const Params& params, double theta)
{
    check_theta(theta);
    double m1 = moment_real(params, theta, 1.0);
    if (m1 >= 1.0)
        return 0.0;
    return -m1 * m1 * std::log(m1) * (1.0 - params.delta());
}

}  // namespace metasir::bipolar
