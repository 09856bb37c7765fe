#include "cellular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadrature.hpp"

namespace metasir::cellular {

namespace {

void check_theta(double theta)
{
    if (!(theta >= 0.0) || !std::isfinite(theta))
        raise(errc::invalid_argument, "cellular: theta must be finite and nonnegative");
}

// 2 int_0^1 (1 - (1 - p theta r^alpha / (1 + theta r^alpha))^b) r^-3 dr.
// The substitution r = v^s with s = 3/(alpha-2) turns the integrand into a
// smooth function vanishing like v^2 at the origin; the small-r part of the
// factor is computed through log1p/expm1 so nothing cancels.
Complex rdp_integral(double theta, double alpha, double p, Complex b, double abs_tol)
{
    const double s = 3.0 / (alpha - 2.0);
    auto f = [&](double v) -> Complex {
        if (v < 1e-18)
            return {0.0, 0.0};
        double r_alpha = std::pow(v, s * alpha);
        double x = p * theta * r_alpha / (1.0 + theta * r_alpha);
        Complex inner = -sf::cexpm1(b * std::log1p(-x));
        return inner * (2.0 * s * std::pow(v, -2.0 * s - 1.0));
    };
    return quad::adaptive<Complex>(f, 0.0, 1.0, abs_tol, 60000);
}

Complex moment_from_integral(double theta, double alpha, double p, Complex b)
{
    Complex j = rdp_integral(theta, alpha, p, b, 1e-10);
    Complex denom = 1.0 + j;
    if (b.imag() == 0.0 && b.real() < 0.0 && denom.real() <= 0.0)
        raise(errc::negative_moment_divergence,
              "cellular moment: negative-order moment diverges at these parameters");
    return 1.0 / denom;
}

}  // namespace

Params::Params(double alpha_, double activity_p_) : alpha(alpha_), activity_p(activity_p_)
{
    if (!(alpha > 2.0))
        raise(errc::invalid_argument, "cellular: path-loss exponent must exceed 2");
    if (!(activity_p > 0.0 && activity_p <= 1.0))
        raise(errc::invalid_argument, "cellular: activity probability must lie in (0,1]");
}

Complex moment(const Params& params, double theta, Complex b)
{
    check_theta(theta);
    if (params.activity_p != 1.0)
        raise(errc::domain, "cellular moment: requires activity probability 1; "
                            "use moment_with_activity");
    if (theta == 0.0 || b == Complex(0.0, 0.0))
        return {1.0, 0.0};
    double delta = params.delta();
    if (b.imag() == 0.0) {
        Complex denom = sf::gauss_2f1(b, -delta, 1.0 - delta, -theta);
        if (b.real() < 0.0 && denom.real() <= 0.0)
            raise(errc::negative_moment_divergence,
                  "cellular moment: negative-order moment diverges at these parameters");
        return 1.0 / denom;
    }
    return moment_from_integral(theta, params.alpha, 1.0, b);
}

double moment_real(const Params& params, double theta, double b)
{
    return moment(params, theta, Complex(b, 0.0)).real();
}

Complex moment_with_activity(const Params& params, double theta, Complex b)
{
    check_theta(theta);
    if (theta == 0.0 || b == Complex(0.0, 0.0))
        return {1.0, 0.0};
    return moment_from_integral(theta, params.alpha, params.activity_p, b);
}

double variance(const Params& params, double theta)
{
    check_theta(theta);
    double m1, m2;
    if (params.activity_p == 1.0) {
        m1 = moment_real(params, theta, 1.0);
        m2 = moment_real(params, theta, 2.0);
    } else {
        m1 = moment_with_activity(params, theta, Complex(1.0, 0.0)).real();
        m2 = moment_with_activity(params, theta, Complex(2.0, 0.0)).real();
    }
    return std::max(m2 - m1 * m1, 0.0);
}

double mean_local_delay(const Params& params, double theta)
{
    check_theta(theta);
    double delta = params.delta();
    if (params.activity_p == 1.0) {
        if (theta >= 1.0 / delta - 1.0)
            return std::numeric_limits<double>::infinity();
        return (1.0 - delta) / (1.0 - delta * (1.0 + theta));
    }
    double p = params.activity_p;
    Complex h = sf::gauss_2f1(Complex(1.0, 0.0), 1.0 - delta, 2.0 - delta, -theta * (1.0 - p));
    double denom = 1.0 - p * theta * (delta / (1.0 - delta)) * h.real();
    if (denom <= 0.0)
        return std::numeric_limits<double>::infinity();
    return 1.0 / denom;
}

double critical_activity(const Params& params, double theta)
{
    if (!(theta > 0.0))
        raise(errc::invalid_argument, "critical_activity: theta must be positive");
    double delta = params.delta();
    if (theta < 1.0 / delta - 1.0)
        return 1.0;
    auto g = [&](double p) {
        Complex h = sf::gauss_2f1(Complex(1.0, 0.0), 1.0 - delta, 2.0 - delta, -theta * (1.0 - p));
        return 1.0 - p * theta * (delta / (1.0 - delta)) * h.real();
    };
    double lo = 1e-6, hi = 1.0;
    if (g(hi) >= 0.0)
        return 1.0;
    if (g(lo) <= 0.0)
        raise(errc::convergence, "critical_activity: failed to bracket the root");
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Bracket critical_activity_bracket(const Params& params, double theta)
{
    double delta = params.delta();
    if (theta < 1.0 / delta - 1.0)
        return {1.0, 1.0};
    double scale = std::pow(delta / (1.0 - delta) * theta, -delta);
    return {0.5 * scale, scale};
}

double asymptotic_success(double delta, double t)
{
    if (!(delta > 0.0 && delta < 1.0))
        raise(errc::invalid_argument, "asymptotic_success: delta must lie in (0,1)");
    if (!(t >= 0.0))
        raise(errc::invalid_argument, "asymptotic_success: t must be nonnegative");
    double s = sf::sinc(delta);
    return s / (t + s);
}

double asymptotic_variance(double p_target)
{
    if (!(p_target > 0.0 && p_target < 1.0))
        raise(errc::invalid_argument, "asymptotic_variance: target must lie in (0,1)");
    return p_target / (2.0 - p_target) - p_target * p_target;
}

}  // namespace metasir::cellular
