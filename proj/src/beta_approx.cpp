#include "beta_approx.hpp"

#include <cmath>

namespace metasir::beta {

namespace {

// Lentz continued fraction for the incomplete beta ratio.
double beta_cf(double a, double b, double x)
{
    constexpr int kMaxIter = 400;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny)
        d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            return h;
    }
    raise(errc::convergence, "reg_inc_beta: continued fraction failed to converge");
}

}  // namespace

double reg_inc_beta(double a, double b, double x)
{
    if (!(a > 0.0 && b > 0.0))
        raise(errc::invalid_argument, "reg_inc_beta: shapes must be positive");
    if (!(x >= 0.0 && x <= 1.0))
        raise(errc::invalid_argument, "reg_inc_beta: x must lie in [0,1]");
    if (x == 0.0)
        return 0.0;
    if (x == 1.0)
        return 1.0;
    double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                       b * std::log1p(-x);
    double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

Fit fit(double m1, double m2)
{
    if (!(m1 > 0.0 && m1 < 1.0))
        raise(errc::infeasible_moments, "beta fit: mean must lie in (0,1)");
    if (!(m2 > m1 * m1 && m2 < m1))
        raise(errc::infeasible_moments, "beta fit: requires M1^2 < M2 < M1");
    double beta_shape = (m1 - m2) * (1.0 - m1) / (m2 - m1 * m1);
    double alpha_shape = m1 * beta_shape / (1.0 - m1);
    return {m1, beta_shape, alpha_shape};
}

double ccdf(const Fit& fit, double x)
{
    if (!(x >= 0.0 && x <= 1.0))
        raise(errc::invalid_argument, "beta ccdf: x must lie in [0,1]");
    return reg_inc_beta(fit.beta_shape, fit.alpha_shape, 1.0 - x);
}

double moment(const Fit& fit, double k)
{
    double a = fit.alpha_shape, b = fit.beta_shape;
    if (!(k > -a))
        raise(errc::moment_does_not_exist,
              "beta moment: E(X^k) exists only for k > -alpha_shape");
    return std::exp(std::lgamma(a + k) - std::lgamma(a) + std::lgamma(a + b) -
                    std::lgamma(a + b + k));
}

}  // namespace metasir::beta
