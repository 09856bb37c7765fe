#include "moment_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace metasir::bounds {

namespace {

double clamp01(double v)
{
    return std::clamp(v, 0.0, 1.0);
}

double binom_int(int n, int k)
{
    double r = 1.0;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

void check_x(double x)
{
    if (!(x > 0.0 && x < 1.0))
        raise(errc::invalid_argument, "bounds: x must lie in (0,1)");
}

}  // namespace

double MomentSet::at(int k) const
{
    if (k == 0)
        return 1.0;
    if (k == -1) {
        if (!minus_one)
            raise(errc::missing_moment, "moment set: order -1 not available");
        return *minus_one;
    }
    auto it = moments.find(k);
    if (it == moments.end())
        raise(errc::missing_moment, "moment set: order " + std::to_string(k) + " not available");
    return it->second;
}

double MomentSet::complementary(int b) const
{
    double s = 0.0;
    for (int k = 0; k <= b; ++k)
        s += binom_int(b, k) * (k % 2 == 0 ? 1.0 : -1.0) * at(k);
    return s;
}

MomentSet MomentSet::from(const std::function<double(int)>& moment_fn, bool with_minus_one)
{
    MomentSet set;
    for (int k = 1; k <= 4; ++k)
        set.moments[k] = moment_fn(k);
    if (with_minus_one)
        set.minus_one = moment_fn(-1);
    return set;
}

ClassicalBounds classical(const MomentSet& moments, double x)
{
    check_x(x);
    ClassicalBounds out;
    out.x = x;
    double m1 = moments.at(1);
    double v = moments.variance();
    for (int b = 1; b <= 4; ++b) {
        out.markov_upper[b - 1] = clamp01(moments.at(b) / std::pow(x, b));
        out.markov_lower[b - 1] = clamp01(1.0 - moments.complementary(b) / std::pow(1.0 - x, b));
    }
    if (moments.minus_one)
        out.minus_one_lower = clamp01(1.0 - x * *moments.minus_one);
    if (x < m1) {
        out.chebyshev_lower = clamp01(1.0 - v / ((x - m1) * (x - m1)));
        // Cauchy-Schwarz route: P(P_s > x) >= (M1-x)^2 / (V + (M1-x)^2)
        double gap = m1 - x;
        out.paley_zygmund_lower = clamp01(gap * gap / (v + gap * gap));
    } else if (x > m1) {
        out.chebyshev_upper = clamp01(v / ((x - m1) * (x - m1)));
    }
    return out;
}

double ClassicalBounds::lower_envelope() const
{
    double lo = 0.0;
    for (double b : markov_lower)
        lo = std::max(lo, b);
    if (minus_one_lower)
        lo = std::max(lo, *minus_one_lower);
    if (chebyshev_lower)
        lo = std::max(lo, *chebyshev_lower);
    if (paley_zygmund_lower)
        lo = std::max(lo, *paley_zygmund_lower);
    return lo;
}

double ClassicalBounds::upper_envelope() const
{
    double hi = 1.0;
    for (double b : markov_upper)
        hi = std::min(hi, b);
    if (chebyshev_upper)
        hi = std::min(hi, *chebyshev_upper);
    return hi;
}

FourMomentBounds four_moment(const MomentSet& moments, double x)
{
    check_x(x);
    constexpr double kDegenTol = 1e-12;
    const double M1 = moments.at(1), M2 = moments.at(2), M3 = moments.at(3), M4 = moments.at(4);
    if (M2 < M1 * M1 - 1e-12 || M2 * M4 < M3 * M3 - 1e-12)
        raise(errc::infeasible_moments, "four_moment: moment vector violates Hankel feasibility");

    double v = M2 - M1 * M1;
    if (v < kDegenTol) {
        // point mass at M1: the cdf is an exact step, no shifted-moment system
        if (x < M1 - 1e-9)
            return {1.0, 1.0};
        if (x > M1 + 1e-9)
            return {0.0, 0.0};
        return {0.0, 1.0};
    }

    // moments of P_s - x
    const double M[5] = {1.0, M1, M2, M3, M4};
    double m[5];
    for (int i = 1; i <= 4; ++i) {
        double s = 0.0;
        for (int k = 0; k <= i; ++k)
            s += binom_int(i, k) * std::pow(-x, i - k) * M[k];
        m[i] = s;
    }

    double den2 = m[2] * m[2] - m[1] * m[3];
    double den4 = m[2] * m[4] - m[3] * m[3];
    if (std::abs(den2) < kDegenTol || std::abs(den4) < kDegenTol)
        raise(errc::degenerate_moments, "four_moment: shifted-moment system is singular");

    // two support atoms besides the target point: roots of y^2 - Sy + P
    double s_sum = (m[2] * m[3] - m[1] * m[4]) / den2;
    double s_prod = (m[3] * m[3] - m[2] * m[4]) / den2;
    double disc = s_sum * s_sum - 4.0 * s_prod;
    if (disc < kDegenTol)
        raise(errc::degenerate_moments, "four_moment: atom discriminant vanishes");
    double root = std::sqrt(disc);
    double y_lo = 0.5 * (s_sum - root);
    double y_hi = 0.5 * (s_sum + root);
    if (std::abs(y_lo) < kDegenTol || std::abs(y_hi) < kDegenTol)
        raise(errc::degenerate_moments, "four_moment: support atom collides with target");

    // masses from the first two shifted moments
    double a_w = (m[2] - m[1] * y_hi) / (y_lo - y_hi);
    double b_w = (m[2] - m[1] * y_lo) / (y_hi - y_lo);
    double p_lo = a_w / y_lo;
    double p_hi = b_w / y_hi;
    double p_at = 1.0 - p_lo - p_hi;
    auto sane_mass = [](double p) { return p > -1e-6 && p < 1.0 + 1e-6; };
    if (!sane_mass(p_lo) || !sane_mass(p_hi) || !sane_mass(p_at))
        raise(errc::degenerate_moments, "four_moment: extremal masses out of range");

    constexpr double kDeadZone = 1e-9;
    auto cdf_bounds = [&](bool lo_neg, bool hi_neg) -> FourMomentBounds {
        if (lo_neg && hi_neg)
            return {p_lo + p_hi, 1.0};
        if (lo_neg && !hi_neg)
            return {p_lo, p_at + p_lo};
        return {0.0, p_at};
    };
    const bool lo_ambiguous = std::abs(y_lo) < kDeadZone;
    const bool hi_ambiguous = std::abs(y_hi) < kDeadZone;
    FourMomentBounds cdf{1.0, 0.0};
    for (bool lo_neg : {true, false}) {
        if (!lo_ambiguous && lo_neg != (y_lo < 0.0))
            continue;
        for (bool hi_neg : {true, false}) {
            if (!hi_ambiguous && hi_neg != (y_hi < 0.0))
                continue;
            if (!lo_neg && hi_neg)
                continue;  // y_lo <= y_hi rules this out
            FourMomentBounds c = cdf_bounds(lo_neg, hi_neg);
            cdf.lower = std::min(cdf.lower, c.lower);
            cdf.upper = std::max(cdf.upper, c.upper);
        }
    }
    double lower_cdf = clamp01(cdf.lower);
    double upper_cdf = clamp01(std::max(cdf.upper, lower_cdf));
    return {1.0 - upper_cdf, 1.0 - lower_cdf};
}

}  // namespace metasir::bounds
