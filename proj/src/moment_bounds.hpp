#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>

#include "errors.hpp"

namespace metasir::bounds {

/// Integer moments of a [0,1]-supported random variable; orders 1..4 are
/// required by the bound operations, order -1 is optional (it may not exist).
struct MomentSet {
    std::map<int, double> moments;           // order -> E(P_s^order)
    std::optional<double> minus_one;         // E(P_s^{-1}) when finite

    double at(int k) const;                  // raises missing_moment
    /// E((1-P_s)^b) by binomial expansion, integer b >= 0.
    double complementary(int b) const;
    double variance() const { return at(2) - at(1) * at(1); }

    static MomentSet from(const std::function<double(int)>& moment_fn, bool with_minus_one);
};

/// Markov / reverse-Markov / Chebyshev / Paley-Zygmund bounds on the ccdf at
/// one reliability point, each clamped to [0,1]; absent entries are not
/// applicable at this x.
struct ClassicalBounds {
    double x = 0.0;
    std::array<double, 4> markov_upper{};  // M_b / x^b, b = 1..4
    std::array<double, 4> markov_lower{};  // 1 - E((1-P)^b)/(1-x)^b
    std::optional<double> minus_one_lower; // 1 - x M_{-1}
    std::optional<double> chebyshev_lower; // x < M1
    std::optional<double> chebyshev_upper; // x > M1
    std::optional<double> paley_zygmund_lower;  // x < M1

    double lower_envelope() const;
    double upper_envelope() const;
};

ClassicalBounds classical(const MomentSet& moments, double x);

/// Tightest bounds on the ccdf achievable from the first four moments,
/// through the extremal three-point distributions of the shifted moment
/// problem. lower <= exact ccdf <= upper.
struct FourMomentBounds {
    double lower, upper;
};

FourMomentBounds four_moment(const MomentSet& moments, double x);

}  // namespace metasir::bounds
