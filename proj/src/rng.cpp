#include "rng.hpp"

#include <cmath>

namespace metasir::rng {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Stream::Stream(std::uint64_t master_seed, std::uint64_t stream_index)
{
    state_ = mix64(master_seed ^ mix64((stream_index + 1) * kGolden));
}

std::uint64_t Stream::next_u64()
{
    state_ += kGolden;
    return mix64(state_);
}

double Stream::next_unit()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Stream::poisson(double mean)
{
    if (mean <= 0.0)
        return 0;
    if (mean < 30.0) {
        // product-of-uniforms inversion
        double limit = std::exp(-mean);
        std::uint64_t k = 0;
        double prod = 1.0;
        do {
            ++k;
            prod *= next_unit();
        } while (prod > limit);
        return k - 1;
    }
    // PTRD (Hoermann's transformed rejection with decomposition)
    const double smu = std::sqrt(mean);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        double u = next_unit() - 0.5;
        double v = next_unit();
        double us = 0.5 - std::abs(u);
        double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= vr)
            return static_cast<std::uint64_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us))
            continue;
        double k = kf;
        double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
        double rhs = k * std::log(mean) - mean - std::lgamma(k + 1.0);
        if (lhs <= rhs)
            return static_cast<std::uint64_t>(kf);
    }
}

}  // namespace metasir::rng
