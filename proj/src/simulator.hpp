#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bipolar.hpp"
#include "cellular.hpp"

namespace metasir::mc {

struct Config {
    std::uint64_t realizations = 10000;
    std::uint64_t master_seed = 1;
    double window = 0.0;      // 0 -> derived from the truncation-bias rule
    double bias_target = 1e-3;  // relative M1 shift allowed from the finite window
    double bs_density = 1.0;  // cellular only
    int threads = 0;          // 0 -> METASIR_THREADS / hardware
};

/// One conditional success probability per realization, fading and MAC
/// averaged analytically inside each realization.
struct Empirical {
    double theta = 0.0;
    double window = 0.0;
    std::uint64_t resamples = 0;  // cellular rejections (empty window / far serving BS)
    std::vector<double> samples;

    struct Estimate {
        double value;
        double std_error;
    };
    /// Sample mean of P_s^b with its standard error; b < 0 requires all
    /// samples positive.
    Estimate moment(double b) const;
    /// Unbiased sample variance with a fourth-moment standard error.
    Estimate variance() const;
    /// Fraction of samples strictly above each grid value.
    std::vector<double> ccdf(std::span<const double> xs) const;
};

double default_window_bipolar(const bipolar::Params& params, double theta,
                              double bias_target = 1e-3);
double default_window_cellular(const cellular::Params& params, double theta, double bs_density,
                               double bias_target = 1e-3);

Empirical simulate_bipolar(const bipolar::Params& params, double theta, const Config& config);
Empirical simulate_cellular(const cellular::Params& params, double theta, const Config& config);

}  // namespace metasir::mc
