#include "simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "parallel.hpp"
#include "rng.hpp"

namespace metasir::mc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_config(const Config& config)
{
    if (config.realizations < 1)
        raise(errc::config, "simulate: need at least one realization");
    if (!(config.bias_target > 0.0 && config.bias_target <= 0.02))
        raise(errc::config, "simulate: bias target must lie in (0, 0.02]");
}

double resolve_window(double requested, double derived, const char* what)
{
    if (requested <= 0.0)
        return derived;
    // a caller-supplied window must not reintroduce more truncation bias
    // than the loosest acceptable rule
    if (requested < 0.5 * derived)
        raise(errc::config, std::string("simulate: window too small for ") + what +
                                "; need at least half the derived radius");
    return requested;
}

}  // namespace

double default_window_bipolar(const bipolar::Params& params, double theta, double bias_target)
{
    // neglected interference shifts log M1 by about
    // lambda p 2 pi theta' w^{2-alpha} / (alpha - 2), theta' = theta R^alpha
    double theta_prime = theta * std::pow(params.link_distance, params.alpha);
    double mass = params.intensity * params.tx_prob * 2.0 * kPi * theta_prime /
                  (params.alpha - 2.0);
    double w = std::pow(mass / bias_target, 1.0 / (params.alpha - 2.0));
    double floor = std::max({3.0 / std::sqrt(params.intensity), 2.0 * params.link_distance, 5.0});
    return std::max(w, floor);
}

double default_window_cellular(const cellular::Params& params, double theta, double bs_density,
                               double bias_target)
{
    // as above with E(r0^alpha) = Gamma(1+alpha/2) / (pi lambda)^{alpha/2}
    double er0a = std::exp(std::lgamma(1.0 + params.alpha / 2.0)) /
                  std::pow(kPi * bs_density, params.alpha / 2.0);
    double mass = bs_density * params.activity_p * 2.0 * kPi * theta * er0a /
                  (params.alpha - 2.0);
    double w = std::pow(mass / bias_target, 1.0 / (params.alpha - 2.0));
    // the serving BS must land well inside: P(r0 > w/4) = exp(-pi lambda w^2/16)
    double floor = 4.0 * std::sqrt(16.2 / (kPi * bs_density));
    return std::max(w, floor);
}

Empirical simulate_bipolar(const bipolar::Params& params, double theta, const Config& config)
{
    check_config(config);
    double w = resolve_window(config.window,
                              default_window_bipolar(params, theta, config.bias_target),
                              "the bipolar model");
    const double theta_prime = theta * std::pow(params.link_distance, params.alpha);
    const double mean_count = params.intensity * kPi * w * w;
    const double half_alpha = params.alpha / 2.0;
    const double p = params.tx_prob;
    const double w2 = w * w;

    Empirical out;
    out.theta = theta;
    out.window = w;
    out.samples.resize(config.realizations);
    par::parallel_for(config.realizations, config.threads, [&](std::size_t i) {
        rng::Stream stream(config.master_seed, i);
        std::uint64_t count = stream.poisson(mean_count);
        double prod = 1.0;
        for (std::uint64_t k = 0; k < count; ++k) {
            double r2 = w2 * stream.next_unit();  // uniform disc; only distances enter
            double interference = theta_prime * std::pow(r2, -half_alpha);
            prod *= 1.0 - p * interference / (1.0 + interference);
        }
        out.samples[i] = prod;
    });
    return out;
}

Empirical simulate_cellular(const cellular::Params& params, double theta, const Config& config)
{
    check_config(config);
    if (!(config.bs_density > 0.0))
        raise(errc::config, "simulate: BS density must be positive");
    double w = resolve_window(
        config.window,
        default_window_cellular(params, theta, config.bs_density, config.bias_target),
        "the cellular model");
    const double mean_count = config.bs_density * kPi * w * w;
    const double half_alpha = params.alpha / 2.0;
    const double p = params.activity_p;
    const double w2 = w * w;
    const double serve_limit2 = w2 / 16.0;  // serving BS within w/4

    Empirical out;
    out.theta = theta;
    out.window = w;
    out.samples.resize(config.realizations);
    std::atomic<std::uint64_t> resamples{0};
    par::parallel_for(config.realizations, config.threads, [&](std::size_t i) {
        rng::Stream stream(config.master_seed, i);
        std::vector<double> r2s;
        for (int attempt = 0; attempt < 10000; ++attempt) {
            std::uint64_t count = stream.poisson(mean_count);
            if (count == 0) {
                resamples.fetch_add(1, std::memory_order_relaxed);
                continue;
            }
            r2s.clear();
            r2s.reserve(count);
            double nearest2 = w2;
            for (std::uint64_t k = 0; k < count; ++k) {
                double r2 = w2 * stream.next_unit();
                nearest2 = std::min(nearest2, r2);
                r2s.push_back(r2);
            }
            if (nearest2 > serve_limit2) {
                resamples.fetch_add(1, std::memory_order_relaxed);
                continue;
            }
            double prod = 1.0;
            for (double r2 : r2s) {
                if (r2 == nearest2)
                    continue;
                double rel = theta * std::pow(nearest2 / r2, half_alpha);
                prod *= 1.0 - p * rel / (1.0 + rel);
            }
            out.samples[i] = prod;
            return;
        }
        raise(errc::config, "simulate: realization kept being rejected; window unusable");
    });
    out.resamples = resamples.load();
    return out;
}

Empirical::Estimate Empirical::moment(double b) const
{
    if (samples.empty())
        raise(errc::domain, "empirical moment: no samples");
    const auto n = static_cast<double>(samples.size());
    double sum = 0.0, sum2 = 0.0;
    for (double s : samples) {
        if (b < 0.0 && s <= 0.0)
            raise(errc::domain, "empirical moment: negative order with a zero sample");
        double z = std::pow(s, b);
        sum += z;
        sum2 += z * z;
    }
    double mean = sum / n;
    double var = std::max(sum2 / n - mean * mean, 0.0) * n / std::max(n - 1.0, 1.0);
    return {mean, std::sqrt(var / n)};
}

Empirical::Estimate Empirical::variance() const
{
    if (samples.size() < 2)
        raise(errc::domain, "empirical variance: need at least two samples");
    const auto n = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double s : samples)
        mean += s;
    mean /= n;
    double m2 = 0.0, m4 = 0.0;
    for (double s : samples) {
        double d = s - mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m4 /= n;
    double unbiased = m2 * n / (n - 1.0);
    double se2 = (m4 - (n - 3.0) / (n - 1.0) * m2 * m2) / n;
    return {unbiased, std::sqrt(std::max(se2, 0.0))};
}

std::vector<double> Empirical::ccdf(std::span<const double> xs) const
{
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out(xs.size());
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto it = std::upper_bound(sorted.begin(), sorted.end(), xs[i]);
        out[i] = static_cast<double>(sorted.end() - it) / n;
    }
    return out;
}

}  // namespace metasir::mc
