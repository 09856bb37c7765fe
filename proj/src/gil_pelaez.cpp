#include "gil_pelaez.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "parallel.hpp"
#include "quadrature.hpp"

namespace metasir::gp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLn2 = 0.693147180559945309417232121458176568;

struct TailCertificate {
    double from_t;
    double bound;
};

// Dyadic envelope bound on int_T^infty |M_jt|/t dt. Each doubling block
// contributes at most |M(t)| ln 2 while |M| keeps falling; the remainder
// past the last sample is closed geometrically once the observed ratio per
// doubling stays at or below 0.45. Slow (power-law) decay is detected and
// abandoned after two sluggish ratios so the caller can switch strategy.
std::optional<TailCertificate> decay_certificate(const MomentProvider& m, double t_start,
                                                 double budget)
{
    double t = t_start;
    double prev = std::abs(m(t));
    int sluggish = 0;
    double rho_prev = 1.0;
    for (int j = 0; j < 18; ++j) {
        double t2 = 2.0 * t;
        double cur = std::abs(m(t2));
        double rho = cur / std::max(prev, 1e-300);
        if (rho > 0.45) {
            if (++sluggish >= 2)
                return std::nullopt;
        } else {
            sluggish = 0;
            double rho_hat = std::min(std::max({rho, rho_prev, 0.02}), 0.45);
            double bound = cur * kLn2 / (1.0 - rho_hat);
            if (bound <= budget)
                return TailCertificate{t2, bound};
        }
        rho_prev = rho;
        prev = cur;
        t = t2;
    }
    return std::nullopt;
}

// Repeated-averaging (Euler) table over partial sums; the deepest diagonal
// entry accelerates alternating block sequences.
class AveragingTable {
public:
    explicit AveragingTable(int depth_cap) : depth_cap_(depth_cap) {}

    void push(double s)
    {
        if (rows_.empty())
            rows_.emplace_back();
        rows_[0].push_back(s);
        for (std::size_t m = 1; m <= rows_[0].size() - 1 && m <= static_cast<std::size_t>(depth_cap_); ++m) {
            if (rows_.size() <= m)
                rows_.emplace_back();
            const auto& above = rows_[m - 1];
            rows_[m].push_back(0.5 * (above[above.size() - 2] + above[above.size() - 1]));
        }
    }

    double estimate() const { return rows_.back().back(); }

    // Difference of the two deepest diagonals plus the step within the
    // deepest row; a practical convergence indicator.
    double uncertainty() const
    {
        const auto& deep = rows_.back();
        double e = 0.0;
        if (rows_.size() >= 2)
            e += std::abs(deep.back() - rows_[rows_.size() - 2].back());
        if (deep.size() >= 2)
            e += std::abs(deep.back() - deep[deep.size() - 2]);
        return e;
    }

private:
    int depth_cap_;
    std::vector<std::vector<double>> rows_;
};

class CachingProvider {
public:
    explicit CachingProvider(const MomentProvider& inner) : inner_(inner) {}

    Complex operator()(double t) const
    {
        std::uint64_t key = std::bit_cast<std::uint64_t>(t);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end())
                return it->second;
        }
        Complex v = inner_(t);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            memo_.emplace(key, v);
        }
        return v;
    }

private:
    const MomentProvider& inner_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::uint64_t, Complex> memo_;
};

}  // namespace

double invert(const MomentProvider& provider, double x, const Options& opts, Diagnostics* diag)
{
    if (!(x > 0.0 && x < 1.0))
        raise(errc::invalid_argument, "gil-pelaez invert: x must lie in (0,1)");
    const double u = std::log(x);
    const double tol_i = 0.88 * kPi * opts.abs_tol;

    auto integrand = [&](double t) -> double {
        Complex m = provider(t);
        double phase = -t * u;
        return (m.real() * std::sin(phase) + m.imag() * std::cos(phase)) / t;
    };

    double integral = 0.0;
    Diagnostics d;

    if (auto cert = decay_certificate(provider, 16.0, 0.35 * tol_i)) {
        // |M| decays fast enough that a plain truncation is certifiable.
        integral = quad::adaptive<double>(integrand, 0.0, cert->from_t, 0.5 * tol_i, 20000);
        d.tail_bound = cert->bound;
        d.truncation_t = cert->from_t;
    } else {
        // Slow or no decay: half-period blocks of the asymptotic oscillation
        // exp(-jtu), accelerated by repeated averaging of the partial sums.
        // Widths are quantized to powers of two times pi so grid points with
        // similar |log x| share quadrature nodes through the memo cache.
        const double omega = std::max(std::abs(u), 1e-8);
        const double width = kPi * std::exp2(std::floor(std::log2(1.0 / omega)));
        const double head_end = 4.0 * width;
        double partial = quad::adaptive<double>(integrand, 0.0, head_end, 0.2 * tol_i, 20000);
        AveragingTable table(36);
        table.push(partial);
        bool accepted = false;
        int calm = 0;
        for (int k = 0; k < opts.max_blocks; ++k) {
            double a = head_end + k * width;
            double block_tol = tol_i / (4.0 * (k + 4.0) * (k + 4.0));
            double s = quad::adaptive<double>(integrand, a, a + width, block_tol, 8000);
            partial += s;
            table.push(partial);
            d.truncation_t = a + width;
            if (k >= 10) {
                double unc = table.uncertainty();
                if (unc < 0.25 * tol_i) {
                    if (++calm >= 2) {
                        integral = table.estimate();
                        d.tail_bound = unc;
                        accepted = true;
                        break;
                    }
                } else {
                    calm = 0;
                }
            }
            if (std::abs(s) < 0.02 * tol_i) {
                if (auto cert = decay_certificate(provider, a + width, 0.3 * tol_i)) {
                    integral = partial;
                    d.tail_bound = cert->bound;
                    accepted = true;
                    break;
                }
            }
        }
        if (!accepted)
            raise(errc::tail, "gil-pelaez invert: tail not certified by t=" +
                                  std::to_string(d.truncation_t));
    }

    d.raw = 0.5 + integral / kPi;
    if (diag)
        *diag = d;
    return std::clamp(d.raw, 0.0, 1.0);
}

std::vector<double> curve(const MomentProvider& provider, std::span<const double> xs,
                          const Options& opts)
{
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0 && xs[i] < 1.0))
            raise(errc::invalid_argument, "gil-pelaez curve: grid values must lie in (0,1)");
        if (i > 0 && !(xs[i] > xs[i - 1]))
            raise(errc::invalid_argument, "gil-pelaez curve: grid must be strictly increasing");
    }
    CachingProvider cache(provider);
    MomentProvider cached = [&cache](double t) { return cache(t); };
    std::vector<double> out(xs.size());
    par::parallel_for(xs.size(), opts.threads,
                      [&](std::size_t i) { out[i] = invert(cached, xs[i], opts); });
    return out;
}

double solve_level(const MomentProvider& provider, double level, double x_tol, const Options& opts)
{
    if (!(level > 0.0 && level < 1.0))
        raise(errc::invalid_argument, "solve_level: level must lie in (0,1)");
    double lo = 1e-9, hi = 1.0 - 1e-9;
    double f_lo = invert(provider, lo, opts);
    double f_hi = invert(provider, hi, opts);
    if (f_lo < level)
        return lo;
    if (f_hi > level)
        return hi;
    while (hi - lo > x_tol) {
        double mid = 0.5 * (lo + hi);
        (invert(provider, mid, opts) >= level ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace metasir::gp
