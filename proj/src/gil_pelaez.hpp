#pragma once

#include <functional>
#include <span>
#include <vector>

#include "special_functions.hpp"

namespace metasir::gp {

/// Supplies the purely imaginary moments M_{jt} = E(P_s^{jt}) for a fixed
/// model and threshold; this is the characteristic function of log P_s
/// evaluated at t. Must satisfy M_0 = 1 and M_{conj(b)} = conj(M_b).
using MomentProvider = std::function<Complex(double)>;

struct Options {
    double abs_tol = 1e-6;
    int max_blocks = 800;
    int threads = 0;  // used by curve(); 0 -> METASIR_THREADS / hardware
};

struct Diagnostics {
    double raw = 0.0;           // pre-clamp value of 1/2 + I/pi
    double tail_bound = 0.0;    // certified bound on the neglected tail
    double truncation_t = 0.0;  // last abscissa integrated directly
};

/// Ccdf of P_s at x through the inversion integral
///   1/2 + (1/pi) int_0^infty Im(e^{-jt log x} M_{jt}) / t dt,
/// evaluated to abs_tol and clamped to [0,1].
double invert(const MomentProvider& provider, double x, const Options& opts = {},
              Diagnostics* diag = nullptr);

/// Pointwise invert() over a strictly increasing grid in (0,1). Provider
/// evaluations are memoized across grid points at shared t-nodes and grid
/// points may run in parallel; values match independent invert() calls.
std::vector<double> curve(const MomentProvider& provider, std::span<const double> xs,
                          const Options& opts = {});

/// Solves invert(x) = level for x by bisection; the ccdf is nonincreasing
/// in x, so the bracket (0,1) always works for level in (0,1).
double solve_level(const MomentProvider& provider, double level, double x_tol = 1e-4,
                   const Options& opts = {});

}  // namespace metasir::gp
