#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

#include "errors.hpp"

namespace metasir::quad {

// Gauss-Kronrod 7-15 pair on [-1,1].
inline constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
// Gauss weights for nodes 1, 3, 5, 7 (zero elsewhere).
inline constexpr double kGaussWeights[8] = {
    0.0, 0.129484966168870, 0.0, 0.279705391489277,
    0.0, 0.381830050505119, 0.0, 0.417959183673469,
};

template <typename T, typename F>
T gk15(F&& f, double a, double b, double& err)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T fc = f(mid);
    T k15 = kKronrodWeights[7] * fc;
    T g7 = kGaussWeights[7] * fc;
    for (int i = 0; i < 7; ++i) {
        double dx = half * kKronrodNodes[i];
        T fsum = f(mid - dx) + f(mid + dx);
        k15 += kKronrodWeights[i] * fsum;
        if (kGaussWeights[i] != 0.0)
            g7 += kGaussWeights[i] * fsum;
    }
    k15 *= half;
    g7 *= half;
    double e = std::abs(k15 - g7);
    err = std::min(e, std::pow(200.0 * e, 1.5));
    return k15;
}

/// Globally adaptive quadrature: splits the worst panel until the summed
/// error estimate falls below abs_tol or the panel budget is spent.
template <typename T, typename F>
T adaptive(F&& f, double a, double b, double abs_tol, int max_panels = 4000,
           double* err_out = nullptr)
{
    struct Panel {
        double err;
        double a, b;
        T value;
        long index;
        bool operator<(const Panel& o) const
        {
            return err < o.err || (err == o.err && index > o.index);
        }
    };
    std::priority_queue<Panel> heap;
    double err0;
    T total = gk15<T>(f, a, b, err0);
    heap.push({err0, a, b, total, 0});
    double refinable_err = err0;
    double frozen_err = 0.0;
    int panels = 1;
    long next_index = 1;
    const double min_width = 1e-14 * (std::abs(a) + std::abs(b) + 1.0);
    while (refinable_err + frozen_err > abs_tol && !heap.empty() && panels < max_panels) {
        Panel worst = heap.top();
        heap.pop();
        refinable_err -= worst.err;
        if (worst.b - worst.a < min_width) {
            frozen_err += worst.err;
            continue;
        }
        double mid = 0.5 * (worst.a + worst.b);
        double e1, e2;
        T left = gk15<T>(f, worst.a, mid, e1);
        T right = gk15<T>(f, mid, worst.b, e2);
        total += left + right - worst.value;
        heap.push({e1, worst.a, mid, left, next_index++});
        heap.push({e2, mid, worst.b, right, next_index++});
        refinable_err += e1 + e2;
        ++panels;
    }
    double remaining = refinable_err + frozen_err;
    if (remaining > abs_tol)
        raise(errc::convergence, "adaptive quadrature: panel budget exhausted");
    if (err_out)
        *err_out = remaining;
    return total;
}

}  // namespace metasir::quad
