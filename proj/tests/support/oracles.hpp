// Independent reference values for tests. Nothing here calls into the library.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>

namespace oracle {

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n) {
    if (n % 2)
        ++n;
    const double h = (b - a) / static_cast<double>(n);
    double s = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i)
        s += f(a + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Pr(X=0) under a Gaussian prior: 1/2 + c e^{-2(tau sigma)^2} cos(2 b0 tau + theta)/2.
inline double gaussian_predictive_zero(double b0, double sigma, double tau, double theta,
                                       double decay) {
    return 0.5 + 0.5 * decay * std::exp(-2.0 * tau * tau * sigma * sigma) *
                     std::cos(2.0 * b0 * tau + theta);
}

/// Characteristic function of N(0, sigma^2).
inline double gaussian_cf(double sigma, double xi) { return std::exp(-0.5 * sigma * sigma * xi * xi); }

inline double gaussian_entropy(double sigma) {
    return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * sigma * sigma);
}

/// Mean of the binary entropy of (1 + cos u)/2 over a period: 2 ln 2 - 1.
inline double alpha0() { return 2.0 * std::numbers::ln2 - 1.0; }

/// Cosine coefficient of cos(2 j u) in that entropy: -1/(j(4j^2 - 1)).
inline double alpha(std::size_t j) {
    const double x = static_cast<double>(j);
    return -1.0 / (x * (4.0 * x * x - 1.0));
}

inline double binary_entropy(double p) {
    double h = 0.0;
    if (p > 0.0)
        h -= p * std::log(p);
    if (p < 1.0)
        h -= (1.0 - p) * std::log(1.0 - p);
    return h;
}

/// Information of step k (1-based) of the KPE schedule on a diffuse prior. The
/// posterior before that step is a Fejer kernel whose comb weights are
/// 1 - j/2^{k-1}, so H(X) = ln 2 and H(X|B) = alpha0 + sum_j alpha_j (1 - j/2^{k-1}).
inline double kpe_step_information(int k) {
    const std::size_t span = std::size_t{1} << (k - 1);
    double h = alpha0();
    for (std::size_t j = 1; j < span; ++j)
        h += alpha(j) * (1.0 - static_cast<double>(j) / static_cast<double>(span));
    return std::numbers::ln2 - h;
}

} // namespace oracle
