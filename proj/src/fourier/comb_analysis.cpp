#include "ramsey/fourier/comb_analysis.hpp"

#include "ramsey/core/errors.hpp"
#include "ramsey/core/information.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey::fourier {
namespace {

std::complex<double> transform_at(const FieldDistribution& d, double xi) {
    const auto b = d.grid().points();
    const auto w = d.grid().weights();
    const auto rho = d.density();
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] == 0.0)
            continue;
        const double m = w[i] * rho[i];
        re += m * std::cos(xi * b[i]);
        im -= m * std::sin(xi * b[i]);
    }
    return {re, im};
}

} // namespace

DeltaComb comb_from_distribution(const FieldDistribution& d, std::span<const double> frequencies) {
    std::vector<CombPeak> peaks;
    peaks.reserve(2 * frequencies.size() + 1);
    // Unit mass by construction; the trapezoid sum of the density is exactly what
    // the factories normalized.
    peaks.push_back({0.0, {d.mass(), 0.0}});
    for (double xi : frequencies) {
        if (!std::isfinite(xi))
            throw std::invalid_argument("comb frequencies must be finite");
        const double f = std::fabs(xi);
        if (f <= DeltaComb::kMergeTolerance)
            continue;
        const auto a = transform_at(d, f);
        peaks.push_back({f, a});
        peaks.push_back({-f, std::conj(a)});
    }
    // Requested frequencies may repeat; keep one copy of each.
    std::sort(peaks.begin(), peaks.end(),
              [](const CombPeak& a, const CombPeak& b) { return a.xi < b.xi; });
    std::vector<CombPeak> unique;
    for (const auto& p : peaks) {
        if (!unique.empty() && std::fabs(p.xi - unique.back().xi) <= DeltaComb::kMergeTolerance)
            continue;
        unique.push_back(p);
    }
    return DeltaComb(std::move(unique));
}

DeltaComb measurement_comb(const RamseyParams& p, Outcome x) {
    const double c = p.contrast();
    const double phase = p.theta() + kPi * to_int(x);
    const std::complex<double> side = std::polar(c / 4.0, phase);
    const double xi = p.fringe_frequency();
    return DeltaComb({{0.0, {0.5, 0.0}}, {xi, side}, {-xi, std::conj(side)}});
}

double bias_from_comb(const DeltaComb& c, const RamseyParams& p) {
    const auto f = c.amplitude_at(p.fringe_frequency());
    const auto rotated = std::polar(1.0, -p.theta()) * f;
    return 0.5 * p.contrast() * std::fabs(rotated.real());
}

double conditional_entropy_from_comb(const DeltaComb& c, const RamseyParams& p,
                                     const AlphaSeries& a) {
    if (!p.coherence().is_infinite())
        throw std::invalid_argument("comb conditional entropy needs infinite coherence time");
    if (a.coefficients.empty())
        throw InsufficientSeries("alpha series is empty");
    if (p.tau() == 0.0)
        return binary_entropy(0.5 * (1.0 + std::cos(p.theta())));

    const double step = 4.0 * p.mu() * p.tau();
    double h = a[0];
    for (const auto& peak : c.peaks()) {
        if (peak.xi <= 0.0)
            continue;
        const double ratio = peak.xi / step;
        const double j = std::round(ratio);
        if (j < 1.0 || std::fabs(peak.xi - j * step) > DeltaComb::kMergeTolerance)
            continue;
        const auto jj = static_cast<std::size_t>(j);
        if (jj > a.j_max())
            throw InsufficientSeries("comb peak at xi = " + std::to_string(peak.xi) +
                                     " needs alpha_" + std::to_string(jj) + ", series ends at " +
                                     std::to_string(a.j_max()));
        const auto rotated = std::polar(1.0, -2.0 * j * p.theta()) * peak.amplitude;
        h += a[jj] * rotated.real();
    }
    return h;
}

DeltaComb kpe_posterior_comb(int n, double tau1, double mu) {
    if (n < 1 || n > 30)
        throw std::invalid_argument("kpe_posterior_comb needs 1 <= n <= 30");
    if (!(tau1 > 0.0) || !std::isfinite(tau1))
        throw std::invalid_argument("tau1 must be positive and finite");
    const long long span = 1LL << n;
    const double spacing = std::ldexp(mu * tau1, 2 - n);
    std::vector<CombPeak> peaks;
    peaks.reserve(static_cast<std::size_t>(2 * span - 1));
    for (long long j = -span + 1; j < span; ++j) {
        const double weight = 1.0 - static_cast<double>(std::llabs(j)) / static_cast<double>(span);
        peaks.push_back({spacing * static_cast<double>(j), {weight, 0.0}});
    }
    return DeltaComb(std::move(peaks));
}

} // namespace ramsey::fourier
