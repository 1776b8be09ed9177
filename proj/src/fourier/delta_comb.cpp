#include "ramsey/fourier/delta_comb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramsey::fourier {

DeltaComb::DeltaComb(std::vector<CombPeak> peaks) {
    for (const auto& p : peaks) {
        if (!std::isfinite(p.xi) || !std::isfinite(p.amplitude.real()) ||
            !std::isfinite(p.amplitude.imag()))
            throw std::invalid_argument("comb peaks must be finite");
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const CombPeak& a, const CombPeak& b) { return a.xi < b.xi; });

    std::vector<CombPeak> merged;
    merged.reserve(peaks.size());
    std::size_t i = 0;
    while (i < peaks.size()) {
        const double start = peaks[i].xi;
        double xi_sum = 0.0;
        std::complex<double> amp{0.0, 0.0};
        std::size_t count = 0;
        while (i < peaks.size() && peaks[i].xi - start <= kMergeTolerance) {
            xi_sum += peaks[i].xi;
            amp += peaks[i].amplitude;
            ++count;
            ++i;
        }
        double xi = xi_sum / static_cast<double>(count);
        if (std::fabs(xi) <= kMergeTolerance)
            xi = 0.0;
        if (std::abs(amp) >= kPruneThreshold)
            merged.push_back({xi, amp});
    }
    peaks_ = std::move(merged);
}

const CombPeak* DeltaComb::find(double xi) const noexcept {
    auto it = std::lower_bound(peaks_.begin(), peaks_.end(), xi - kMergeTolerance,
                               [](const CombPeak& p, double v) { return p.xi < v; });
    if (it != peaks_.end() && std::fabs(it->xi - xi) <= kMergeTolerance)
        return &*it;
    return nullptr;
}

std::complex<double> DeltaComb::amplitude_at(double xi) const noexcept {
    const auto* p = find(xi);
    return p ? p->amplitude : std::complex<double>{0.0, 0.0};
}

bool DeltaComb::has_peak(double xi) const noexcept { return find(xi) != nullptr; }

bool DeltaComb::is_hermitian(double tol) const noexcept {
    for (const auto& p : peaks_) {
        if (std::abs(amplitude_at(-p.xi) - std::conj(p.amplitude)) > tol)
            return false;
    }
    return true;
}

bool DeltaComb::is_normalized(double tol) const noexcept {
    return std::abs(amplitude_at(0.0) - 1.0) <= tol;
}

double DeltaComb::max_frequency() const noexcept {
    double m = 0.0;
    for (const auto& p : peaks_)
        m = std::max(m, std::fabs(p.xi));
    return m;
}

} // namespace ramsey::fourier
