// Sparse Fourier representation: a finite set of (frequency, amplitude) peaks.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ramsey::fourier {

struct CombPeak {
    double xi;
    std::complex<double> amplitude;
};

/**
 * @brief Delta comb sorted by frequency.
 *
 * Construction merges peaks closer than kMergeTolerance (amplitudes add) and
 * drops peaks whose magnitude is below kPruneThreshold. Transform convention:
 * F[p](xi) = integral p(b) exp(-i xi b) db.
 */
class DeltaComb {
public:
    static constexpr double kMergeTolerance = 1e-9;
    static constexpr double kPruneThreshold = 1e-12;

    DeltaComb() = default;
    explicit DeltaComb(std::vector<CombPeak> peaks);

    std::span<const CombPeak> peaks() const noexcept { return peaks_; }
    std::size_t size() const noexcept { return peaks_.size(); }
    bool empty() const noexcept { return peaks_.empty(); }

    /// Amplitude of the peak within kMergeTolerance of xi, or 0 when there is none.
    std::complex<double> amplitude_at(double xi) const noexcept;
    bool has_peak(double xi) const noexcept;

    /// Every (xi, a) has a partner (-xi, conj a).
    bool is_hermitian(double tol = 1e-10) const noexcept;
    /// Amplitude at xi = 0 equals 1.
    bool is_normalized(double tol = 1e-10) const noexcept;
    double max_frequency() const noexcept;

private:
    const CombPeak* find(double xi) const noexcept;

    std::vector<CombPeak> peaks_;
};

} // namespace ramsey::fourier
