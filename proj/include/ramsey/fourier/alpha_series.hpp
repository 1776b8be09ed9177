// Cosine coefficients of the pointwise conditional entropy of a full-contrast
// Ramsey fringe: h(u) = alpha_0 + sum_{j>=1} alpha_j cos(2 j u), where
// h(u) is the binary entropy of (1 + cos u)/2.
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace ramsey::fourier {

enum class AlphaMethod { ClosedSeries, Quadrature };

std::string_view to_string(AlphaMethod m) noexcept;

struct AlphaSeries {
    /// Index j = 0..j_max. [0] is the mean of h; [j >= 1] are negative, increasing to 0.
    std::vector<double> coefficients;
    AlphaMethod method = AlphaMethod::Quadrature;

    std::size_t j_max() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    double operator[](std::size_t j) const { return coefficients.at(j); }

    /// alpha_0 > 0, alpha_j < 0 and strictly increasing for j >= 1.
    bool satisfies_invariants() const noexcept;
};

enum class Basis { Cosine, Sine };

inline constexpr std::size_t kDefaultAlphaPanels = std::size_t{1} << 16;
inline constexpr std::size_t kDefaultTermCap = std::size_t{1} << 24;

/**
 * Composite (periodic trapezoid) quadrature of
 *   -(2/pi) * integral_0^{2pi} p ln p * basis(2 j x) dx,  p = (1 + cos x)/2.
 * For the cosine basis and j >= 1 this is alpha_j; for j = 0 it is 2 alpha_0.
 */
double alpha_integral(std::size_t j, Basis basis = Basis::Cosine,
                      std::size_t panels = kDefaultAlphaPanels);

/// alpha_j from the binomial-sum series (j >= 1), tail-extrapolated.
/// Throws TruncationNotConverged when term_cap is reached first.
double alpha_closed_value(std::size_t j, std::size_t term_cap = kDefaultTermCap);

AlphaSeries alpha_series_quadrature(std::size_t j_max, std::size_t panels = kDefaultAlphaPanels);

/// alpha_0 by quadrature, alpha_j (j >= 1) by the closed series.
AlphaSeries alpha_series_closed(std::size_t j_max, std::size_t term_cap = kDefaultTermCap);

} // namespace ramsey::fourier
