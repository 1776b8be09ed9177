#include "ramsey/fourier/alpha_series.hpp"

#include "ramsey/core/errors.hpp"
#include "ramsey/core/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ramsey::fourier {
namespace {

// Successive extrapolants closer than this are converged; the cap-hit error
// fires only when the final change is still above kUnconvergedChange.
constexpr double kConvergedChange = 1e-14;
constexpr double kUnconvergedChange = 1e-12;

} // namespace

std::string_view to_string(AlphaMethod m) noexcept {
    return m == AlphaMethod::ClosedSeries ? "closed_series" : "quadrature";
}

bool AlphaSeries::satisfies_invariants() const noexcept {
    if (coefficients.empty() || !(coefficients[0] > 0.0))
        return false;
    for (std::size_t j = 1; j < coefficients.size(); ++j) {
        if (!(coefficients[j] < 0.0))
            return false;
        if (j > 1 && !(coefficients[j] > coefficients[j - 1]))
            return false;
    }
    return true;
}

double alpha_integral(std::size_t j, Basis basis, std::size_t panels) {
    if (panels < 8)
        throw std::invalid_argument("alpha_integral needs at least 8 panels");
    // Periodic integrand: the trapezoid rule over one period is the plain sum.
    const double h = kTwoPi / static_cast<double>(panels);
    const double freq = 2.0 * static_cast<double>(j);
    double sum = 0.0;
    for (std::size_t k = 0; k < panels; ++k) {
        const double x = h * static_cast<double>(k);
        const double p = 0.5 * (1.0 + std::cos(x));
        if (p <= 0.0)
            continue;
        const double f = p * std::log(p);
        sum += f * (basis == Basis::Cosine ? std::cos(freq * x) : std::sin(freq * x));
    }
    return -(2.0 / kPi) * sum * h;
}

double alpha_closed_value(std::size_t j, std::size_t term_cap) {
    if (j == 0)
        throw std::invalid_argument("closed series is defined for j >= 1");
    if (term_cap < j + 10)
        throw std::invalid_argument("term_cap must be at least j + 10");

    // term(m) = C(2m+1, m+j+1) 4^{-m} (m - 2(j+1)^2) / (2m(2m-1)(2m+1)),  m >= j.
    // The terms decay like m^{-5/2}; partial sums S_M carry a tail expanding in
    // M^{-3/2}, M^{-5/2}, ..., which Richardson extrapolation over M0 * 2^k removes.
    const double jd = static_cast<double>(j);
    const double shift = 2.0 * (jd + 1.0) * (jd + 1.0);
    const std::size_t first_checkpoint =
        std::max<std::size_t>(64, static_cast<std::size_t>(4.0 * shift));

    double binom = std::pow(4.0, -jd); // C(2j+1, 2j+1) / 4^j
    double sum = 0.0;
    double carry = 0.0; // Kahan compensation
    std::size_t m = j;
    std::size_t terms = 0;
    std::size_t checkpoint = first_checkpoint;

    std::vector<std::vector<double>> table;
    double last_change = std::numeric_limits<double>::infinity();
    double estimate = 0.0;

    while (terms < term_cap) {
        const double md = static_cast<double>(m);
        const double term = binom * (md - shift) / (2.0 * md * (2.0 * md - 1.0) * (2.0 * md + 1.0));
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        ++terms;

        if (m == checkpoint) {
            std::vector<double> row{sum};
            const std::size_t k = table.size();
            for (std::size_t i = 1; i <= k; ++i) {
                const double factor = std::pow(2.0, 0.5 + static_cast<double>(i));
                row.push_back((factor * row[i - 1] - table[k - 1][i - 1]) / (factor - 1.0));
            }
            table.push_back(std::move(row));
            const double next = table.back().back();
            if (table.size() >= 2) {
                last_change = std::fabs(next - estimate);
                if (last_change < kConvergedChange)
                    return next;
            }
            estimate = next;
            checkpoint *= 2;
        }

        binom *= (2.0 * md + 3.0) * (2.0 * md + 2.0) / (4.0 * (md + jd + 2.0) * (md - jd + 1.0));
        ++m;
    }

    if (table.size() >= 2 && last_change <= kUnconvergedChange)
        return estimate;
    throw TruncationNotConverged("alpha series for j = " + std::to_string(j) +
                                 " did not converge within " + std::to_string(term_cap) +
                                 " terms");
}

AlphaSeries alpha_series_quadrature(std::size_t j_max, std::size_t panels) {
    AlphaSeries out;
    out.method = AlphaMethod::Quadrature;
    out.coefficients.reserve(j_max + 1);
    out.coefficients.push_back(0.5 * alpha_integral(0, Basis::Cosine, panels));
    for (std::size_t j = 1; j <= j_max; ++j)
        out.coefficients.push_back(alpha_integral(j, Basis::Cosine, panels));
    return out;
}

AlphaSeries alpha_series_closed(std::size_t j_max, std::size_t term_cap) {
    if (term_cap < j_max + 10)
        throw std::invalid_argument("term_cap must be at least j_max + 10");
    AlphaSeries out;
    out.method = AlphaMethod::ClosedSeries;
    out.coefficients.reserve(j_max + 1);
    out.coefficients.push_back(0.5 * alpha_integral(0));
    for (std::size_t j = 1; j <= j_max; ++j)
        out.coefficients.push_back(alpha_closed_value(j, term_cap));
    return out;
}

} // namespace ramsey::fourier
