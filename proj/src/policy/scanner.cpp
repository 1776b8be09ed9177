#include "ramsey/policy/scanner.hpp"

#include "ramsey/core/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ramsey::policy {
namespace {

// Grid points carrying less than this fraction of the largest quadrature mass are skipped.
constexpr double kSupportCutoff = 1e-18;

struct Support {
    std::vector<double> b;
    std::vector<double> mass;
    double total = 0.0;
};

Support support_of(const FieldDistribution& d) {
    const auto b = d.grid().points();
    const auto w = d.grid().weights();
    const auto rho = d.density();
    double peak = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i)
        peak = std::max(peak, w[i] * rho[i]);
    Support s;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double m = w[i] * rho[i];
        if (m > kSupportCutoff * peak) {
            s.b.push_back(b[i]);
            s.mass.push_back(m);
            s.total += m;
        }
    }
    return s;
}

// Entropy of the Bernoulli law (1 + l)/2.
double fringe_entropy(double l) noexcept {
    const double a = std::fabs(l);
    if (a >= 1.0)
        return 0.0;
    return std::numbers::ln2 - 0.5 * ((1.0 + a) * std::log1p(a) + (1.0 - a) * std::log1p(-a));
}

double bernoulli_entropy(double p) noexcept {
    double h = 0.0;
    if (p > 0.0)
        h -= p * std::log(p);
    if (p < 1.0)
        h -= (1.0 - p) * std::log1p(-p);
    return h;
}

// Both objectives are invariant under theta -> theta + pi, so with an even theta
// count only the first half needs evaluation.
std::size_t distinct_thetas(const SearchGrid& g) {
    const std::size_t n = g.thetas.size();
    return n % 2 == 0 ? n / 2 : n;
}

void mirror(ScanTable& t) {
    const std::size_t n = t.grid.thetas.size();
    const std::size_t half = distinct_thetas(t.grid);
    if (half == n)
        return;
    for (std::size_t it = 0; it < t.grid.taus.size(); ++it)
        for (std::size_t k = 0; k < half; ++k)
            t.values[t.grid.index(it, k + half)] = t.values[t.grid.index(it, k)];
}

} // namespace

ScanTable scan_mutual_information(const FieldDistribution& d, const SearchGrid& grid,
                                  const CoherenceTime& T, double mu) {
    ScanTable t{grid, std::vector<double>(grid.cells(), 0.0)};
    const Support s = support_of(d);
    const std::size_t n = s.b.size();
    std::vector<double> c(n), sn(n);
    const std::size_t half = distinct_thetas(grid);

    for (std::size_t it = 0; it < grid.taus.size(); ++it) {
        const double tau = grid.taus[it];
        const double amp = T.decay(tau);
        if (amp == 0.0)
            continue;
        const double omega = 2.0 * mu * tau;
        double cm = 0.0;
        double sm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = std::cos(omega * s.b[i]);
            sn[i] = std::sin(omega * s.b[i]);
            cm += s.mass[i] * c[i];
            sm += s.mass[i] * sn[i];
        }
        for (std::size_t ith = 0; ith < half; ++ith) {
            const double ct = amp * std::cos(grid.thetas[ith]);
            const double st = amp * std::sin(grid.thetas[ith]);
            const double p0 = std::clamp(0.5 + 0.5 * (ct * cm - st * sm) / s.total, 0.0, 1.0);
            double hxb = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                hxb += s.mass[i] * fringe_entropy(ct * c[i] - st * sn[i]);
            t.values[grid.index(it, ith)] = bernoulli_entropy(p0) - hxb / s.total;
        }
    }
    mirror(t);
    return t;
}

ScanTable scan_expected_variance(const FieldDistribution& d, const SearchGrid& grid,
                                 const CoherenceTime& T, double mu) {
    ScanTable t{grid, std::vector<double>(grid.cells(), 0.0)};
    const Support s = support_of(d);
    const std::size_t n = s.b.size();

    double centre = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        centre += s.mass[i] * s.b[i];
    centre /= s.total;
    double u1 = 0.0;
    double u2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = s.b[i] - centre;
        u1 += s.mass[i] * u;
        u2 += s.mass[i] * u * u;
    }
    const double prior_var = std::max(0.0, u2 / s.total - (u1 / s.total) * (u1 / s.total));
    const std::size_t half = distinct_thetas(grid);

    for (std::size_t it = 0; it < grid.taus.size(); ++it) {
        const double tau = grid.taus[it];
        const double amp = T.decay(tau);
        if (amp == 0.0) {
            for (std::size_t ith = 0; ith < half; ++ith)
                t.values[grid.index(it, ith)] = prior_var;
            continue;
        }
        const double omega = 2.0 * mu * tau;
        double c0 = 0.0, s0 = 0.0, c1 = 0.0, s1 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double u = s.b[i] - centre;
            const double cv = std::cos(omega * s.b[i]);
            const double sv = std::sin(omega * s.b[i]);
            c0 += s.mass[i] * cv;
            s0 += s.mass[i] * sv;
            c1 += s.mass[i] * u * cv;
            s1 += s.mass[i] * u * sv;
        }
        for (std::size_t ith = 0; ith < half; ++ith) {
            const double ct = amp * std::cos(grid.thetas[ith]);
            const double st = amp * std::sin(grid.thetas[ith]);
            // Unnormalized outcome masses and first moments about the centre.
            const double p0 = 0.5 * s.total + 0.5 * (ct * c0 - st * s0);
            const double p1 = s.total - p0;
            const double m0 = 0.5 * u1 + 0.5 * (ct * c1 - st * s1);
            const double m1 = u1 - m0;
            double acc = u2;
            if (p0 > kZeroEvidence * s.total)
                acc -= m0 * m0 / p0;
            if (p1 > kZeroEvidence * s.total)
                acc -= m1 * m1 / p1;
            t.values[grid.index(it, ith)] = std::max(0.0, acc / s.total);
        }
    }
    mirror(t);
    return t;
}

Cell select_cell(const ScanTable& t, Goal goal, double abs_tol, double rel_tol) {
    if (t.values.empty())
        throw std::invalid_argument("empty scan table");
    const auto [lo, hi] = std::minmax_element(t.values.begin(), t.values.end());
    const double best = goal == Goal::Maximize ? *hi : *lo;
    const double tol = abs_tol + rel_tol * std::fabs(best);
    const std::size_t nth = t.grid.thetas.size();
    for (std::size_t k = 0; k < t.values.size(); ++k) {
        const double v = t.values[k];
        const bool close = goal == Goal::Maximize ? v >= best - tol : v <= best + tol;
        if (close)
            return {k / nth, k % nth};
    }
    return {0, 0};
}

} // namespace ramsey::policy
