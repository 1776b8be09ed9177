#include "ramsey/core/information.hpp"

#include "ramsey/core/bayes.hpp"
#include "ramsey/core/errors.hpp"

#include <cmath>

namespace ramsey {
namespace {

double xlogx(double x) noexcept { return x > 0.0 ? x * std::log(x) : 0.0; }

double evaluate(const FieldDistribution& d, Functional g) {
    return g == Functional::Entropy ? entropy(d) : variance(d);
}

} // namespace

double binary_entropy(double p) noexcept { return -xlogx(p) - xlogx(1.0 - p); }

double entropy(const FieldDistribution& d) {
    const auto w = d.grid().weights();
    const auto rho = d.density();
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i)
        sum -= w[i] * xlogx(rho[i]);
    return sum;
}

double mean(const FieldDistribution& d) {
    const auto b = d.grid().points();
    const auto w = d.grid().weights();
    const auto rho = d.density();
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i)
        sum += w[i] * rho[i] * b[i];
    return sum;
}

double variance(const FieldDistribution& d) {
    // Central moments about the mean avoid cancellation when the mean is large.
    const double mu = mean(d);
    const auto b = d.grid().points();
    const auto w = d.grid().weights();
    const auto rho = d.density();
    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double c = b[i] - mu;
        m1 += w[i] * rho[i] * c;
        m2 += w[i] * rho[i] * c * c;
    }
    const double v = m2 - m1 * m1;
    return v > 0.0 ? v : 0.0;
}

double conditional_entropy(const FieldDistribution& d, const RamseyParams& p) {
    const auto b = d.grid().points();
    const auto w = d.grid().weights();
    const auto rho = d.density();
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] == 0.0)
            continue;
        const auto l = likelihood_pair(b[i], p);
        sum -= w[i] * rho[i] * (xlogx(l.zero) + xlogx(l.one));
    }
    return sum;
}

double mutual_information(const FieldDistribution& d, const RamseyParams& p) {
    const double p0 = predictive_prob(d, p, Outcome::Zero);
    const double p1 = predictive_prob(d, p, Outcome::One);
    const double h_x = -xlogx(p0) - xlogx(p1);
    return h_x - conditional_entropy(d, p);
}

double expected_posterior_functional(const FieldDistribution& d, const RamseyParams& p,
                                     Functional g) {
    double total = 0.0;
    bool any = false;
    for (Outcome x : {Outcome::Zero, Outcome::One}) {
        const double px = predictive_prob(d, p, x);
        if (!(px > kZeroEvidence))
            continue;
        total += px * evaluate(bayes_update(d, p, x), g);
        any = true;
    }
    if (!any)
        throw ZeroEvidence("both outcomes impossible under the prior");
    return total;
}

} // namespace ramsey
