#include "ramsey/core/bayes.hpp"

#include "ramsey/core/errors.hpp"

#include <cmath>
#include <string>

namespace ramsey {

LikelihoodPair likelihood_pair(double b, const RamseyParams& p) noexcept {
    const double half_fringe =
        0.5 * p.contrast() * std::cos(p.fringe_frequency() * b + p.theta());
    // 1 - large is exact for large in [1/2, 1], which makes the pair sum to 1 exactly.
    const double large = 0.5 + std::fabs(half_fringe);
    const double small = 1.0 - large;
    if (half_fringe >= 0.0)
        return {large, small};
    return {small, large};
}

double predictive_prob(const FieldDistribution& d, const RamseyParams& p, Outcome x) {
    const auto& grid = d.grid();
    const auto b = grid.points();
    const auto w = grid.weights();
    const auto rho = d.density();
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] == 0.0)
            continue;
        sum += w[i] * rho[i] * likelihood(x, b[i], p);
    }
    return sum;
}

FieldDistribution bayes_update(const FieldDistribution& d, const RamseyParams& p, Outcome x) {
    const auto b = d.grid().points();
    const auto rho = d.density();
    std::vector<double> posterior(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
        posterior[i] = rho[i] == 0.0 ? 0.0 : rho[i] * likelihood(x, b[i], p);

    const double evidence = d.grid().integrate(posterior);
    if (!(evidence > kZeroEvidence))
        throw ZeroEvidence("outcome " + std::to_string(to_int(x)) +
                           " has zero evidence under the prior");
    return FieldDistribution::from_density(d.grid(), std::move(posterior));
}

} // namespace ramsey
