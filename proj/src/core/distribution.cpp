#include "ramsey/core/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace ramsey {

FieldDistribution FieldDistribution::from_density(FieldGrid grid, std::vector<double> density) {
    if (density.size() != grid.size())
        throw std::invalid_argument("density length does not match grid");
    for (double v : density) {
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("density values must be finite and non-negative");
    }
    const double total = grid.integrate(density);
    if (!(total > 0.0) || !std::isfinite(total))
        throw std::invalid_argument("density has no mass on the grid");
    const double inv = 1.0 / total;
    for (double& v : density)
        v *= inv;
    return FieldDistribution(std::move(grid), std::move(density));
}

FieldDistribution FieldDistribution::gaussian(FieldGrid grid, double mean, double stddev) {
    if (!(stddev > 0.0) || !std::isfinite(stddev) || !std::isfinite(mean))
        throw std::invalid_argument("gaussian requires finite mean and stddev > 0");
    std::vector<double> density(grid.size());
    const double inv_two_var = 1.0 / (2.0 * stddev * stddev);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double d = grid[i] - mean;
        density[i] = std::exp(-d * d * inv_two_var);
    }
    return from_density(std::move(grid), std::move(density));
}

FieldDistribution FieldDistribution::uniform(FieldGrid grid) {
    std::vector<double> density(grid.size(), 1.0);
    return from_density(std::move(grid), std::move(density));
}

FieldDistribution FieldDistribution::uniform_on(FieldGrid grid, double lo, double hi) {
    if (!(lo < hi))
        throw std::invalid_argument("uniform_on requires lo < hi");
    std::vector<double> density(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] >= lo && grid[i] <= hi)
            density[i] = 1.0;
    }
    return from_density(std::move(grid), std::move(density));
}

FieldDistribution FieldDistribution::spike(FieldGrid grid, double b) {
    std::vector<double> density(grid.size(), 0.0);
    density[grid.nearest_index(b)] = 1.0;
    return from_density(std::move(grid), std::move(density));
}

} // namespace ramsey
