// Discretized probability density over the field.
#pragma once

#include "ramsey/core/grid.hpp"

#include <span>
#include <vector>

namespace ramsey {

/**
 * @brief Non-negative density on a FieldGrid with unit trapezoidal mass.
 *
 * Immutable once built. Every factory renormalizes, so the integral over the
 * grid is 1 up to rounding.
 */
class FieldDistribution {
public:
    /// Validates (finite, non-negative, positive mass) and renormalizes.
    static FieldDistribution from_density(FieldGrid grid, std::vector<double> density);

    static FieldDistribution gaussian(FieldGrid grid, double mean, double stddev);
    static FieldDistribution uniform(FieldGrid grid);
    /// Uniform on [lo, hi] (grid samples inside the interval), zero elsewhere.
    static FieldDistribution uniform_on(FieldGrid grid, double lo, double hi);
    /// All mass on the grid sample nearest to b.
    static FieldDistribution spike(FieldGrid grid, double b);

    const FieldGrid& grid() const noexcept { return grid_; }
    std::span<const double> density() const noexcept { return density_; }
    double operator[](std::size_t i) const { return density_[i]; }
    std::size_t size() const noexcept { return density_.size(); }

    /// Trapezoidal integral of the density (1 after construction).
    double mass() const { return grid_.integrate(density_); }

private:
    FieldDistribution(FieldGrid grid, std::vector<double> density)
        : grid_(std::move(grid)), density_(std::move(density)) {}

    FieldGrid grid_;
    std::vector<double> density_;
};

} // namespace ramsey
