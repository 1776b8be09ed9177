#include "ramsey/core/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramsey {

FieldGrid::FieldGrid(double b_min, double b_max, std::size_t n_points)
    : b_min_(b_min), b_max_(b_max) {
    if (!std::isfinite(b_min) || !std::isfinite(b_max) || !(b_min < b_max))
        throw std::invalid_argument("FieldGrid requires finite b_min < b_max");
    if (n_points < 2)
        throw std::invalid_argument("FieldGrid requires n_points >= 2");

    spacing_ = (b_max - b_min) / static_cast<double>(n_points - 1);
    if (!(spacing_ > 0.0))
        throw std::invalid_argument("FieldGrid spacing underflows");

    std::vector<double> points(n_points);
    for (std::size_t i = 0; i < n_points; ++i)
        points[i] = b_min + spacing_ * static_cast<double>(i);
    points.back() = b_max;

    std::vector<double> weights(n_points, spacing_);
    weights.front() = 0.5 * spacing_;
    weights.back() = 0.5 * spacing_;

    points_ = std::make_shared<const std::vector<double>>(std::move(points));
    weights_ = std::make_shared<const std::vector<double>>(std::move(weights));
}

FieldGrid FieldGrid::periodic_window(double center, double period, int n_periods,
                                     std::size_t n_points) {
    if (!(period > 0.0) || n_periods < 1)
        throw std::invalid_argument("periodic_window requires period > 0 and n_periods >= 1");
    const double half = 0.5 * period * n_periods;
    return FieldGrid(center - half, center + half, n_points);
}

double FieldGrid::integrate(std::span<const double> values) const {
    if (values.size() != size())
        throw std::invalid_argument("integrate: value count does not match grid");
    const auto& w = *weights_;
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        sum += w[i] * values[i];
    return sum;
}

std::size_t FieldGrid::nearest_index(double b) const {
    const double pos = std::round((b - b_min_) / spacing_);
    if (pos <= 0.0)
        return 0;
    return std::min(static_cast<std::size_t>(pos), size() - 1);
}

bool FieldGrid::operator==(const FieldGrid& other) const noexcept {
    return b_min_ == other.b_min_ && b_max_ == other.b_max_ && size() == other.size();
}

} // namespace ramsey
