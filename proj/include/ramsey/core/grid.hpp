// Uniform discretization of the field axis.
#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace ramsey {

/**
 * @brief Uniformly spaced samples b_min, ..., b_max with trapezoidal weights.
 *
 * Copies share the sample and weight arrays, so passing grids by value is cheap.
 */
class FieldGrid {
public:
    FieldGrid(double b_min, double b_max, std::size_t n_points);

    /// Grid centred on `center` whose width is exactly `n_periods` * `period`.
    /// Trigonometric polynomials with that period integrate without leakage.
    static FieldGrid periodic_window(double center, double period, int n_periods,
                                     std::size_t n_points);

    double b_min() const noexcept { return b_min_; }
    double b_max() const noexcept { return b_max_; }
    std::size_t size() const noexcept { return points_->size(); }
    double spacing() const noexcept { return spacing_; }
    double width() const noexcept { return b_max_ - b_min_; }

    double operator[](std::size_t i) const { return (*points_)[i]; }
    std::span<const double> points() const noexcept { return *points_; }
    std::span<const double> weights() const noexcept { return *weights_; }

    /// Trapezoidal rule over the grid.
    double integrate(std::span<const double> values) const;

    /// Index of the sample closest to b (clamped to the grid).
    std::size_t nearest_index(double b) const;

    bool operator==(const FieldGrid& other) const noexcept;

private:
    double b_min_;
    double b_max_;
    double spacing_;
    std::shared_ptr<const std::vector<double>> points_;
    std::shared_ptr<const std::vector<double>> weights_;
};

} // namespace ramsey
