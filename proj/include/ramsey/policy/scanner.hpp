// Exhaustive evaluation of the one-step objectives over a SearchGrid.
#pragma once

#include "ramsey/core/distribution.hpp"
#include "ramsey/core/params.hpp"
#include "ramsey/policy/config.hpp"

#include <cstddef>
#include <vector>

namespace ramsey::policy {

/// Absolute tolerance for mutual-information ties.
inline constexpr double kMiTieTolerance = 1e-9;
/// Relative tolerance for expected-variance ties.
inline constexpr double kVarianceTieTolerance = 1e-9;
/// Expected variances closer than this multiple of the squared grid spacing also tie.
inline constexpr double kVarianceFloorFactor = 1e-15;

struct ScanTable {
    SearchGrid grid;
    std::vector<double> values; // row-major, tau outer

    double at(std::size_t it, std::size_t ith) const { return values[grid.index(it, ith)]; }
};

/// Mutual information of every cell.
ScanTable scan_mutual_information(const FieldDistribution& d, const SearchGrid& grid,
                                  const CoherenceTime& T, double mu = 1.0);

/// Expected posterior variance of every cell.
ScanTable scan_expected_variance(const FieldDistribution& d, const SearchGrid& grid,
                                 const CoherenceTime& T, double mu = 1.0);

struct Cell {
    std::size_t tau_index;
    std::size_t theta_index;
};

enum class Goal { Maximize, Minimize };

/// Best cell; among cells within abs_tol + rel_tol * |best| of the best, the
/// smallest tau then the smallest theta.
Cell select_cell(const ScanTable& t, Goal goal, double abs_tol, double rel_tol = 0.0);

} // namespace ramsey::policy
