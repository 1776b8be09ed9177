// Scheduling-policy configuration and the (tau, theta) search grid.
#pragma once

#include "ramsey/core/params.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey::policy {

enum class PolicyKind { Random, Kpe, MyopicEntropy, VarianceMin };

/// Canonical names: random, kpe, myopic, variance.
std::string_view to_string(PolicyKind k) noexcept;
/// Accepts the canonical names plus myopic_entropy and variance_min.
PolicyKind parse_policy_kind(std::string_view name);

struct PolicyConfig {
    PolicyKind kind = PolicyKind::MyopicEntropy;
    double tau_min = 5.0 / 128.0;
    double tau_max = 5.0;
    std::size_t tau_grid_size = 64;
    std::size_t theta_grid_size = 64;
    double kpe_tau0 = 5.0;
    double kpe_theta0 = 0.0;
    /// Coherence time and coupling stamped onto every emitted RamseyParams.
    CoherenceTime coherence_time = CoherenceTime::infinite();
    double mu = 1.0;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Geometric tau axis (tau_min .. tau_max inclusive) times uniform theta axis on [0, 2pi).
struct SearchGrid {
    std::vector<double> taus;
    std::vector<double> thetas;

    static SearchGrid from_config(const PolicyConfig& cfg);
    std::size_t cells() const noexcept { return taus.size() * thetas.size(); }
    /// Row-major index, tau outer.
    std::size_t index(std::size_t it, std::size_t ith) const noexcept {
        return it * thetas.size() + ith;
    }
    /// Signed offset of tau from taus[0] in units of the geometric step.
    double tau_cell(double tau) const;
    /// Circular distance between two phases in units of the theta spacing.
    double theta_cell_distance(double a, double b) const;
};

} // namespace ramsey::policy
