// The four scheduling policies: posterior and history in, next (tau, theta) out.
#pragma once

#include "ramsey/core/distribution.hpp"
#include "ramsey/core/params.hpp"
#include "ramsey/policy/config.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace ramsey::policy {

struct Measurement {
    RamseyParams params;
    Outcome outcome;
};

/// Current posterior plus the measurements that produced it.
struct PolicyState {
    explicit PolicyState(FieldDistribution prior) : posterior(std::move(prior)) {}

    FieldDistribution posterior;
    std::vector<Measurement> history;

    std::size_t step_index() const noexcept { return history.size(); }
    /// Bayes-updates the posterior and appends to the history.
    void record(const RamseyParams& p, Outcome x);
};

using Rng = std::mt19937_64;

/// tau ~ U[tau_min, tau_max), theta ~ U[0, 2pi). Ignores the state.
RamseyParams next_params_random(const PolicyState& state, const PolicyConfig& cfg, Rng& rng);

/// (kpe_tau0, kpe_theta0) first, then tau/2 and (theta + pi x)/2 of the last measurement.
RamseyParams next_params_kpe(const PolicyState& state, const PolicyConfig& cfg);

/// Grid argmax of mutual information.
RamseyParams next_params_myopic_entropy(const PolicyState& state, const PolicyConfig& cfg);

/// Grid argmin of expected posterior variance.
RamseyParams next_params_variance_min(const PolicyState& state, const PolicyConfig& cfg);

/// Dispatch on cfg.kind. Only the random policy touches rng.
RamseyParams next_params(const PolicyState& state, const PolicyConfig& cfg, Rng& rng);

} // namespace ramsey::policy
