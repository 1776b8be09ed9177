// Simulated adaptive experiments: one trajectory per trial, ensembles of trials.
#pragma once

#include "ramsey/core/distribution.hpp"
#include "ramsey/core/grid.hpp"
#include "ramsey/core/params.hpp"
#include "ramsey/policy/config.hpp"
#include "ramsey/policy/policies.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ramsey::sim {

enum class PriorShape { Gaussian, Uniform };

std::string_view to_string(PriorShape s) noexcept;
PriorShape parse_prior_shape(std::string_view name);

struct SimConfig {
    double prior_mean = 0.0;
    double prior_std = 2.1213203435596424; // 3/sqrt(2)
    /// Uniform spreads the prior over the whole grid; mean and std are then unused.
    PriorShape prior_shape = PriorShape::Gaussian;
    CoherenceTime coherence_time{10.0};
    std::size_t n_measurements = 30;
    std::size_t n_realizations = 8;
    std::uint64_t master_seed = 20240601;
    /// Its coherence_time is overwritten by the one above when trials run.
    policy::PolicyConfig policy;
    FieldGrid grid{-20.0, 20.0, std::size_t{1} << 14};
    /// Fixed true field; sampled from the prior when empty.
    std::optional<double> true_field;
    /// Worker threads for ensembles; 0 picks the hardware concurrency.
    unsigned threads = 0;

    /// Throws std::invalid_argument on any broken constraint.
    void validate() const;
    /// Policy config with this config's coherence time applied.
    policy::PolicyConfig effective_policy() const;
};

FieldDistribution make_prior(const SimConfig& cfg);

/// Stateless mix of (master_seed, trial_index).
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept;

/// Zero with probability likelihood(Zero, b_true, p). Exactly one uniform draw.
Outcome sample_outcome(policy::Rng& rng, double b_true, const RamseyParams& p);

struct StepRecord {
    std::size_t step; // 1-based, after the measurement
    double tau;
    double theta;
    Outcome outcome;
    double posterior_entropy;
    double posterior_std;
    double posterior_mean;
    double cumulative_tau;
};

struct Trajectory {
    std::vector<StepRecord> steps;
    double b_true = 0.0;
    std::uint64_t seed = 0;
    std::size_t trial_index = 0;
};

Trajectory run_trial(const SimConfig& cfg, std::size_t trial_index);

/// All trials, ordered by trial index regardless of how they were scheduled.
std::vector<Trajectory> run_trials(const SimConfig& cfg);

struct StepSummary {
    std::size_t step;
    double mean_entropy;
    double std_entropy;
    double mean_posterior_std;
    double std_posterior_std;
};

/// Per-step means and population standard deviations across trials.
struct EnsembleSummary {
    std::vector<StepSummary> steps;
    std::size_t trials = 0;
};

EnsembleSummary summarize(const std::vector<Trajectory>& trajectories);
EnsembleSummary run_ensemble(const SimConfig& cfg);

} // namespace ramsey::sim
