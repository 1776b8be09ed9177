#include "ramsey/sim/harness.hpp"

#include "ramsey/core/bayes.hpp"
#include "ramsey/core/information.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace ramsey::sim {
namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::string_view to_string(PriorShape s) noexcept {
    return s == PriorShape::Gaussian ? "gaussian" : "uniform";
}

PriorShape parse_prior_shape(std::string_view name) {
    if (name == "gaussian")
        return PriorShape::Gaussian;
    if (name == "uniform")
        return PriorShape::Uniform;
    throw std::invalid_argument("unknown prior shape '" + std::string(name) + "'");
}

void SimConfig::validate() const {
    if (prior_shape == PriorShape::Gaussian) {
        if (!(prior_std > 0.0) || !std::isfinite(prior_std))
            throw std::invalid_argument("prior_std must be positive and finite");
        if (!std::isfinite(prior_mean))
            throw std::invalid_argument("prior_mean must be finite");
        if (prior_mean - 6.0 * prior_std < grid.b_min() ||
            prior_mean + 6.0 * prior_std > grid.b_max())
            throw std::invalid_argument("grid must cover prior_mean +- 6 prior_std");
    }
    if (n_realizations < 1)
        throw std::invalid_argument("n_realizations must be positive");
    if (true_field && (*true_field < grid.b_min() || *true_field > grid.b_max()))
        throw std::invalid_argument("true_field must lie on the grid");
    effective_policy().validate();
}

policy::PolicyConfig SimConfig::effective_policy() const {
    auto p = policy;
    p.coherence_time = coherence_time;
    return p;
}

FieldDistribution make_prior(const SimConfig& cfg) {
    if (cfg.prior_shape == PriorShape::Uniform)
        return FieldDistribution::uniform(cfg.grid);
    return FieldDistribution::gaussian(cfg.grid, cfg.prior_mean, cfg.prior_std);
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept {
    return splitmix64(master_seed ^ splitmix64(trial_index));
}

Outcome sample_outcome(policy::Rng& rng, double b_true, const RamseyParams& p) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(rng) < likelihood(Outcome::Zero, b_true, p) ? Outcome::Zero : Outcome::One;
}

Trajectory run_trial(const SimConfig& cfg, std::size_t trial_index) {
    cfg.validate();
    Trajectory traj;
    traj.trial_index = trial_index;
    traj.seed = derive_trial_seed(cfg.master_seed, trial_index);
    policy::Rng rng(traj.seed);

    if (cfg.true_field) {
        traj.b_true = *cfg.true_field;
    } else if (cfg.prior_shape == PriorShape::Gaussian) {
        std::normal_distribution<double> n(cfg.prior_mean, cfg.prior_std);
        traj.b_true = n(rng);
    } else {
        std::uniform_real_distribution<double> u(cfg.grid.b_min(), cfg.grid.b_max());
        traj.b_true = u(rng);
    }

    const auto pcfg = cfg.effective_policy();
    policy::PolicyState state(make_prior(cfg));
    double cumulative = 0.0;
    traj.steps.reserve(cfg.n_measurements);
    for (std::size_t n = 0; n < cfg.n_measurements; ++n) {
        const auto p = policy::next_params(state, pcfg, rng);
        const auto x = sample_outcome(rng, traj.b_true, p);
        state.record(p, x);
        cumulative += p.tau();
        traj.steps.push_back({n + 1, p.tau(), p.theta(), x, entropy(state.posterior),
                              std::sqrt(variance(state.posterior)), mean(state.posterior),
                              cumulative});
    }
    return traj;
}

std::vector<Trajectory> run_trials(const SimConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.n_realizations;
    std::vector<Trajectory> out(n);
    unsigned workers = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = run_trial(cfg, i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

EnsembleSummary summarize(const std::vector<Trajectory>& trajectories) {
    EnsembleSummary s;
    s.trials = trajectories.size();
    if (trajectories.empty())
        return s;
    const std::size_t steps = trajectories.front().steps.size();
    for (const auto& t : trajectories)
        if (t.steps.size() != steps)
            throw std::invalid_argument("trajectories differ in length");
    const double count = static_cast<double>(trajectories.size());
    for (std::size_t k = 0; k < steps; ++k) {
        double se = 0.0, ss = 0.0;
        for (const auto& t : trajectories) {
            se += t.steps[k].posterior_entropy;
            ss += t.steps[k].posterior_std;
        }
        const double me = se / count;
        const double ms = ss / count;
        double ve = 0.0, vs = 0.0;
        for (const auto& t : trajectories) {
            ve += (t.steps[k].posterior_entropy - me) * (t.steps[k].posterior_entropy - me);
            vs += (t.steps[k].posterior_std - ms) * (t.steps[k].posterior_std - ms);
        }
        s.steps.push_back({k + 1, me, std::sqrt(ve / count), ms, std::sqrt(vs / count)});
    }
    return s;
}

EnsembleSummary run_ensemble(const SimConfig& cfg) { return summarize(run_trials(cfg)); }

} // namespace ramsey::sim
