// Simulation harness
#include "ramsey/core/information.hpp"
#include "ramsey/sim/harness.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace ramsey;
using namespace ramsey::sim;

namespace {

SimConfig quick_config(policy::PolicyKind kind) {
    SimConfig c;
    c.grid = FieldGrid(-20.0, 20.0, std::size_t{1} << 12);
    c.n_measurements = 10;
    c.n_realizations = 4;
    c.policy.kind = kind;
    c.policy.tau_grid_size = 16;
    c.policy.theta_grid_size = 8;
    c.threads = 1;
    return c;
}

} // namespace

TEST(SampleOutcome, CertainZero) {
    policy::Rng rng(1);
    for (int i = 0; i < 1000; ++i)
        ASSERT_EQ(sample_outcome(rng, 3.3, RamseyParams(0.0, 0.0)), Outcome::Zero);
}

TEST(SampleOutcome, CertainOne) {
    policy::Rng rng(2);
    for (int i = 0; i < 1000; ++i)
        ASSERT_EQ(sample_outcome(rng, 0.0, RamseyParams(1.0, kPi)), Outcome::One);
}

TEST(SampleOutcome, UnbiasedRate) {
    policy::Rng rng(3);
    const int n = 10000;
    int zeros = 0;
    const RamseyParams p(1.0, kPi / 2); // cos(pi/2) = 0 at b = 0
    for (int i = 0; i < n; ++i)
        zeros += sample_outcome(rng, 0.0, p) == Outcome::Zero;
    EXPECT_NEAR(zeros / double(n), 0.5, 3 * 0.5 / std::sqrt(n));
}

TEST(SampleOutcome, ConsumesOneDraw) {
    policy::Rng a(4), b(4);
    sample_outcome(a, 0.1, RamseyParams(0.7, 0.2));
    b.discard(1);
    EXPECT_EQ(a, b);
}

TEST(TrialSeed, DistinctAndStable) {
    EXPECT_EQ(derive_trial_seed(1, 2), derive_trial_seed(1, 2));
    EXPECT_NE(derive_trial_seed(1, 2), derive_trial_seed(1, 3));
    EXPECT_NE(derive_trial_seed(1, 2), derive_trial_seed(2, 2));
}

TEST(SimConfig, Validates) {
    auto c = quick_config(policy::PolicyKind::Random);
    EXPECT_NO_THROW(c.validate());
    c.prior_std = 5.0; // 6 sigma exceeds the grid
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = quick_config(policy::PolicyKind::Random);
    c.n_realizations = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = quick_config(policy::PolicyKind::Random);
    c.true_field = 50.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    EXPECT_EQ(parse_prior_shape("uniform"), PriorShape::Uniform);
    EXPECT_THROW(parse_prior_shape("cauchy"), std::invalid_argument);
}

TEST(RunTrial, Deterministic) {
    for (auto kind : {policy::PolicyKind::Random, policy::PolicyKind::MyopicEntropy}) {
        const auto c = quick_config(kind);
        const auto a = run_trial(c, 3);
        const auto b = run_trial(c, 3);
        ASSERT_EQ(a.steps.size(), b.steps.size());
        EXPECT_EQ(a.b_true, b.b_true);
        for (std::size_t k = 0; k < a.steps.size(); ++k) {
            EXPECT_EQ(a.steps[k].tau, b.steps[k].tau);
            EXPECT_EQ(a.steps[k].theta, b.steps[k].theta);
            EXPECT_EQ(a.steps[k].outcome, b.steps[k].outcome);
            EXPECT_EQ(a.steps[k].posterior_entropy, b.steps[k].posterior_entropy);
        }
    }
}

TEST(RunTrial, NoMeasurements) {
    auto c = quick_config(policy::PolicyKind::Kpe);
    c.n_measurements = 0;
    const auto t = run_trial(c, 0);
    EXPECT_TRUE(t.steps.empty());
}

TEST(RunTrial, RecordsAreConsistent) {
    auto c = quick_config(policy::PolicyKind::Kpe);
    c.policy.kpe_tau0 = 4.0;
    const auto t = run_trial(c, 1);
    ASSERT_EQ(t.steps.size(), c.n_measurements);
    double cumulative = 0.0;
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        EXPECT_EQ(t.steps[k].step, k + 1);
        EXPECT_EQ(t.steps[k].tau, std::ldexp(4.0, -static_cast<int>(k)));
        cumulative += t.steps[k].tau;
        EXPECT_DOUBLE_EQ(t.steps[k].cumulative_tau, cumulative);
        EXPECT_TRUE(std::isfinite(t.steps[k].posterior_entropy));
        EXPECT_GE(t.steps[k].posterior_std, 0.0);
    }
}

TEST(RunTrial, TrueFieldMatchesAcrossPolicies) {
    const auto a = run_trial(quick_config(policy::PolicyKind::Random), 5);
    const auto b = run_trial(quick_config(policy::PolicyKind::VarianceMin), 5);
    EXPECT_EQ(a.b_true, b.b_true);
    auto fixed = quick_config(policy::PolicyKind::Kpe);
    fixed.true_field = 1.25;
    EXPECT_EQ(run_trial(fixed, 0).b_true, 1.25);
}

TEST(RunTrial, KpeEntropyDropsMatchStepInformation) {
    // Diffuse prior, no decoherence: each step removes exactly that step's MI.
    SimConfig c;
    c.prior_shape = PriorShape::Uniform;
    c.coherence_time = CoherenceTime::infinite();
    c.grid = FieldGrid::periodic_window(0.0, 64 * kPi, 1, std::size_t{1} << 14);
    c.n_measurements = 6;
    c.n_realizations = 1;
    c.policy.kind = policy::PolicyKind::Kpe;
    c.policy.kpe_tau0 = 1.0;
    c.policy.tau_min = 1.0 / 64;
    c.policy.tau_max = 2.0;
    for (std::size_t trial = 0; trial < 3; ++trial) {
        const auto t = run_trial(c, trial);
        double previous = std::log(c.grid.width());
        for (int k = 1; k <= 6; ++k) {
            const double h = t.steps[k - 1].posterior_entropy;
            EXPECT_NEAR(previous - h, oracle::kpe_step_information(k), 1e-6) << "step " << k;
            previous = h;
        }
    }
}

TEST(RunEnsemble, SingleTrialEqualsTrajectory) {
    auto c = quick_config(policy::PolicyKind::Random);
    c.n_realizations = 1;
    const auto t = run_trial(c, 0);
    const auto s = run_ensemble(c);
    ASSERT_EQ(s.trials, 1u);
    ASSERT_EQ(s.steps.size(), t.steps.size());
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        EXPECT_EQ(s.steps[k].mean_entropy, t.steps[k].posterior_entropy);
        EXPECT_EQ(s.steps[k].std_entropy, 0.0);
        EXPECT_EQ(s.steps[k].mean_posterior_std, t.steps[k].posterior_std);
    }
}

TEST(RunEnsemble, ThreadCountDoesNotChangeResults) {
    auto c = quick_config(policy::PolicyKind::Random);
    c.n_realizations = 6;
    c.threads = 1;
    const auto a = run_ensemble(c);
    c.threads = 3;
    const auto b = run_ensemble(c);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t k = 0; k < a.steps.size(); ++k) {
        EXPECT_EQ(a.steps[k].mean_entropy, b.steps[k].mean_entropy);
        EXPECT_EQ(a.steps[k].std_posterior_std, b.steps[k].std_posterior_std);
    }
}

TEST(RunEnsemble, PermutationInvariantMeans) {
    auto c = quick_config(policy::PolicyKind::Random);
    c.n_realizations = 5;
    auto trajectories = run_trials(c);
    const auto a = summarize(trajectories);
    std::reverse(trajectories.begin(), trajectories.end());
    std::rotate(trajectories.begin(), trajectories.begin() + 2, trajectories.end());
    const auto b = summarize(trajectories);
    for (std::size_t k = 0; k < a.steps.size(); ++k) {
        EXPECT_NEAR(a.steps[k].mean_entropy, b.steps[k].mean_entropy, 1e-12);
        EXPECT_NEAR(a.steps[k].std_entropy, b.steps[k].std_entropy, 1e-12);
    }
}

TEST(RunEnsemble, PopulationStandardDeviation) {
    std::vector<Trajectory> ts(2);
    ts[0].steps.push_back({1, 1.0, 0.0, Outcome::Zero, 1.0, 2.0, 0.0, 1.0});
    ts[1].steps.push_back({1, 1.0, 0.0, Outcome::One, 3.0, 4.0, 0.0, 1.0});
    const auto s = summarize(ts);
    EXPECT_DOUBLE_EQ(s.steps[0].mean_entropy, 2.0);
    EXPECT_DOUBLE_EQ(s.steps[0].std_entropy, 1.0);
    EXPECT_DOUBLE_EQ(s.steps[0].std_posterior_std, 1.0);
}

TEST(RunEnsemble, MyopicPosteriorIsConsistent) {
    // T = 10, tau <= 5, 30 steps, on a coarser field grid; the posterior mean ends near the truth.
    SimConfig c;
    c.grid = FieldGrid(-20.0, 20.0, std::size_t{1} << 12);
    c.n_measurements = 30;
    c.n_realizations = 50;
    c.policy.kind = policy::PolicyKind::MyopicEntropy;
    c.policy.tau_grid_size = 32;
    c.policy.theta_grid_size = 16;
    const auto trials = run_trials(c);
    int close = 0;
    for (const auto& t : trials)
        close += std::fabs(t.steps.back().posterior_mean - t.b_true) < t.steps.front().posterior_std;
    EXPECT_GE(close, 45);
    const auto s = summarize(trials);
    EXPECT_LT(s.steps.back().mean_entropy, s.steps.front().mean_entropy - 2.0);
}
