#include "ramsey/policy/policies.hpp"

#include "ramsey/core/bayes.hpp"
#include "ramsey/policy/scanner.hpp"

namespace ramsey::policy {

void PolicyState::record(const RamseyParams& p, Outcome x) {
    posterior = bayes_update(posterior, p, x);
    history.push_back({p, x});
}

RamseyParams next_params_random(const PolicyState&, const PolicyConfig& cfg, Rng& rng) {
    cfg.validate();
    std::uniform_real_distribution<double> tau_dist(cfg.tau_min, cfg.tau_max);
    std::uniform_real_distribution<double> theta_dist(0.0, kTwoPi);
    const double tau = tau_dist(rng);
    const double theta = theta_dist(rng);
    return RamseyParams(tau, theta, cfg.coherence_time, cfg.mu);
}

RamseyParams next_params_kpe(const PolicyState& state, const PolicyConfig& cfg) {
    cfg.validate();
    if (state.history.empty())
        return RamseyParams(cfg.kpe_tau0, cfg.kpe_theta0, cfg.coherence_time, cfg.mu);
    const auto& last = state.history.back();
    const double tau = 0.5 * last.params.tau();
    const double theta = 0.5 * (last.params.theta() + kPi * to_int(last.outcome));
    return RamseyParams(tau, theta, cfg.coherence_time, cfg.mu);
}

RamseyParams next_params_myopic_entropy(const PolicyState& state, const PolicyConfig& cfg) {
    const auto grid = SearchGrid::from_config(cfg);
    const auto table = scan_mutual_information(state.posterior, grid, cfg.coherence_time, cfg.mu);
    const auto cell = select_cell(table, Goal::Maximize, kMiTieTolerance);
    return RamseyParams(grid.taus[cell.tau_index], grid.thetas[cell.theta_index],
                        cfg.coherence_time, cfg.mu);
}

RamseyParams next_params_variance_min(const PolicyState& state, const PolicyConfig& cfg) {
    const auto grid = SearchGrid::from_config(cfg);
    const auto table = scan_expected_variance(state.posterior, grid, cfg.coherence_time, cfg.mu);
    const double db = state.posterior.grid().spacing();
    const auto cell =
        select_cell(table, Goal::Minimize, kVarianceFloorFactor * db * db, kVarianceTieTolerance);
    return RamseyParams(grid.taus[cell.tau_index], grid.thetas[cell.theta_index],
                        cfg.coherence_time, cfg.mu);
}

RamseyParams next_params(const PolicyState& state, const PolicyConfig& cfg, Rng& rng) {
    switch (cfg.kind) {
    case PolicyKind::Random:
        return next_params_random(state, cfg, rng);
    case PolicyKind::Kpe:
        return next_params_kpe(state, cfg);
    case PolicyKind::MyopicEntropy:
        return next_params_myopic_entropy(state, cfg);
    case PolicyKind::VarianceMin:
        return next_params_variance_min(state, cfg);
    }
    return next_params_kpe(state, cfg);
}

} // namespace ramsey::policy
