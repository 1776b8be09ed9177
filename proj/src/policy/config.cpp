#include "ramsey/policy/config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ramsey::policy {

std::string_view to_string(PolicyKind k) noexcept {
    switch (k) {
    case PolicyKind::Random:
        return "random";
    case PolicyKind::Kpe:
        return "kpe";
    case PolicyKind::MyopicEntropy:
        return "myopic";
    case PolicyKind::VarianceMin:
        return "variance";
    }
    return "unknown";
}

PolicyKind parse_policy_kind(std::string_view name) {
    if (name == "random")
        return PolicyKind::Random;
    if (name == "kpe")
        return PolicyKind::Kpe;
    if (name == "myopic" || name == "myopic_entropy")
        return PolicyKind::MyopicEntropy;
    if (name == "variance" || name == "variance_min")
        return PolicyKind::VarianceMin;
    throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

void PolicyConfig::validate() const {
    if (!(tau_min > 0.0) || !std::isfinite(tau_min))
        throw std::invalid_argument("tau_min must be positive and finite");
    if (!(tau_max > tau_min) || !std::isfinite(tau_max))
        throw std::invalid_argument("tau_max must be finite and exceed tau_min");
    if (tau_grid_size < 1)
        throw std::invalid_argument("tau_grid_size must be positive");
    if (theta_grid_size < 1)
        throw std::invalid_argument("theta_grid_size must be positive");
    if (!(kpe_tau0 > 0.0) || !std::isfinite(kpe_tau0))
        throw std::invalid_argument("kpe_tau0 must be positive and finite");
    if (!(kpe_theta0 >= 0.0) || !(kpe_theta0 < kTwoPi))
        throw std::invalid_argument("kpe_theta0 must lie in [0, 2pi)");
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("mu must be positive and finite");
}

SearchGrid SearchGrid::from_config(const PolicyConfig& cfg) {
    cfg.validate();
    SearchGrid g;
    g.taus.resize(cfg.tau_grid_size);
    if (cfg.tau_grid_size == 1) {
        g.taus[0] = cfg.tau_min;
    } else {
        const double log_ratio = std::log2(cfg.tau_max / cfg.tau_min);
        const double n = static_cast<double>(cfg.tau_grid_size - 1);
        for (std::size_t k = 0; k < cfg.tau_grid_size; ++k)
            g.taus[k] = cfg.tau_min * std::exp2(log_ratio * static_cast<double>(k) / n);
        g.taus.back() = cfg.tau_max;
    }
    g.thetas.resize(cfg.theta_grid_size);
    for (std::size_t k = 0; k < cfg.theta_grid_size; ++k)
        g.thetas[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(cfg.theta_grid_size);
    return g;
}

double SearchGrid::tau_cell(double tau) const {
    if (taus.size() < 2)
        return 0.0;
    const double step = std::log(taus[1] / taus[0]);
    return std::log(tau / taus[0]) / step;
}

double SearchGrid::theta_cell_distance(double a, double b) const {
    double d = std::fmod(std::fabs(a - b), kTwoPi);
    if (d > kPi)
        d = kTwoPi - d;
    return d / (kTwoPi / static_cast<double>(thetas.size()));
}

} // namespace ramsey::policy
