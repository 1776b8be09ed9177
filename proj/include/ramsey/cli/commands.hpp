// Subcommands of the ramsey tool and the experiment drivers behind them.
#pragma once

#include "ramsey/cli/config_file.hpp"
#include "ramsey/cli/csv.hpp"
#include "ramsey/core/params.hpp"
#include "ramsey/policy/config.hpp"
#include "ramsey/sim/harness.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitConfig = 2;

struct CommandOptions {
    std::optional<std::filesystem::path> config;
    std::filesystem::path out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::size_t j_max = 32;
};

ConfigFile load_config(const CommandOptions& opts);

// ---- mi-surface ----

struct MiSurfaceConfig {
    double prior_mean = 0.0;
    double prior_std = 2.1213203435596424;
    sim::PriorShape prior_shape = sim::PriorShape::Gaussian;
    double theta = 0.0;
    std::vector<CoherenceTime> coherence_times{CoherenceTime(2.0), CoherenceTime(5.0),
                                               CoherenceTime(10.0), CoherenceTime::infinite()};
    double tau_min = 0.0;
    double tau_max = 20.0;
    std::size_t tau_points = 401;
    double b_min = -20.0;
    double b_max = 20.0;
    std::size_t n_points = std::size_t{1} << 14;
};

MiSurfaceConfig mi_surface_config(const ConfigFile& file);

struct MiRow {
    CoherenceTime coherence_time;
    double tau;
    double theta;
    double mutual_information;
};

/// Rows ordered by coherence time (as configured), then tau ascending.
std::vector<MiRow> compute_mi_surface(const MiSurfaceConfig& cfg);
CsvTable mi_surface_table(const std::vector<MiRow>& rows);

// ---- compare ----

struct CompareConfig {
    sim::SimConfig sim;
    std::vector<policy::PolicyKind> policies{policy::PolicyKind::Random, policy::PolicyKind::Kpe,
                                             policy::PolicyKind::VarianceMin,
                                             policy::PolicyKind::MyopicEntropy};
};

/// Defaults: T = 10, tau in [5/128, 5], 30 steps, 8 trials, prior std 3/sqrt(2).
CompareConfig compare_config(const ConfigFile& file, std::optional<std::uint64_t> seed_override);

struct PolicyRun {
    policy::PolicyKind kind;
    std::vector<sim::Trajectory> trajectories;
    sim::EnsembleSummary summary;
};

/// Every policy sees the same master seed, hence the same true fields.
std::vector<PolicyRun> run_compare(const CompareConfig& cfg);
CsvTable summary_table(const sim::EnsembleSummary& s);
CsvTable trajectory_table(const std::vector<sim::Trajectory>& trajectories);

// ---- validate-alpha ----

struct AlphaCheckRow {
    std::size_t j;
    double closed_value;
    double quadrature_value;
    double abs_diff;
    bool ok;
};

struct AlphaCheck {
    std::vector<AlphaCheckRow> rows;
    bool passed = false;
};

/// Closed series against quadrature for j = 1..j_max: sign, monotonicity, agreement.
AlphaCheck validate_alpha(std::size_t j_max, double tolerance = 1e-8);

// ---- kpe-check ----

struct KpeCheckConfig {
    policy::PolicyConfig policy = default_policy();
    std::size_t n_measurements = 6;
    std::vector<Outcome> outcomes = std::vector<Outcome>(6, Outcome::Zero);
    double b_min = -32.0 * kPi;
    double b_max = 32.0 * kPi;
    std::size_t n_points = std::size_t{1} << 14;
    std::size_t first_checked = 2;
    std::size_t last_checked = 6;

    static policy::PolicyConfig default_policy();
};

KpeCheckConfig kpe_check_config(const ConfigFile& file);

struct KpeCheckRow {
    std::size_t step;
    double kpe_tau;
    double kpe_theta;
    double myopic_tau;
    double myopic_theta;
    double tau_cell_delta;
    double theta_cell_delta;
    bool checked;
};

struct KpeCheck {
    std::vector<KpeCheckRow> rows;
    bool passed = false;
    std::optional<std::size_t> first_divergence;
};

/// Applies the scripted outcomes to KPE measurements on a uniform prior and
/// compares each KPE prediction with the myopic argmax on the same posterior.
KpeCheck run_kpe_check(const KpeCheckConfig& cfg);
CsvTable kpe_check_table(const KpeCheck& check);

// ---- entry points; each returns an exit code ----

int cmd_mi_surface(const CommandOptions& opts, std::ostream& log);
int cmd_compare(const CommandOptions& opts, std::ostream& log);
int cmd_validate_alpha(const CommandOptions& opts, std::ostream& log);
int cmd_kpe_check(const CommandOptions& opts, std::ostream& log);

} // namespace ramsey::cli
