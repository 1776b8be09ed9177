// Config parsing, CSV output and subcommands
#include "ramsey/cli/commands.hpp"
#include "ramsey/cli/config_file.hpp"
#include "ramsey/cli/csv.hpp"
#include "ramsey/core/errors.hpp"
#include "ramsey/fourier/comb_analysis.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace ramsey;
using namespace ramsey::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("ramsey_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
    const auto path = dir / "run.cfg";
    std::ofstream(path) << text;
    return path;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(slurp(p));
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

// =============================================================================
// ConfigFile
// =============================================================================

TEST(ConfigFile, ParsesKeyValuesAndComments) {
    const auto c = ConfigFile::parse("# header\n prior_std = 2.5  # trailing\n\npolicy=kpe\n");
    EXPECT_EQ(c.entries().size(), 2u);
    EXPECT_EQ(c.number("prior_std", 0.0), 2.5);
    EXPECT_EQ(c.text("policy", ""), "kpe");
    EXPECT_EQ(c.number("missing", 7.0), 7.0);
}

TEST(ConfigFile, CoherenceAcceptsInf) {
    const auto c = ConfigFile::parse("a = inf\nb = 10\nc = -1\n");
    EXPECT_TRUE(c.coherence("a", CoherenceTime(1.0)).is_infinite());
    EXPECT_EQ(c.coherence("b", CoherenceTime(1.0)).value(), 10.0);
    EXPECT_THROW(c.coherence("c", CoherenceTime(1.0)), ConfigError);
}

TEST(ConfigFile, ErrorsNameTheKey) {
    try {
        ConfigFile::parse("prior_std = abc\n").number("prior_std", 1.0);
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.key(), "prior_std");
    }
    try {
        ConfigFile::parse("colour = red\n").require_known({"prior_std"});
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.key(), "colour");
    }
    EXPECT_THROW(ConfigFile::parse("n_points = 12.5\n").count("n_points", 1), ConfigError);
    EXPECT_THROW(ConfigFile::parse("a = 1\na = 2\n"), ConfigError);
    EXPECT_THROW(ConfigFile::parse("just words\n"), ConfigError);
    EXPECT_THROW(ConfigFile::parse("a =\n"), ConfigError);
}

TEST(ConfigFile, Lists) {
    const auto c = ConfigFile::parse("ts = 2, 5 ,10 inf\n");
    EXPECT_EQ(c.words("ts", {}), (std::vector<std::string>{"2", "5", "10", "inf"}));
    EXPECT_EQ(c.words("none", {"x"}), std::vector<std::string>{"x"});
}

// =============================================================================
// CSV
// =============================================================================

TEST(Csv, SeventeenDigits) {
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(INFINITY), "inf");
    EXPECT_EQ(format_number(NAN), "nan");
    EXPECT_EQ(std::stod(format_number(std::numbers::pi)), std::numbers::pi);
}

TEST(Csv, TableLayout) {
    CsvTable t({"a", "b"});
    t.add_row({"1", "2"});
    EXPECT_EQ(t.str(), "a,b\n1,2\n");
    EXPECT_THROW(t.add_row({"1"}), std::invalid_argument);
}

TEST(Csv, LibraryTables) {
    const auto a = fourier::alpha_series_quadrature(2);
    EXPECT_EQ(alpha_table(a).rows(), 3u);
    EXPECT_NE(alpha_table(a).str().find("quadrature"), std::string::npos);
    const auto comb = fourier::kpe_posterior_comb(1, 1.0);
    EXPECT_EQ(comb_table(comb).str().substr(0, 9), "xi,re,im\n");
    const auto d = FieldDistribution::uniform(FieldGrid(0.0, 1.0, 3));
    EXPECT_EQ(distribution_table(d).rows(), 3u);
}

// =============================================================================
// Config builders
// =============================================================================

TEST(CompareConfig, DefaultsFollowReferenceRegime) {
    const auto c = compare_config(ConfigFile{}, std::nullopt);
    EXPECT_EQ(c.sim.coherence_time.value(), 10.0);
    EXPECT_EQ(c.sim.policy.tau_max, 5.0);
    EXPECT_EQ(c.sim.n_measurements, 30u);
    EXPECT_EQ(c.sim.n_realizations, 8u);
    EXPECT_NEAR(c.sim.prior_std, 3.0 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(c.policies.size(), 4u);
}

TEST(CompareConfig, SeedOverrideWins) {
    const auto file = ConfigFile::parse("master_seed = 5\n");
    EXPECT_EQ(compare_config(file, std::nullopt).sim.master_seed, 5u);
    EXPECT_EQ(compare_config(file, 9u).sim.master_seed, 9u);
}

TEST(CompareConfig, RejectsBadValues) {
    EXPECT_THROW(compare_config(ConfigFile::parse("policy = greedy\n"), std::nullopt), ConfigError);
    EXPECT_THROW(compare_config(ConfigFile::parse("tau_min = 6\n"), std::nullopt), ConfigError);
    EXPECT_THROW(compare_config(ConfigFile::parse("prior_std = 9\n"), std::nullopt), ConfigError);
    EXPECT_THROW(compare_config(ConfigFile::parse("bogus = 1\n"), std::nullopt), ConfigError);
    const auto c = compare_config(ConfigFile::parse("true_field = 1.5\npolicies = kpe random\n"), std::nullopt);
    EXPECT_EQ(*c.sim.true_field, 1.5);
    EXPECT_EQ(c.policies.size(), 2u);
}

TEST(KpeCheckConfig, ParsesOutcomes) {
    const auto c = kpe_check_config(ConfigFile::parse("outcomes = 0 1 0 1 0 1\n"));
    EXPECT_EQ(c.outcomes[1], Outcome::One);
    EXPECT_THROW(kpe_check_config(ConfigFile::parse("outcomes = 0 2\n")), ConfigError);
    EXPECT_THROW(kpe_check_config(ConfigFile::parse("n_measurements = 6\noutcomes = 0 1\n")), ConfigError);
}

// =============================================================================
// Commands
// =============================================================================

TEST(Commands, MiSurfaceWritesRowsAndManifest) {
    const auto dir = scratch("mi");
    CommandOptions o;
    o.out_dir = dir;
    o.config = write_config(dir, "tau_points = 21\nn_points = 2049\ncoherence_times = 2, inf\n");
    std::ostringstream log;
    ASSERT_EQ(cmd_mi_surface(o, log), kExitOk) << log.str();
    const auto rows = read_csv(dir / "mi_surface.csv");
    ASSERT_EQ(rows.size(), 1u + 2 * 21);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"T", "tau", "theta", "mutual_information_nats"}));
    EXPECT_EQ(rows.back()[0], "inf");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double mi = std::stod(rows[i][3]);
        EXPECT_GE(mi, -1e-10);
        EXPECT_LE(mi, std::numbers::ln2 + 1e-10);
    }
    const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(manifest["command"], "mi-surface");
    for (const auto& a : manifest["artifacts"])
        EXPECT_TRUE(fs::exists(a.get<std::string>()));
}

TEST(Commands, ConfigErrorExitCode) {
    const auto dir = scratch("bad");
    CommandOptions o;
    o.out_dir = dir / "out";
    o.config = write_config(dir, "colour = red\n");
    std::ostringstream log;
    EXPECT_EQ(cmd_mi_surface(o, log), kExitConfig);
    EXPECT_NE(log.str().find("colour"), std::string::npos);
    EXPECT_EQ(cmd_compare(o, log), kExitConfig);
    EXPECT_EQ(cmd_kpe_check(o, log), kExitConfig);
    EXPECT_FALSE(fs::exists(dir / "out"));
    o.config = dir / "missing.cfg";
    EXPECT_EQ(cmd_compare(o, log), kExitConfig);
}

TEST(Commands, ValidateAlpha) {
    const auto dir = scratch("alpha");
    CommandOptions o;
    o.out_dir = dir;
    o.j_max = 32;
    std::ostringstream log;
    ASSERT_EQ(cmd_validate_alpha(o, log), kExitOk) << log.str();
    const auto rows = read_csv(dir / "alpha_validation.csv");
    ASSERT_EQ(rows.size(), 33u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"j", "closed_value", "quadrature_value", "abs_diff"}));
    double previous = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LT(std::stod(rows[i][3]), 1e-8);
        const double v = std::stod(rows[i][1]);
        EXPECT_LT(v, 0.0);
        EXPECT_GT(v, previous);
        previous = v;
    }
    o.j_max = 0;
    EXPECT_EQ(cmd_validate_alpha(o, log), kExitConfig);
}

TEST(Commands, ValidateAlphaFlagsFailures) {
    const auto check = validate_alpha(3, 1e-30);
    EXPECT_FALSE(check.passed);
    EXPECT_EQ(check.rows.size(), 3u);
}

TEST(Commands, KpeCheckDivergesForShortCoherence) {
    const auto dir = scratch("kpe_t");
    CommandOptions o;
    o.out_dir = dir;
    o.config = write_config(dir, "coherence_time = 1\nn_points = 4096\n");
    std::ostringstream log;
    EXPECT_EQ(cmd_kpe_check(o, log), kExitValidation);
    EXPECT_NE(log.str().find("divergence"), std::string::npos);
    EXPECT_EQ(read_csv(dir / "kpe_check.csv").size(), 7u);
}

TEST(Commands, CompareIsByteStable) {
    const auto dir = scratch("cmp");
    const auto cfg = write_config(dir, "n_measurements = 4\nn_realizations = 3\nn_points = 2048\n"
                                       "tau_grid_size = 8\ntheta_grid_size = 8\n");
    CommandOptions o;
    o.config = cfg;
    o.out_dir = dir / "a";
    std::ostringstream log;
    ASSERT_EQ(cmd_compare(o, log), kExitOk) << log.str();
    o.out_dir = dir / "b";
    ASSERT_EQ(cmd_compare(o, log), kExitOk);
    for (const char* name : {"random", "kpe", "variance", "myopic"}) {
        const std::string file = std::string("compare_") + name + ".csv";
        ASSERT_TRUE(fs::exists(dir / "a" / file)) << file;
        EXPECT_EQ(slurp(dir / "a" / file), slurp(dir / "b" / file));
        const auto rows = read_csv(dir / "a" / file);
        EXPECT_EQ(rows.size(), 5u);
        EXPECT_EQ(rows[0], (std::vector<std::string>{"step", "mean_entropy", "std_entropy",
                                                     "mean_posterior_std", "std_posterior_std"}));
    }
    const auto manifest = nlohmann::json::parse(slurp(dir / "a" / "manifest.json"));
    EXPECT_EQ(manifest["config"]["n_realizations"], 3);
    EXPECT_EQ(manifest["artifacts"].size(), 8u);
    for (const auto& a : manifest["artifacts"])
        EXPECT_TRUE(fs::exists(a.get<std::string>()));
    // Same seed means the same true fields for every policy.
    const auto r = read_csv(dir / "a" / "compare_random_trials.csv");
    const auto k = read_csv(dir / "a" / "compare_kpe_trials.csv");
    EXPECT_EQ(r[1][2], k[1][2]);
}
