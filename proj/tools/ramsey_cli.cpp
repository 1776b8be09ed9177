// ramsey: adaptive Ramsey magnetometry experiments.
#include "ramsey/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    using namespace ramsey::cli;

    CLI::App app{"Adaptive measurement scheduling for Ramsey magnetometry"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CommandOptions opts;
    std::string config;
    std::string out = ".";
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool with_seed) {
        sub->add_option("--config", config, "key = value configuration file")->check(CLI::ExistingFile);
        sub->add_option("--out", out, "output directory")->capture_default_str();
        if (with_seed)
            sub->add_option("--seed", seed, "override master_seed");
    };

    auto* mi = app.add_subcommand("mi-surface", "mutual information over (T, tau)");
    add_common(mi, false);
    auto* compare = app.add_subcommand("compare", "ensemble comparison of scheduling policies");
    add_common(compare, true);
    auto* alpha = app.add_subcommand("validate-alpha", "closed alpha series against quadrature");
    alpha->add_option("--out", out, "output directory")->capture_default_str();
    alpha->add_option("--j-max", opts.j_max, "largest j to check")->capture_default_str();
    auto* kpe = app.add_subcommand("kpe-check", "myopic argmax against the KPE schedule");
    add_common(kpe, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (!config.empty())
        opts.config = config;
    opts.out_dir = out;
    if (compare->count("--seed"))
        opts.seed = seed;

    if (*mi)
        return cmd_mi_surface(opts, std::cerr);
    if (*compare)
        return cmd_compare(opts, std::cerr);
    if (*alpha)
        return cmd_validate_alpha(opts, std::cerr);
    return cmd_kpe_check(opts, std::cerr);
}
