#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgfrft/cli/commands.hpp"

namespace {

using hgfrft::cli::CommandOptions;

std::pair<double, double> as_range(const std::vector<double>& v)
{
    return {v.at(0), v.at(1)};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Joint Hilbert-space / graph fractional Fourier transforms"};
    app.require_subcommand(1);

    std::string config;
    std::string out;
    std::uint64_t seed = 0;
    hgfrft::Index samples = 0;
    std::vector<double> alpha_range;
    std::vector<double> beta_range;
    double coarse_step = 0.0;
    double fine_step = 0.0;

    for (const auto& name : hgfrft::cli::command_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config, "Experiment config (JSON)")->check(CLI::ExistingFile);
        sub->add_option("--out", out, "Output directory");
        sub->add_option("--seed", seed, "Random seed");
        if (name == "sample-greedy" || name == "grid-search") {
            sub->add_option("--samples", samples, "Number of samples / support size")->check(CLI::PositiveNumber);
        }
        if (name == "grid-search") {
            sub->add_option("--alpha-range", alpha_range, "alpha lo hi")->expected(2);
            sub->add_option("--beta-range", beta_range, "beta lo hi")->expected(2);
            sub->add_option("--coarse-step", coarse_step, "Coarse grid step")->check(CLI::PositiveNumber);
            sub->add_option("--fine-step", fine_step, "Fine grid step")->check(CLI::PositiveNumber);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : hgfrft::cli::kExitConfig;
    }

    CLI::App* sub = app.get_subcommands().front();
    CommandOptions opts;
    if (sub->count("--config")) opts.config = config;
    if (sub->count("--out")) opts.out = out;
    if (sub->count("--seed")) opts.seed = seed;
    if (sub->get_option_no_throw("--samples") && sub->count("--samples")) opts.samples = samples;
    if (sub->get_option_no_throw("--alpha-range") && sub->count("--alpha-range")) {
        opts.alpha_range = as_range(alpha_range);
    }
    if (sub->get_option_no_throw("--beta-range") && sub->count("--beta-range")) {
        opts.beta_range = as_range(beta_range);
    }
    if (sub->get_option_no_throw("--coarse-step") && sub->count("--coarse-step")) opts.coarse_step = coarse_step;
    if (sub->get_option_no_throw("--fine-step") && sub->count("--fine-step")) opts.fine_step = fine_step;

    for (const auto* range : {&opts.alpha_range, &opts.beta_range}) {
        if (*range && (*range)->first > (*range)->second) {
            std::cerr << "error: range lo must not exceed hi\n";
            return hgfrft::cli::kExitConfig;
        }
    }
    return hgfrft::cli::run_command(sub->get_name(), opts, std::cout, std::cerr);
}
