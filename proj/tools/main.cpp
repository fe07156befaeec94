// pistonwork: work statistics of bosons in an expanding piston, via permanents
// and a simulated programmable interferometer. Units M = hbar = k_B = 1.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pistonwork/commands.hpp"
#include "pistonwork/config.hpp"
#include "pistonwork/io.hpp"

namespace pw = pistonwork;

namespace {

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            throw pw::DomainError("bad grid value '" + item + "'");
        }
        if (used != item.size()) throw pw::DomainError("bad grid value '" + item + "'");
        out.push_back(value);
    }
    if (out.empty()) throw pw::DomainError("empty grid");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pistonwork - boson work distributions in an expanding piston"};
    app.require_subcommand(1);

    std::string config_path, out_dir, grid_text, variable;
    std::optional<std::uint64_t> seed, samples;
    std::optional<double> threshold, epsilon;
    std::optional<int> trials, dim;

    app.add_option("--config", config_path, "JSON run configuration");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--threshold", threshold, "unitarity fidelity threshold for truncation");
    app.add_option("--samples", samples, "number of simulated coincidence events");
    app.add_option("--epsilon", epsilon, "noise half-width in radians");
    app.add_option("--trials", trials, "noise trials");
    app.add_option("--dim", dim, "fixed matrix dimension (skips truncation)");

    auto* amplitudes = app.add_subcommand("amplitudes", "build the single-particle amplitude matrix");
    std::string matrix_path, program_path;
    auto* decompose = app.add_subcommand("decompose", "compile a matrix file into a beam-splitter mesh");
    decompose->add_option("matrix", matrix_path, "amplitude matrix JSON")->required();
    auto* workdist = app.add_subcommand("workdist", "work distribution CSV (W,prob,cdf)");
    auto* sweep = app.add_subcommand("sweep", "truncation dimension versus v or lambda_tau");
    sweep->add_option("--variable", variable, "v or lambda_tau");
    sweep->add_option("--grid", grid_text, "comma-separated values");
    auto* sample = app.add_subcommand("sample", "simulate coincidence counting through a program");
    sample->add_option("program", program_path, "interferometer program JSON")->required();
    auto* noise = app.add_subcommand("noise", "cumulative work distribution under angle noise");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : pw::cli::kConfigError;
    }

    return pw::cli::run_guarded(
        [&]() -> int {
            pw::RunConfig config;
            if (!config_path.empty()) config = pw::config_from_json(pw::io::read_json_file(config_path));
            if (!out_dir.empty()) config.output_dir = out_dir;
            if (seed) config.seed = *seed;
            if (threshold) config.fidelity_threshold = *threshold;
            if (samples) config.n_samples = *samples;
            if (epsilon) config.epsilon = *epsilon;
            if (trials) config.trials = *trials;
            if (dim) config.dim = *dim;
            if (!variable.empty()) config.sweep_variable = variable;
            if (!grid_text.empty()) config.sweep_grid = parse_grid(grid_text);
            config.validate();

            if (*amplitudes) return pw::cli::cmd_amplitudes(config, std::cout);
            if (*decompose) return pw::cli::cmd_decompose(config, matrix_path, std::cout);
            if (*workdist) return pw::cli::cmd_workdist(config, std::cout);
            if (*sweep) return pw::cli::cmd_sweep(config, std::cout);
            if (*sample) return pw::cli::cmd_sample(config, program_path, std::cout);
            if (*noise) return pw::cli::cmd_noise(config, std::cout);
            return pw::cli::kConfigError;
        },
        std::cerr);
}
