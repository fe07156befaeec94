#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pistonwork/fock.hpp"
#include "pistonwork/piston.hpp"

namespace pistonwork {

// Defaults reproduce the three-boson worked example (lambda0 = 1, lambda_tau = 2,
// v = 0.4, beta = 0.1). Units: M = hbar = k_B = 1.
struct RunConfig {
    PistonParams params;
    double fidelity_threshold = 0.995;
    // Fixed matrix dimension; unset means "truncate to fidelity_threshold".
    std::optional<int> dim;
    std::uint64_t seed = 1;
    std::uint64_t n_samples = 100000;
    double epsilon = 0.01;
    int trials = 100;
    std::string output_dir = ".";
    std::vector<double> eval_points{-48, -42, -36, -27, -16, -8, 4};
    // Sampler input |T>; unset means (N, 0, ..., 0).
    std::optional<OccupationVector> input;
    std::string sweep_variable = "v";
    std::vector<double> sweep_grid;

    void validate() const;
};

// Unknown keys are rejected so typos surface as configuration errors.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
nlohmann::json config_to_json(const RunConfig& c);

} // namespace pistonwork
