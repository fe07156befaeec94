#include "pistonwork/config.hpp"

#include <cmath>
#include <set>

#include "pistonwork/error.hpp"
#include "pistonwork/io.hpp"

namespace pistonwork {

void RunConfig::validate() const {
    params.validate();
    if (!(fidelity_threshold > 0.0 && fidelity_threshold <= 1.0))
        throw DomainError("fidelity_threshold must lie in (0, 1]");
    if (dim && *dim < 1) throw DomainError("dim must be >= 1");
    if (n_samples < 1) throw DomainError("n_samples must be >= 1");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be >= 0");
    if (trials < 2) throw DomainError("trials must be >= 2");
    if (sweep_variable != "v" && sweep_variable != "lambda_tau")
        throw DomainError("sweep variable must be 'v' or 'lambda_tau'");
    if (input) {
        if (input->total() != params.n_bosons)
            throw DomainError("input occupation must hold n_bosons photons");
        for (int c : input->counts)
            if (c < 0) throw DomainError("input occupation must be non-negative");
    }
}

RunConfig config_from_json(const nlohmann::json& j, RunConfig c) {
    if (!j.is_object()) throw DomainError("config must be a JSON object");
    static const std::set<std::string> known{
        "lambda0", "lambda_tau", "v",       "beta",         "n_bosons",    "fidelity_threshold",
        "dim",     "seed",       "n_samples", "epsilon",    "trials",      "output_dir",
        "eval_points", "input",  "sweep_variable", "sweep_grid"};
    for (const auto& [key, value] : j.items())
        if (!known.contains(key)) throw DomainError("unknown config key '" + key + "'");

    try {
        if (j.contains("lambda0")) c.params.lambda0 = j.at("lambda0").get<double>();
        if (j.contains("lambda_tau")) c.params.lambda_tau = j.at("lambda_tau").get<double>();
        if (j.contains("v")) c.params.v = j.at("v").get<double>();
        if (j.contains("beta")) c.params.beta = j.at("beta").get<double>();
        if (j.contains("n_bosons")) c.params.n_bosons = j.at("n_bosons").get<int>();
        if (j.contains("fidelity_threshold")) c.fidelity_threshold = j.at("fidelity_threshold").get<double>();
        if (j.contains("dim")) {
            if (j.at("dim").is_null()) c.dim.reset();
            else c.dim = j.at("dim").get<int>();
        }
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("n_samples")) c.n_samples = j.at("n_samples").get<std::uint64_t>();
        if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
        if (j.contains("trials")) c.trials = j.at("trials").get<int>();
        if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
        if (j.contains("eval_points")) c.eval_points = j.at("eval_points").get<std::vector<double>>();
        if (j.contains("input")) c.input = io::occupation_from_json(j.at("input"));
        if (j.contains("sweep_variable")) c.sweep_variable = j.at("sweep_variable").get<std::string>();
        if (j.contains("sweep_grid")) c.sweep_grid = j.at("sweep_grid").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config: ") + e.what());
    }
    return c;
}

nlohmann::json config_to_json(const RunConfig& c) {
    nlohmann::json j{{"lambda0", c.params.lambda0},
                     {"lambda_tau", c.params.lambda_tau},
                     {"v", c.params.v},
                     {"beta", c.params.beta},
                     {"n_bosons", c.params.n_bosons},
                     {"fidelity_threshold", c.fidelity_threshold},
                     {"seed", c.seed},
                     {"n_samples", c.n_samples},
                     {"epsilon", c.epsilon},
                     {"trials", c.trials},
                     {"output_dir", c.output_dir},
                     {"eval_points", c.eval_points},
                     {"sweep_variable", c.sweep_variable},
                     {"sweep_grid", c.sweep_grid}};
    j["dim"] = c.dim ? nlohmann::json(*c.dim) : nlohmann::json(nullptr);
    if (c.input) j["input"] = io::occupation_to_json(*c.input);
    return j;
}

} // namespace pistonwork
