#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pistonwork/fock.hpp"
#include "pistonwork/interferometer.hpp"
#include "pistonwork/piston.hpp"
#include "pistonwork/sampler.hpp"
#include "pistonwork/thermal.hpp"
#include "pistonwork/workdist.hpp"

namespace pistonwork::io {

using nlohmann::json;

// All readers throw DomainError on malformed or inconsistent documents.

json params_to_json(const PistonParams& p);
PistonParams params_from_json(const json& j);

// { "dim", "fidelity", "j_max", "params", "entries": [[[re, im], ...], ...] } row-major.
json matrix_to_json(const AmplitudeMatrix& m);
AmplitudeMatrix matrix_from_json(const json& j);

json program_to_json(const InterferometerProgram& p);
InterferometerProgram program_from_json(const json& j);

json occupation_to_json(const OccupationVector& occ);
OccupationVector occupation_from_json(const json& j);

// [ { "occupation": [...], "prob": p }, ... ]
json ensemble_to_json(const ThermalEnsemble& e);

// { "seed", "n_samples", "total_mass", "rng", "counts": [ { "occupation", "count", "frequency", "probability" } ] }
json counts_to_json(const SampleCounts& c, const OutcomeDistribution& dist);

// Shortest decimal that reads back to the same double.
std::string format_double(double x);

void write_workdist_csv(std::ostream& os, const WorkDistribution& wd);
void write_noise_csv(std::ostream& os, const NoiseStudy& ns);

struct SweepRow {
    double value = 0.0;
    int dim = 0;
};
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace pistonwork::io
