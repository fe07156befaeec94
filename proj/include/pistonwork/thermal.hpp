#pragma once

#include <utility>
#include <vector>

#include "pistonwork/fock.hpp"
#include "pistonwork/piston.hpp"

namespace pistonwork {

struct ThermalEnsemble {
    std::vector<std::pair<OccupationVector, double>> configs;
    double partition_value = 0.0;
};

// Total energy sum_k n_k E_k at wall length `lambda`.
double occupation_energy(const OccupationVector& occ, double lambda);

// Z = sum over all N-boson configurations on d levels of exp(-beta E) at lambda0.
double partition_function(const PistonParams& params, int d);

// Same sum at an arbitrary wall length (used for Z at lambda_tau).
double partition_function_at(const PistonParams& params, int d, double lambda);

double initial_probability(const OccupationVector& i_occ, const PistonParams& params, int d);

ThermalEnsemble thermal_ensemble(const PistonParams& params, int d);

} // namespace pistonwork
