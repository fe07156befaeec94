#include "pistonwork/thermal.hpp"

#include <cmath>

#include "pistonwork/error.hpp"

namespace pistonwork {

double occupation_energy(const OccupationVector& occ, double lambda) {
    double e = 0.0;
    for (int k = 0; k < occ.modes(); ++k)
        if (occ.counts[k] != 0) e += occ.counts[k] * eigenenergy(k + 1, lambda);
    return e;
}

double partition_function_at(const PistonParams& params, int d, double lambda) {
    params.validate();
    if (d < 1) throw DomainError("partition_function: d must be >= 1");
    double z = 0.0;
    for (const auto& occ : enumerate_occupations(params.n_bosons, d))
        z += std::exp(-params.beta * occupation_energy(occ, lambda));
    return z;
}

double partition_function(const PistonParams& params, int d) {
    return partition_function_at(params, d, params.lambda0);
}

double initial_probability(const OccupationVector& i_occ, const PistonParams& params, int d) {
    if (i_occ.modes() != d) throw DomainError("initial_probability: occupation length must equal d");
    if (i_occ.total() != params.n_bosons)
        throw DomainError("initial_probability: occupation total must equal n_bosons");
    const double z = partition_function(params, d);
    return std::exp(-params.beta * occupation_energy(i_occ, params.lambda0)) / z;
}

ThermalEnsemble thermal_ensemble(const PistonParams& params, int d) {
    params.validate();
    if (d < 1) throw DomainError("thermal_ensemble: d must be >= 1");
    ThermalEnsemble ens;
    auto occs = enumerate_occupations(params.n_bosons, d);
    ens.configs.reserve(occs.size());
    for (auto& occ : occs) {
        const double w = std::exp(-params.beta * occupation_energy(occ, params.lambda0));
        ens.partition_value += w;
        ens.configs.emplace_back(std::move(occ), w);
    }
    for (auto& [occ, p] : ens.configs) p /= ens.partition_value;
    return ens;
}

} // namespace pistonwork
