#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pistonwork/fock.hpp"
#include "pistonwork/types.hpp"

namespace pistonwork {

// Exact P(S | T) over every outcome S with the input's photon number.
struct OutcomeDistribution {
    OccupationVector input;
    std::vector<std::pair<OccupationVector, double>> outcomes;
    double total_mass = 0.0;  // before any renormalization
};

// The programmed matrix Lambda maps outcomes to columns and the input to rows
// (input |T> <-> final F, target |S> <-> initial I), so the device transfer
// matrix is Lambda^T and P(S|T) = |Per(Lambda^T[S rows, T cols])|^2 / (prod s! prod t!).
OutcomeDistribution output_distribution(const ComplexMatrix& m, const OccupationVector& input);

struct SampleCounts {
    std::vector<OccupationVector> outcomes;  // same order as the distribution
    std::vector<std::uint64_t> counts;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    double total_mass = 0.0;  // pre-normalization mass of the sampled distribution
};

// Categorical draws (inverse CDF) from the distribution renormalized over its support.
SampleCounts sample_outcomes(const OutcomeDistribution& dist, std::uint64_t n_samples,
                             std::uint64_t seed);

// count(target) / n_samples. Throws if the target is not in the support.
double estimate_probability(const SampleCounts& counts, const OccupationVector& target,
                            std::uint64_t n_samples);

// 0.5 * sum |freq - p / total_mass|
double total_variation(const OutcomeDistribution& dist, const SampleCounts& counts);

} // namespace pistonwork
