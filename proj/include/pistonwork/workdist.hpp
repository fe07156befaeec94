#pragma once

#include <cstdint>
#include <vector>

#include "pistonwork/fock.hpp"
#include "pistonwork/piston.hpp"
#include "pistonwork/types.hpp"

namespace pistonwork {

struct WorkPoint {
    double w = 0.0;
    double p = 0.0;
};

struct WorkDistribution {
    std::vector<WorkPoint> support;  // strictly increasing w, zero-probability transitions omitted
    std::vector<double> cumulative;  // running sum of p over support
    double mass_deficit = 0.0;       // truncation loss plus dropped thermal configs
    double dropped_mass = 0.0;       // thermal configs below kDropProbability
    int dim = 0;

    double total_mass() const { return cumulative.empty() ? 0.0 : cumulative.back(); }
};

inline constexpr double kDropProbability = 1e-12;
inline constexpr double kMergeTolerance = 1e-6;

// sum n_f E_f(lambda_tau) - sum n_i E_i(lambda0)
double work_value(const OccupationVector& i_occ, const OccupationVector& f_occ,
                  const PistonParams& params);

// Thermal initial ensemble on the matrix's levels times |Per|^2 transitions.
WorkDistribution work_distribution(const PistonParams& params, const ComplexMatrix& lambda);

// Builds the matrix by fidelity truncation first.
WorkDistribution work_distribution(const PistonParams& params, double threshold);

// chi(w): total probability at support points <= w.
double cumulative(const WorkDistribution& wd, double w);

// sum p exp(-beta W) * Z(lambda0) / Z(lambda_tau) - 1, partition functions on wd.dim levels.
double jarzynski_deviation(const WorkDistribution& wd, const PistonParams& params);

struct NoiseStudy {
    std::vector<double> eval_points;
    std::vector<double> mean_cdf;
    std::vector<double> std_cdf;  // sample standard deviation over trials
    int dim = 0;
    double projection_residual = 0.0;
};

// Decompose the unitarized matrix once, then per trial perturb all angles by
// U(-epsilon, epsilon), resynthesize and rebuild chi at eval_points. Trial t
// draws from derive_seed(seed, t).
NoiseStudy noise_study(const PistonParams& params, const ComplexMatrix& lambda, double epsilon,
                       int trials, const std::vector<double>& eval_points, std::uint64_t seed);

NoiseStudy noise_study(const PistonParams& params, double threshold, double epsilon, int trials,
                       const std::vector<double>& eval_points, std::uint64_t seed);

} // namespace pistonwork
