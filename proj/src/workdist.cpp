#include "pistonwork/workdist.hpp"

#include <algorithm>
#include <cmath>

#include "pistonwork/error.hpp"
#include "pistonwork/interferometer.hpp"
#include "pistonwork/rng.hpp"
#include "pistonwork/thermal.hpp"

namespace pistonwork {

double work_value(const OccupationVector& i_occ, const OccupationVector& f_occ,
                  const PistonParams& params) {
    if (i_occ.total() != f_occ.total())
        throw DomainError("work_value: initial and final boson numbers differ");
    return occupation_energy(f_occ, params.lambda_tau) - occupation_energy(i_occ, params.lambda0);
}

WorkDistribution work_distribution(const PistonParams& params, const ComplexMatrix& lambda) {
    params.validate();
    if (lambda.rows() != lambda.cols() || lambda.rows() == 0)
        throw DomainError("work_distribution: amplitude matrix must be square and non-empty");
    const int d = static_cast<int>(lambda.rows());
    const ThermalEnsemble ensemble = thermal_ensemble(params, d);
    const auto finals = enumerate_occupations(params.n_bosons, d);

    std::vector<double> final_energy;
    final_energy.reserve(finals.size());
    for (const auto& f : finals) final_energy.push_back(occupation_energy(f, params.lambda_tau));

    WorkDistribution wd;
    wd.dim = d;
    std::vector<WorkPoint> raw;
    raw.reserve(ensemble.configs.size() * finals.size());
    for (const auto& [i_occ, p_init] : ensemble.configs) {
        if (p_init < kDropProbability) {
            wd.dropped_mass += p_init;
            continue;
        }
        const double e_init = occupation_energy(i_occ, params.lambda0);
        double reached = 0.0;
        for (std::size_t k = 0; k < finals.size(); ++k) {
            const double p = p_init * transition_probability(lambda, i_occ, finals[k]);
            reached += p;
            if (p > 0.0) raw.push_back({final_energy[k] - e_init, p});
        }
        wd.mass_deficit += p_init - reached;
    }
    wd.mass_deficit += wd.dropped_mass;

    std::stable_sort(raw.begin(), raw.end(),
                     [](const WorkPoint& a, const WorkPoint& b) { return a.w < b.w; });
    for (const WorkPoint& pt : raw) {
        if (!wd.support.empty() && pt.w - wd.support.back().w < kMergeTolerance) {
            wd.support.back().p += pt.p;
        } else {
            wd.support.push_back(pt);
        }
    }
    double acc = 0.0;
    wd.cumulative.reserve(wd.support.size());
    for (const WorkPoint& pt : wd.support) {
        acc += pt.p;
        wd.cumulative.push_back(acc);
    }
    return wd;
}

WorkDistribution work_distribution(const PistonParams& params, double threshold) {
    const AmplitudeMatrix m = truncate_to_fidelity(params, threshold);
    return work_distribution(params, m.entries);
}

double cumulative(const WorkDistribution& wd, double w) {
    auto it = std::upper_bound(wd.support.begin(), wd.support.end(), w,
                               [](double x, const WorkPoint& pt) { return x < pt.w; });
    if (it == wd.support.begin()) return 0.0;
    return wd.cumulative[static_cast<std::size_t>(it - wd.support.begin()) - 1];
}

double jarzynski_deviation(const WorkDistribution& wd, const PistonParams& params) {
    double avg = 0.0;
    for (const WorkPoint& pt : wd.support) avg += pt.p * std::exp(-params.beta * pt.w);
    const double z0 = partition_function_at(params, wd.dim, params.lambda0);
    const double zt = partition_function_at(params, wd.dim, params.lambda_tau);
    return avg * z0 / zt - 1.0;
}

NoiseStudy noise_study(const PistonParams& params, const ComplexMatrix& lambda, double epsilon,
                       int trials, const std::vector<double>& eval_points, std::uint64_t seed) {
    if (trials < 2) throw DomainError("noise_study: need at least 2 trials");
    if (!(epsilon >= 0.0)) throw DomainError("noise_study: epsilon must be >= 0");

    const UnitaryProjection proj = unitary_project(lambda);
    InterferometerProgram program = clements_decompose(proj.unitary);
    program.projection_residual = proj.residual;

    const std::size_t n_pts = eval_points.size();
    std::vector<std::vector<double>> samples(trials, std::vector<double>(n_pts));
    for (int t = 0; t < trials; ++t) {
        const InterferometerProgram noisy = perturb(program, epsilon, derive_seed(seed, t));
        const WorkDistribution wd = work_distribution(params, resynthesize(noisy));
        for (std::size_t k = 0; k < n_pts; ++k) samples[t][k] = cumulative(wd, eval_points[k]);
    }

    NoiseStudy out;
    out.eval_points = eval_points;
    out.dim = program.dim;
    out.projection_residual = proj.residual;
    out.mean_cdf.assign(n_pts, 0.0);
    out.std_cdf.assign(n_pts, 0.0);
    for (std::size_t k = 0; k < n_pts; ++k) {
        // Shifted by the first trial so identical trials give exactly zero spread.
        const double origin = samples[0][k];
        double shift = 0.0;
        for (int t = 0; t < trials; ++t) shift += samples[t][k] - origin;
        shift /= trials;
        double ss = 0.0;
        for (int t = 0; t < trials; ++t) {
            const double dev = samples[t][k] - origin - shift;
            ss += dev * dev;
        }
        out.mean_cdf[k] = origin + shift;
        out.std_cdf[k] = std::sqrt(ss / (trials - 1));
    }
    return out;
}

NoiseStudy noise_study(const PistonParams& params, double threshold, double epsilon, int trials,
                       const std::vector<double>& eval_points, std::uint64_t seed) {
    const AmplitudeMatrix m = truncate_to_fidelity(params, threshold);
    return noise_study(params, m.entries, epsilon, trials, eval_points, seed);
}

} // namespace pistonwork
