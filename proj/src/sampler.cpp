#include "pistonwork/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "pistonwork/error.hpp"
#include "pistonwork/permanent.hpp"
#include "pistonwork/rng.hpp"

namespace pistonwork {

OutcomeDistribution output_distribution(const ComplexMatrix& m, const OccupationVector& input) {
    if (m.rows() != m.cols()) throw DomainError("output_distribution: matrix must be square");
    if (input.modes() != m.rows())
        throw DomainError("output_distribution: input length must equal the mode count");
    const int n = input.total();
    if (n < 1) throw DomainError("output_distribution: need at least one photon");

    const ComplexMatrix transfer = m.transpose();
    double input_norm = 1.0;
    for (int t : input.counts) input_norm *= factorial(t);

    OutcomeDistribution dist;
    dist.input = input;
    for (auto& s : enumerate_occupations(n, input.modes())) {
        // Rows by output occupation, columns by input occupation.
        const ComplexMatrix sub = expand_submatrix(transfer, input, s);
        double norm = input_norm;
        for (int c : s.counts) norm *= factorial(c);
        const double p = std::norm(permanent_ryser(sub)) / norm;
        dist.total_mass += p;
        dist.outcomes.emplace_back(std::move(s), p);
    }
    return dist;
}

SampleCounts sample_outcomes(const OutcomeDistribution& dist, std::uint64_t n_samples,
                             std::uint64_t seed) {
    if (dist.outcomes.empty()) throw DomainError("sample_outcomes: empty distribution");
    if (n_samples < 1) throw DomainError("sample_outcomes: need at least one sample");
    std::vector<double> cdf;
    cdf.reserve(dist.outcomes.size());
    double acc = 0.0;
    for (const auto& [occ, p] : dist.outcomes) {
        if (p < 0.0 || !std::isfinite(p)) throw DomainError("sample_outcomes: invalid probability");
        acc += p;
        cdf.push_back(acc);
    }
    if (!(acc > 0.0)) throw DomainError("sample_outcomes: distribution has zero mass");

    SampleCounts out;
    out.n_samples = n_samples;
    out.seed = seed;
    out.total_mass = dist.total_mass;
    out.counts.assign(dist.outcomes.size(), 0);
    for (const auto& [occ, p] : dist.outcomes) out.outcomes.push_back(occ);

    Rng rng(seed);
    for (std::uint64_t s = 0; s < n_samples; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        // Zero-probability tail entries share the final cdf value; never land past the end.
        std::size_t k = std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
        while (dist.outcomes[k].second == 0.0 && k > 0) --k;
        ++out.counts[k];
    }
    return out;
}

double estimate_probability(const SampleCounts& counts, const OccupationVector& target,
                            std::uint64_t n_samples) {
    if (n_samples == 0) throw DomainError("estimate_probability: n_samples must be >= 1");
    auto it = std::find(counts.outcomes.begin(), counts.outcomes.end(), target);
    if (it == counts.outcomes.end())
        throw DomainError("estimate_probability: target outside the enumerated support");
    return static_cast<double>(counts.counts[it - counts.outcomes.begin()]) /
           static_cast<double>(n_samples);
}

double total_variation(const OutcomeDistribution& dist, const SampleCounts& counts) {
    if (dist.outcomes.size() != counts.counts.size())
        throw DomainError("total_variation: counts do not match the distribution");
    double mass = 0.0;
    for (const auto& [occ, p] : dist.outcomes) mass += p;
    double tv = 0.0;
    for (std::size_t k = 0; k < counts.counts.size(); ++k) {
        const double freq = static_cast<double>(counts.counts[k]) / counts.n_samples;
        tv += std::abs(freq - dist.outcomes[k].second / mass);
    }
    return 0.5 * tv;
}

} // namespace pistonwork
