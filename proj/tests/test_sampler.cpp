#include <doctest.h>

#include <cmath>

#include "reference_data.hpp"
#include "pistonwork/error.hpp"
#include "pistonwork/fock.hpp"
#include "pistonwork/interferometer.hpp"
#include "pistonwork/sampler.hpp"

using namespace pistonwork;

namespace {

OccupationVector unit(int k, int d) {
    OccupationVector v{std::vector<int>(d, 0)};
    v.counts[k] = 1;
    return v;
}

} // namespace

TEST_CASE("exact output distribution") {
    SUBCASE("identity keeps the input") {
        const OccupationVector in{{1, 0, 2, 0}};
        const auto dist = output_distribution(ComplexMatrix::Identity(4, 4), in);
        CHECK(dist.outcomes.size() == occupation_count(3, 4));
        for (const auto& [s, p] : dist.outcomes) CHECK(p == doctest::Approx(s == in ? 1.0 : 0.0));
        CHECK(dist.total_mass == doctest::Approx(1.0));
    }
    SUBCASE("single photon") {
        const ComplexMatrix lambda = testdata::printed_lambda5();
        for (int i = 0; i < 5; ++i) {
            const auto dist = output_distribution(lambda, unit(i, 5));
            for (int j = 0; j < 5; ++j) {
                double p = -1.0;
                for (const auto& [s, q] : dist.outcomes)
                    if (s == unit(j, 5)) p = q;
                CHECK(p == doctest::Approx(std::norm(lambda(i, j))).epsilon(1e-13));
            }
        }
    }
    SUBCASE("sampling probability equals the transition probability with roles swapped") {
        const ComplexMatrix lambda = testdata::printed_lambda5();
        for (const auto& t : enumerate_occupations(3, 5)) {
            const auto dist = output_distribution(lambda, t);
            for (const auto& [s, p] : dist.outcomes)
                CHECK(std::abs(p - transition_probability(lambda, s, t)) <= 1e-12);
        }
    }
    SUBCASE("truncated matrix reports its mass") {
        const auto dist = output_distribution(testdata::printed_lambda5(), OccupationVector::ground(3, 5));
        CHECK(dist.total_mass < 1.0 + 1e-3);
        CHECK(dist.total_mass > 0.98);
    }
    SUBCASE("unitary conserves probability") {
        const auto dist = output_distribution(random_unitary(5, 3), OccupationVector{{1, 1, 1, 0, 0}});
        CHECK(dist.total_mass == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(output_distribution(ComplexMatrix::Identity(3, 3), OccupationVector{{1, 0}}), DomainError);
}

TEST_CASE("sampling") {
    const ComplexMatrix u = random_unitary(4, 21);
    const OccupationVector in{{1, 1, 0, 0}};
    const auto dist = output_distribution(u, in);

    SUBCASE("deterministic in the seed") {
        const auto a = sample_outcomes(dist, 2000, 99);
        const auto b = sample_outcomes(dist, 2000, 99);
        const auto c = sample_outcomes(dist, 2000, 100);
        CHECK(a.counts == b.counts);
        CHECK(a.counts != c.counts);
        CHECK(a.seed == 99);
        CHECK(a.n_samples == 2000);
    }
    SUBCASE("counts add up") {
        for (std::uint64_t n : {1ULL, 7ULL, 1000ULL}) {
            const auto s = sample_outcomes(dist, n, 5);
            std::uint64_t total = 0;
            for (auto k : s.counts) total += k;
            CHECK(total == n);
            CHECK(s.outcomes.size() == dist.outcomes.size());
        }
    }
    SUBCASE("point mass") {
        const auto pm = output_distribution(ComplexMatrix::Identity(3, 3), OccupationVector{{0, 2, 0}});
        const auto s = sample_outcomes(pm, 500, 1);
        CHECK(estimate_probability(s, OccupationVector{{0, 2, 0}}, 500) == 1.0);
        CHECK(estimate_probability(s, OccupationVector{{2, 0, 0}}, 500) == 0.0);
    }
    SUBCASE("converges in total variation") {
        const auto s = sample_outcomes(dist, 100000, 2024);
        CHECK(total_variation(dist, s) <= 0.02);
    }
    SUBCASE("unbiased across seeds") {
        const OccupationVector target{{1, 0, 1, 0}};
        double p = 0.0;
        for (const auto& [o, q] : dist.outcomes)
            if (o == target) p = q / dist.total_mass;
        const std::uint64_t n = 2000;
        double mean = 0.0;
        for (std::uint64_t seed = 0; seed < 50; ++seed)
            mean += estimate_probability(sample_outcomes(dist, n, seed), target, n);
        mean /= 50;
        const double se = std::sqrt(p * (1 - p) / (50.0 * n));
        CHECK(std::abs(mean - p) <= 5 * se);
    }
    SUBCASE("bad arguments") {
        const auto s = sample_outcomes(dist, 10, 1);
        CHECK_THROWS_AS(estimate_probability(s, OccupationVector{{3, 0, 0, 0}}, 10), DomainError);
        CHECK_THROWS_AS(sample_outcomes(dist, 0, 1), DomainError);
    }
}
