#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "reference_data.hpp"
#include "pistonwork/error.hpp"
#include "pistonwork/piston.hpp"

using namespace pistonwork;
using std::numbers::pi;

namespace {

// Independent fixed-grid oracle: composite Simpson on the original sin*sin
// integrand in physical units, 2e5 intervals.
Complex simpson_coefficient(int j, int i, const PistonParams& p) {
    const int n = 200000;
    const double h = p.lambda0 / n;
    auto f = [&](double x) {
        return std::polar(1.0, -p.v * x * x / (2.0 * p.lambda0)) * std::sin(j * pi * x / p.lambda0) *
               std::sin(i * pi * x / p.lambda0);
    };
    Complex s = f(0.0) + f(p.lambda0);
    for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(k * h);
    return (2.0 / p.lambda0) * s * h / 3.0;
}

PistonParams static_wall(double v) {
    PistonParams p;
    p.lambda0 = 1.0;
    p.lambda_tau = 1.0;
    p.v = v;
    return p;
}

} // namespace

TEST_CASE("eigenenergy") {
    CHECK(eigenenergy(1, 1.0) == doctest::Approx(pi * pi / 2));
    CHECK(eigenenergy(2, 1.0) == doctest::Approx(2 * pi * pi));
    CHECK(eigenenergy(1, 2.0) == doctest::Approx(pi * pi / 8));
    CHECK(eigenenergy(1, 1.0) == doctest::Approx(4.93480).epsilon(1e-5));
    CHECK(eigenenergy(3, 1.0) > eigenenergy(2, 1.0));
    CHECK(eigenenergy(3, 1.5) < eigenenergy(3, 1.0));
    CHECK_THROWS_AS(eigenenergy(0, 1.0), DomainError);
    CHECK_THROWS_AS(eigenenergy(1, 0.0), DomainError);
    CHECK_THROWS_AS(eigenenergy(1, -1.0), DomainError);
}

TEST_CASE("params validation") {
    PistonParams p = testdata::worked_example();
    CHECK_NOTHROW(p.validate());
    CHECK(p.tau() * p.v == doctest::Approx(p.lambda_tau - p.lambda0));
    PistonParams bad = p;
    bad.lambda_tau = 0.5;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = p;
    bad.v = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = p;
    bad.n_bosons = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = p;
    bad.beta = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = p;
    bad.lambda0 = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK(static_wall(0.0).tau() == 0.0);
}

TEST_CASE("expansion coefficients") {
    SUBCASE("static chirp gives orthonormality") {
        const PistonParams p = static_wall(0.0);
        for (int j = 1; j <= 6; ++j)
            for (int i = 1; i <= 6; ++i)
                CHECK(std::abs(expansion_coefficient(j, i, p) - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
    SUBCASE("symmetric in (j, i)") {
        const PistonParams p = testdata::worked_example();
        for (int j = 1; j <= 8; ++j)
            for (int i = 1; i <= 8; ++i)
                CHECK(std::abs(expansion_coefficient(j, i, p) - expansion_coefficient(i, j, p)) < 1e-10);
    }
    SUBCASE("dual-quadrature oracle") {
        const PistonParams p = testdata::worked_example();
        for (auto [j, i] : {std::pair{1, 1}, {3, 1}, {2, 5}, {7, 4}, {12, 3}}) {
            const Complex adaptive = expansion_coefficient(j, i, p);
            const Complex dense = simpson_coefficient(j, i, p);
            CHECK(std::abs(adaptive - dense) < 1e-9);
        }
    }
    SUBCASE("frozen high-precision values") {
        // 30-digit adaptive quadrature of 2 int_0^1 exp(-0.2 i u^2) sin(j pi u) sin(i pi u) du
        const PistonParams p = testdata::worked_example();
        CHECK(std::abs(expansion_coefficient(1, 1, p) - Complex(0.99772053884729934, -0.056459708370643567)) < 1e-10);
        CHECK(std::abs(expansion_coefficient(3, 1, p) - Complex(-0.0012283659253620059, -0.007528073156817302)) < 1e-10);
        CHECK(std::abs(expansion_coefficient(2, 5, p) - Complex(0.00067367988565366699, 0.003620864156906052)) < 1e-10);
    }
    CHECK_THROWS_AS(expansion_coefficient(0, 1, testdata::worked_example()), DomainError);
}

TEST_CASE("transition amplitudes") {
    SUBCASE("zero duration is the identity") {
        const PistonParams p = static_wall(0.4);
        for (int i = 1; i <= 4; ++i)
            for (int f = 1; f <= 4; ++f)
                CHECK(std::abs(transition_amplitude(i, f, p, 50) - (i == f ? 1.0 : 0.0)) < 1e-10);
    }
    SUBCASE("printed worked-example entries") {
        const PistonParams p = testdata::worked_example();
        const Complex a11 = transition_amplitude(1, 1, p, 200);
        CHECK(std::abs(a11.real() - 0.9843) <= 2e-3);
        CHECK(std::abs(a11.imag() - 0.1712) <= 2e-3);
        const Complex a21 = transition_amplitude(2, 1, p, 200);
        CHECK(std::abs(a21.real() - 0.0300) <= 2e-3);
        CHECK(std::abs(a21.imag() + 0.0273) <= 2e-3);
    }
    SUBCASE("converged in j_max") {
        const PistonParams p = testdata::worked_example();
        detail::AmplitudeSolver solver(p);
        const int j_max = solver.choose_j_max(5);
        for (int i = 1; i <= 5; ++i)
            for (int f = 1; f <= 5; ++f)
                CHECK(std::abs(solver.amplitude(i, f, j_max) - solver.amplitude(i, f, 2 * j_max)) < 1e-8);
    }
    SUBCASE("completeness of the chosen j_max") {
        const PistonParams p = testdata::worked_example();
        detail::AmplitudeSolver solver(p);
        const int j_max = solver.choose_j_max(5);
        CHECK(j_max >= 50);
        for (int i = 1; i <= 5; ++i) {
            double s = 0.0;
            for (int j = 1; j <= j_max; ++j) s += std::norm(solver.initial_coefficient(j, i));
            CHECK(s >= 1.0 - 1e-8);
        }
    }
    CHECK_THROWS_AS(transition_amplitude(3, 1, testdata::worked_example(), 2), DomainError);
}

TEST_CASE("amplitude matrix of the worked example") {
    const AmplitudeMatrix m = build_amplitude_matrix(testdata::worked_example(), 5);
    const ComplexMatrix printed = testdata::printed_lambda5();
    REQUIRE(m.dim == 5);
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
            CAPTURE(r);
            CAPTURE(c);
            CHECK(std::abs(m.entries(r, c).real() - printed(r, c).real()) <= 2e-3);
            CHECK(std::abs(m.entries(r, c).imag() - printed(r, c).imag()) <= 2e-3);
        }
    }
    for (int k = 0; k < 5; ++k) {
        const double row = m.entries.row(k).squaredNorm();
        const double col = m.entries.col(k).squaredNorm();
        CHECK(row >= 0.99);
        CHECK(col >= 0.99);
        CHECK(row <= 1.0 + 1e-9);
        CHECK(col <= 1.0 + 1e-9);
    }
    CHECK(m.fidelity == doctest::Approx(unitarity_fidelity(m.entries)));
}

TEST_CASE("zero-duration matrix is the identity") {
    for (int d : {1, 3, 6}) {
        const AmplitudeMatrix m = build_amplitude_matrix(static_wall(0.7), d);
        CHECK((m.entries - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(m.fidelity == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("unitarity fidelity") {
    CHECK(unitarity_fidelity(ComplexMatrix::Identity(4, 4)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(unitarity_fidelity(ComplexMatrix::Zero(3, 3)) == doctest::Approx(0.0));
    CHECK(std::abs(unitarity_fidelity(testdata::printed_lambda5()) - 0.9992) <= 5e-4);
    // mean singular value by SVD as a second route
    const ComplexMatrix a = testdata::printed_lambda5();
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    CHECK(unitarity_fidelity(a) == doctest::Approx(svd.singularValues().mean()).epsilon(1e-12));
    CHECK_THROWS_AS(unitarity_fidelity(ComplexMatrix::Zero(2, 3)), DomainError);
}

TEST_CASE("fidelity truncation") {
    SUBCASE("static wall stops at d = 1") {
        const AmplitudeMatrix m = truncate_to_fidelity(static_wall(0.4), 0.995);
        CHECK(m.dim == 1);
        CHECK(std::abs(m.entries(0, 0) - 1.0) < 1e-12);
    }
    SUBCASE("returned dimension is the first crossing") {
        for (double v : {0.4, 0.8, 1.0, 1.5}) {
            PistonParams p = testdata::worked_example();
            p.v = v;
            const AmplitudeMatrix m = truncate_to_fidelity(p, 0.995);
            CAPTURE(v);
            CHECK(m.fidelity >= 0.995);
            if (m.dim > 1) CHECK(build_amplitude_matrix(p, m.dim - 1).fidelity < 0.995);
            // Singular values of a compressed unitary are <= 1, so a mean of at
            // least theta forces sigma_min >= 1 - d (1 - theta), which bounds every row and column.
            const double floor = 1.0 - m.dim * (1.0 - 0.995);
            for (int k = 0; k < m.dim; ++k) {
                CHECK(m.entries.row(k).squaredNorm() <= 1.0 + 1e-9);
                CHECK(m.entries.col(k).squaredNorm() <= 1.0 + 1e-9);
                CHECK(m.entries.row(k).squaredNorm() >= floor * floor);
                CHECK(m.entries.col(k).squaredNorm() >= floor * floor);
            }
        }
    }
    SUBCASE("deterministic") {
        PistonParams p = testdata::worked_example();
        p.v = 1.5;
        const auto a = truncate_to_fidelity(p, 0.995);
        const auto b = truncate_to_fidelity(p, 0.995);
        CHECK(a.dim == b.dim);
        CHECK(a.entries == b.entries);
    }
    SUBCASE("cap exceeded reports the achieved fidelity") {
        try {
            truncate_to_fidelity(testdata::worked_example(), 1.0, 3);
            FAIL("expected NumericalError");
        } catch (const NumericalError& e) {
            CHECK(std::string(e.what()).find("best achieved") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(truncate_to_fidelity(testdata::worked_example(), 0.0), DomainError);
    CHECK_THROWS_AS(truncate_to_fidelity(testdata::worked_example(), 1.01), DomainError);
}
