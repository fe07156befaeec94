#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pistonwork/error.hpp"
#include "pistonwork/quadrature.hpp"

using namespace pistonwork;

TEST_CASE("gauss-legendre weights sum to 2 and integrate polynomials exactly") {
    for (int n : {1, 2, 5, 16, 33}) {
        const auto rule = quad::gauss_legendre(n);
        double wsum = 0.0;
        for (double w : rule.weights) wsum += w;
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        // degree 2n - 1 is exact
        const int deg = 2 * n - 1;
        double integral = 0.0;
        for (int k = 0; k < n; ++k) integral += rule.weights[k] * std::pow(rule.nodes[k], deg - 1);
        const double expected = ((deg - 1) % 2 == 0) ? 2.0 / deg : 0.0;
        CHECK(integral == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("composite rule resolves an oscillatory cosine") {
    auto f = [](double u) { return Complex{std::cos(40.0 * std::numbers::pi * u), 0.0}; };
    auto r = quad::integrate_doubling(f, 0.0, 1.0, 4);
    CHECK(std::abs(r.value) < 1e-12);
    auto g = [](double u) { return Complex{std::cos(3.0 * u), std::sin(3.0 * u)}; };
    auto rg = quad::integrate_doubling(g, 0.0, 2.0, 1);
    const Complex exact = (std::polar(1.0, 6.0) - 1.0) / Complex{0.0, 3.0};
    CHECK(std::abs(rg.value - exact) < 1e-12);
}

TEST_CASE("non-convergence reports the achieved tolerance") {
    auto f = [](double u) { return Complex{1.0 / std::sqrt(u + 1e-300), 0.0}; };
    try {
        quad::integrate_doubling(f, 0.0, 1.0, 1, 1e-14, 2);
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(std::string(e.what()).find("achieved") != std::string::npos);
    }
}
