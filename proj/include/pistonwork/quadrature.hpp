#pragma once

#include <functional>
#include <vector>

#include "pistonwork/types.hpp"

namespace pistonwork::quad {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

// Fixed composite rule: `panels` equal panels on [a, b], `order` points each.
Complex integrate_composite(const std::function<Complex(double)>& f, double a, double b,
                            int panels, int order = 16);

struct AdaptiveResult {
    Complex value;
    double error_estimate;  // |I(2p) - I(p)| of the last doubling
    int panels;
};

// Doubles the panel count from `initial_panels` until successive estimates differ
// by less than `abs_tol`. Throws NumericalError after `max_doublings`.
AdaptiveResult integrate_doubling(const std::function<Complex(double)>& f, double a, double b,
                                  int initial_panels, double abs_tol = 1e-10,
                                  int max_doublings = 14);

} // namespace pistonwork::quad
