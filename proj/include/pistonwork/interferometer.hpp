#pragma once

#include <cstdint>
#include <vector>

#include "pistonwork/types.hpp"

namespace pistonwork {

// Variable beam splitter on modes (a, a+1), 1-based:
//   [ e^{i phi} cos(theta)   -sin(theta) ]
//   [ e^{i phi} sin(theta)    cos(theta) ]
struct TGate {
    int step = 1;  // mesh column
    int a = 1;
    double theta = 0.0;
    double phi = 0.0;
};

// Realizes D * G_last * ... * G_first; `gates` is stored in the order light
// traverses them (first applied first).
struct InterferometerProgram {
    int dim = 0;
    std::vector<TGate> gates;
    std::vector<double> output_phases;
    double projection_residual = 0.0;
};

ComplexMatrix make_t_matrix(int a, double theta, double phi, int d);

struct UnitaryProjection {
    ComplexMatrix unitary;
    double residual = 0.0;  // ||m - unitary||_F
};

// Polar factor U V^dagger of the SVD: the nearest unitary in Frobenius norm.
UnitaryProjection unitary_project(const ComplexMatrix& m);

// Rectangular-mesh elimination. Input must be unitary to 1e-8.
InterferometerProgram clements_decompose(const ComplexMatrix& u);

ComplexMatrix resynthesize(const InterferometerProgram& p);

// Shifts every theta, phi and output phase by an independent draw from
// [-epsilon, epsilon). epsilon = 0 returns the program unchanged.
InterferometerProgram perturb(const InterferometerProgram& p, double epsilon, std::uint64_t seed);

// Haar-random unitary via QR of a complex Ginibre matrix with phase fix.
ComplexMatrix random_unitary(int d, std::uint64_t seed);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace pistonwork
