#pragma once

#include <optional>
#include <vector>

#include "pistonwork/types.hpp"

namespace pistonwork {

// Units M = hbar = k_B = 1. Wall moves as lambda(t) = lambda0 + v t.
struct PistonParams {
    double lambda0 = 1.0;
    double lambda_tau = 2.0;
    double v = 0.4;
    double beta = 0.1;
    int n_bosons = 3;

    // (lambda_tau - lambda0) / v, zero for a static wall.
    double tau() const;

    // Throws DomainError on any violated invariant.
    void validate() const;
};

struct AmplitudeMatrix {
    int dim = 0;
    ComplexMatrix entries;  // entries(f, i): row = final level, column = initial level (0-based)
    double fidelity = 0.0;
    PistonParams params;
    int j_max = 0;
};

// E_j = (j pi)^2 / (2 lambda^2), j >= 1.
double eigenenergy(int j, double lambda);

// c_j(i) = (2/lambda0) int_0^lambda0 exp(-i v x^2 / (2 lambda0)) sin(j pi x/lambda0) sin(i pi x/lambda0) dx
Complex expansion_coefficient(int j, int i, const PistonParams& params);

// <f^{lambda_tau}| U |i^{lambda0}>, moving-wall series truncated at j_max.
Complex transition_amplitude(int i, int f, const PistonParams& params, int j_max);

AmplitudeMatrix build_amplitude_matrix(const PistonParams& params, int d);

// Mean singular value of the matrix, from the eigenvalues of M^dagger M.
double unitarity_fidelity(const ComplexMatrix& m);
inline double unitarity_fidelity(const AmplitudeMatrix& m) { return unitarity_fidelity(m.entries); }

// Smallest d (grown from 1) whose d x d matrix reaches `threshold`.
AmplitudeMatrix truncate_to_fidelity(const PistonParams& params, double threshold, int max_dim = 64);

// F(m) = int_0^1 exp(i chirp u^2) cos(m pi u) du, adaptive to 1e-10.
Complex chirp_cosine_moment(int m, double chirp);

// Integration intervals needed to resolve cos(m pi u) exp(i kappa u^2) on [0, 1].
int initial_panels(double frequency, double chirp);

namespace detail {

// Memoizes the cosine-chirp moments used by every c_j(i) / b_j(f) of one
// parameter set. Not thread-safe; one instance per evaluation.
class AmplitudeSolver {
public:
    explicit AmplitudeSolver(const PistonParams& params);

    // c_j(i): initial-wall expansion coefficient.
    Complex initial_coefficient(int j, int i);
    // b_j(f): overlap of the evolved mode j with final eigenstate f.
    Complex final_overlap(int j, int f);
    Complex amplitude(int i, int f, int j_max);
    int choose_j_max(int d);
    AmplitudeMatrix matrix(int d);

private:
    using MomentTable = std::vector<std::optional<Complex>>;
    static Complex moment(MomentTable& table, double chirp, int m);

    PistonParams params_;
    bool static_wall_;
    double chirp_initial_;
    double chirp_final_;
    MomentTable initial_moments_;
    MomentTable final_moments_;
    std::vector<double> completeness_;  // running sum_j |c_j(i)|^2 per i
    std::vector<int> completeness_upto_;
};

} // namespace detail

} // namespace pistonwork
