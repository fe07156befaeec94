#include "pistonwork/piston.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "pistonwork/error.hpp"
#include "pistonwork/quadrature.hpp"

namespace pistonwork {

namespace {

constexpr double kQuadTol = 1e-10;
constexpr double kCompletenessTol = 1e-8;
constexpr int kMaxJ = 1 << 16;

} // namespace

double PistonParams::tau() const {
    if (lambda_tau == lambda0) return 0.0;
    return (lambda_tau - lambda0) / v;
}

void PistonParams::validate() const {
    auto fail = [](const std::string& what) { throw DomainError("PistonParams: " + what); };
    if (!std::isfinite(lambda0) || !std::isfinite(lambda_tau) || !std::isfinite(v) ||
        !std::isfinite(beta))
        fail("non-finite field");
    if (!(lambda0 > 0.0)) fail("lambda0 must be > 0");
    if (lambda_tau < lambda0) fail("lambda_tau must be >= lambda0 (contraction is not supported)");
    if (lambda_tau > lambda0 && !(v > 0.0)) fail("v must be > 0 for an expanding wall");
    if (v < 0.0) fail("v must be >= 0");
    if (beta < 0.0) fail("beta must be >= 0");
    if (n_bosons < 1) fail("n_bosons must be >= 1");
}

double eigenenergy(int j, double lambda) {
    if (j < 1) throw DomainError("eigenenergy: level index must be >= 1");
    if (!(lambda > 0.0)) throw DomainError("eigenenergy: length must be > 0");
    const double k = j * std::numbers::pi / lambda;
    return 0.5 * k * k;
}

int initial_panels(double frequency, double chirp) {
    // Roughly two oscillations of either factor per 16-point panel.
    const double periods = std::abs(frequency) / 2.0 + std::abs(chirp) / (2.0 * std::numbers::pi);
    return 2 + static_cast<int>(std::ceil(periods / 2.0));
}

Complex chirp_cosine_moment(int m, double chirp) {
    const double w = m * std::numbers::pi;
    auto integrand = [w, chirp](double u) {
        return std::polar(std::cos(w * u), chirp * u * u);
    };
    return quad::integrate_doubling(integrand, 0.0, 1.0, initial_panels(m, chirp), kQuadTol).value;
}

namespace detail {

AmplitudeSolver::AmplitudeSolver(const PistonParams& params)
    : params_(params),
      static_wall_(params.lambda_tau == params.lambda0),
      chirp_initial_(-0.5 * params.v * params.lambda0),
      chirp_final_(0.5 * params.v * params.lambda_tau) {
    params_.validate();
}

Complex AmplitudeSolver::moment(MomentTable& table, double chirp, int m) {
    if (m < 0) m = -m;
    if (static_cast<std::size_t>(m) >= table.size()) table.resize(2 * m + 16);
    auto& slot = table[m];
    if (!slot) slot = chirp_cosine_moment(m, chirp);
    return *slot;
}

// 2 sin(a) sin(b) = cos(a - b) - cos(a + b) turns every overlap into two moments.
Complex AmplitudeSolver::initial_coefficient(int j, int i) {
    if (j < 1 || i < 1) throw DomainError("expansion coefficient: levels must be >= 1");
    return moment(initial_moments_, chirp_initial_, j - i) -
           moment(initial_moments_, chirp_initial_, j + i);
}

Complex AmplitudeSolver::final_overlap(int j, int f) {
    if (j < 1 || f < 1) throw DomainError("final overlap: levels must be >= 1");
    return moment(final_moments_, chirp_final_, j - f) - moment(final_moments_, chirp_final_, j + f);
}

Complex AmplitudeSolver::amplitude(int i, int f, int j_max) {
    if (i < 1 || f < 1) throw DomainError("transition_amplitude: levels must be >= 1");
    if (j_max < std::max(i, f)) throw DomainError("transition_amplitude: j_max must be >= max(i, f)");
    if (static_wall_) return i == f ? Complex{1.0, 0.0} : Complex{0.0, 0.0};

    // Dynamical phase of Phi_j at t = tau: E_j^{lambda0} lambda0 tau / lambda_tau.
    const double phase_scale = params_.lambda0 * params_.tau() / params_.lambda_tau;
    Complex sum{0.0, 0.0};
    for (int j = 1; j <= j_max; ++j) {
        const double phase = -eigenenergy(j, params_.lambda0) * phase_scale;
        sum += initial_coefficient(j, i) * std::polar(1.0, phase) * final_overlap(j, f);
    }
    return sum;
}

int AmplitudeSolver::choose_j_max(int d) {
    int j_max = std::max(4 * d, 50);
    if (static_wall_) return j_max;
    if (static_cast<int>(completeness_.size()) < d) {
        completeness_.resize(d, 0.0);
        completeness_upto_.resize(d, 0);
    }
    for (;;) {
        bool complete = true;
        for (int i = 1; i <= d; ++i) {
            double& acc = completeness_[i - 1];
            int& upto = completeness_upto_[i - 1];
            for (int j = upto + 1; j <= j_max; ++j) acc += std::norm(initial_coefficient(j, i));
            upto = std::max(upto, j_max);
            if (acc < 1.0 - kCompletenessTol) complete = false;
        }
        if (complete) return j_max;
        if (j_max >= kMaxJ) {
            std::ostringstream msg;
            msg << "j_max exceeded " << kMaxJ << " before the expansion reached completeness";
            throw NumericalError(msg.str());
        }
        j_max *= 2;
    }
}

AmplitudeMatrix AmplitudeSolver::matrix(int d) {
    if (d < 1) throw DomainError("build_amplitude_matrix: dimension must be >= 1");
    AmplitudeMatrix out;
    out.dim = d;
    out.params = params_;
    out.j_max = choose_j_max(d);
    out.entries.resize(d, d);
    for (int f = 1; f <= d; ++f)
        for (int i = 1; i <= d; ++i) out.entries(f - 1, i - 1) = amplitude(i, f, out.j_max);
    out.fidelity = unitarity_fidelity(out.entries);
    return out;
}

} // namespace detail

Complex expansion_coefficient(int j, int i, const PistonParams& params) {
    detail::AmplitudeSolver solver(params);
    return solver.initial_coefficient(j, i);
}

Complex transition_amplitude(int i, int f, const PistonParams& params, int j_max) {
    detail::AmplitudeSolver solver(params);
    return solver.amplitude(i, f, j_max);
}

AmplitudeMatrix build_amplitude_matrix(const PistonParams& params, int d) {
    detail::AmplitudeSolver solver(params);
    return solver.matrix(d);
}

double unitarity_fidelity(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("unitarity_fidelity: matrix must be square");
    if (m.rows() == 0) throw DomainError("unitarity_fidelity: empty matrix");
    const ComplexMatrix gram = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) throw NumericalError("unitarity_fidelity: eigen-solver failed");
    double total = 0.0;
    for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k)
        total += std::sqrt(std::max(0.0, eig.eigenvalues()(k)));
    return total / static_cast<double>(m.rows());
}

AmplitudeMatrix truncate_to_fidelity(const PistonParams& params, double threshold, int max_dim) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw DomainError("truncate_to_fidelity: threshold must lie in (0, 1]");
    detail::AmplitudeSolver solver(params);
    double best = 0.0;
    for (int d = 1; d <= max_dim; ++d) {
        AmplitudeMatrix m = solver.matrix(d);
        if (m.fidelity >= threshold) return m;
        best = std::max(best, m.fidelity);
    }
    std::ostringstream msg;
    msg << "fidelity " << threshold << " not reached up to d = " << max_dim
        << " (best achieved " << best << ")";
    throw NumericalError(msg.str());
}

} // namespace pistonwork
