#include "pistonwork/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "pistonwork/error.hpp"
#include "pistonwork/rng.hpp"

namespace pistonwork {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNullTol = 1e-14;
constexpr double kUnitaryTol = 1e-8;

double wrap_phase(double x) {
    double y = std::fmod(x, kTwoPi);
    if (y < 0.0) y += kTwoPi;
    if (y >= kTwoPi) y = 0.0;
    return y;
}

// Rows m, m+1 <- T(theta, phi) * rows.
void apply_left(ComplexMatrix& u, int m, double theta, double phi) {
    const Complex e = std::polar(1.0, phi);
    const double c = std::cos(theta), s = std::sin(theta);
    for (Eigen::Index k = 0; k < u.cols(); ++k) {
        const Complex top = u(m, k), bottom = u(m + 1, k);
        u(m, k) = e * c * top - s * bottom;
        u(m + 1, k) = e * s * top + c * bottom;
    }
}

// Columns m, m+1 <- columns * T(theta, phi)^dagger.
void apply_right_inverse(ComplexMatrix& u, int m, double theta, double phi) {
    const Complex ec = std::polar(1.0, -phi);
    const double c = std::cos(theta), s = std::sin(theta);
    for (Eigen::Index k = 0; k < u.rows(); ++k) {
        const Complex left = u(k, m), right = u(k, m + 1);
        u(k, m) = ec * c * left - s * right;
        u(k, m + 1) = ec * s * left + c * right;
    }
}

double unitarity_defect(const ComplexMatrix& u) {
    const ComplexMatrix g = u.adjoint() * u;
    return (g - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

struct RawGate {
    int m;  // 0-based upper mode
    double theta;
    double phi;
};

} // namespace

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("max_abs_diff: shape mismatch");
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix make_t_matrix(int a, double theta, double phi, int d) {
    if (d < 2 || a < 1 || a > d - 1)
        throw DomainError("make_t_matrix: mode index must satisfy 1 <= a <= d - 1");
    ComplexMatrix t = ComplexMatrix::Identity(d, d);
    const Complex e = std::polar(1.0, phi);
    const int m = a - 1;
    t(m, m) = e * std::cos(theta);
    t(m, m + 1) = -std::sin(theta);
    t(m + 1, m) = e * std::sin(theta);
    t(m + 1, m + 1) = std::cos(theta);
    return t;
}

UnitaryProjection unitary_project(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DomainError("unitary_project: matrix must be square and non-empty");
    if (!m.allFinite()) throw DomainError("unitary_project: non-finite entries");
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-12 * std::max(1.0, sv(0)))
        throw NumericalError("unitary_project: matrix is rank deficient");
    UnitaryProjection out;
    out.unitary = svd.matrixU() * svd.matrixV().adjoint();
    out.residual = (m - out.unitary).norm();
    return out;
}

InterferometerProgram clements_decompose(const ComplexMatrix& input) {
    if (input.rows() != input.cols() || input.rows() == 0)
        throw DomainError("clements_decompose: matrix must be square and non-empty");
    const double defect = unitarity_defect(input);
    if (!(defect <= kUnitaryTol)) {
        std::ostringstream msg;
        msg << "clements_decompose: input is not unitary (max |U^dagger U - I| = " << defect << ")";
        throw DomainError(msg.str());
    }

    const int d = static_cast<int>(input.rows());
    ComplexMatrix u = input;
    std::vector<RawGate> right, left;

    // Alternate diagonal sweeps: even sweeps null from the right (column
    // operations), odd sweeps from the left (row operations).
    for (int sweep = 0; sweep < d - 1; ++sweep) {
        if (sweep % 2 == 0) {
            for (int k = 0; k <= sweep; ++k) {
                const int row = d - 1 - k;
                const int m = sweep - k;
                const Complex target = u(row, m), keep = u(row, m + 1);
                RawGate g{m, 0.0, 0.0};
                if (std::abs(target) >= kNullTol) {
                    g.theta = std::atan2(std::abs(target), std::abs(keep));
                    g.phi = std::arg(target) - std::arg(keep);
                }
                apply_right_inverse(u, m, g.theta, g.phi);
                right.push_back(g);
            }
        } else {
            for (int k = 1; k <= sweep + 1; ++k) {
                const int m = d + k - sweep - 3;
                const int col = k - 1;
                const Complex keep = u(m, col), target = u(m + 1, col);
                RawGate g{m, 0.0, 0.0};
                if (std::abs(target) >= kNullTol) {
                    g.theta = std::atan2(std::abs(target), std::abs(keep));
                    g.phi = std::arg(-target) - std::arg(keep);
                }
                apply_left(u, m, g.theta, g.phi);
                left.push_back(g);
            }
        }
    }

    std::vector<double> phases(d);
    for (int k = 0; k < d; ++k) phases[k] = std::arg(u(k, k));

    // Move each left gate through the diagonal: T^{-1}(theta, phi) D = D' T(theta, phi')
    // with phi' = alpha - beta + pi and D' = diag(beta - phi + pi, beta) on (m, m+1).
    std::vector<RawGate> ordered = right;
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        const double alpha = phases[it->m], beta = phases[it->m + 1];
        ordered.push_back({it->m, it->theta, alpha - beta + std::numbers::pi});
        phases[it->m] = beta - it->phi + std::numbers::pi;
        phases[it->m + 1] = beta;
    }

    InterferometerProgram prog;
    prog.dim = d;
    std::vector<int> last_step(d, 0);
    for (const RawGate& g : ordered) {
        const int step = std::max(last_step[g.m], last_step[g.m + 1]) + 1;
        last_step[g.m] = last_step[g.m + 1] = step;
        prog.gates.push_back({step, g.m + 1, g.theta, wrap_phase(g.phi)});
    }
    for (double p : phases) prog.output_phases.push_back(wrap_phase(p));
    return prog;
}

ComplexMatrix resynthesize(const InterferometerProgram& p) {
    if (p.dim < 1 || static_cast<int>(p.output_phases.size()) != p.dim)
        throw DomainError("resynthesize: program dimension and output phases disagree");
    ComplexMatrix u = ComplexMatrix::Identity(p.dim, p.dim);
    for (const TGate& g : p.gates) {
        if (g.a < 1 || g.a > p.dim - 1) throw DomainError("resynthesize: gate mode out of range");
        apply_left(u, g.a - 1, g.theta, g.phi);
    }
    for (int k = 0; k < p.dim; ++k) u.row(k) *= std::polar(1.0, p.output_phases[k]);
    return u;
}

InterferometerProgram perturb(const InterferometerProgram& p, double epsilon, std::uint64_t seed) {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
        throw DomainError("perturb: epsilon must be finite and non-negative");
    if (epsilon == 0.0) return p;
    Rng rng(seed);
    InterferometerProgram out = p;
    for (TGate& g : out.gates) {
        g.theta += rng.uniform(-epsilon, epsilon);
        g.phi = wrap_phase(g.phi + rng.uniform(-epsilon, epsilon));
    }
    for (double& ph : out.output_phases) ph = wrap_phase(ph + rng.uniform(-epsilon, epsilon));
    return out;
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
    if (d < 1) throw DomainError("random_unitary: d must be >= 1");
    Rng rng(seed);
    ComplexMatrix z(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) z(r, c) = Complex{rng.normal(), rng.normal()} / std::sqrt(2.0);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < d; ++k) {
        const Complex diag = r(k, k);
        const double mag = std::abs(diag);
        if (mag > 0.0) q.col(k) *= diag / mag;
    }
    return q;
}

} // namespace pistonwork
