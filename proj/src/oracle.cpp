#include "symplecta/oracle.hpp"

#include <algorithm>
#include <complex>
#include <cstdio>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "symplecta/error.hpp"

namespace symplecta::oracle {

OracleReport OracleReport::make(std::string name, double max_error, double tolerance,
                                std::string details) {
    return OracleReport{std::move(name), max_error, tolerance, max_error <= tolerance,
                        std::move(details)};
}

std::string OracleReport::line() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, " max_error=%.3e tolerance=%.1e", max_error, tolerance);
    std::string out = (passed ? "PASS " : "FAIL ") + check_name + buf;
    if (!details.empty()) out += " (" + details + ")";
    return out;
}

Matrix dynamics_matrix(const OscillatorNetwork& net) {
    const auto n = static_cast<Eigen::Index>(net.size());
    // J * blockdiag(H_Q, H_P) = [[0, H_P], [-H_Q, 0]]
    Matrix a = Matrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, n + i) = net.diag_freq(i);
        a(n + i, i) = -net.diag_freq(i);
    }
    for (Eigen::Index i = 1; i < n; ++i) {
        a(n, i) = -net.couplings(i - 1);
        a(n + i, 0) = -net.couplings(i - 1);
    }
    return a;
}

PhaseState rk4_hamilton(const OscillatorNetwork& net, const PhaseState& x0, double t_max,
                        double dt) {
    if (x0.size() != net.size()) {
        fail(ErrorKind::InvalidArgument, "initial state dimension does not match the network");
    }
    if (!(dt > 0.0) || dt > 1e-2) fail(ErrorKind::InvalidArgument, "RK4 oracle needs 0 < dt <= 1e-2");
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
        fail(ErrorKind::InvalidArgument, "t_max must be non-negative and finite");
    }
    const double steps_d = std::ceil(t_max / dt - 1e-9);
    if (steps_d > static_cast<double>(kMaxRk4Steps)) {
        std::ostringstream os;
        os << "RK4 would need " << steps_d << " steps (limit " << kMaxRk4Steps << ")";
        fail(ErrorKind::StepBudget, os.str());
    }
    const auto steps = static_cast<std::size_t>(std::max(steps_d, 0.0));
    if (steps == 0) return x0;
    const double h = t_max / static_cast<double>(steps);

    const Matrix a = dynamics_matrix(net);
    Vector x = x0.stacked();
    for (std::size_t s = 0; s < steps; ++s) {
        const Vector k1 = a * x;
        const Vector k2 = a * (x + 0.5 * h * k1);
        const Vector k3 = a * (x + 0.5 * h * k2);
        const Vector k4 = a * (x + h * k3);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return PhaseState::from_stacked(x);
}

ComplexVector matexp_series(const SymMatrix& h, double t, const ComplexVector& c0) {
    if (static_cast<std::size_t>(c0.size()) != h.size()) {
        fail(ErrorKind::InvalidArgument, "vector dimension does not match the matrix");
    }
    const ComplexMatrix generator = h.matrix().cast<std::complex<double>>() * std::complex<double>(0.0, t);
    return expm_taylor(generator) * c0;
}

PhaseState expm_evolve(const OscillatorNetwork& net, const PhaseState& x0, double t) {
    if (x0.size() != net.size()) {
        fail(ErrorKind::InvalidArgument, "initial state dimension does not match the network");
    }
    return PhaseState::from_stacked(expm_taylor(dynamics_matrix(net) * t) * x0.stacked());
}

namespace {

// Number of eigenvalues of a below x. Gaussian elimination of (a - x I)
// without pivoting produces the ratios det_k / det_{k-1} of consecutive
// leading minors; by Sylvester's law of inertia the count of negative
// ratios is the count of eigenvalues below x.
int count_below(const Matrix& a, double x, double tiny) {
    Matrix m = a;
    const Eigen::Index n = m.rows();
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) -= x;
    int negatives = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
        double pivot = m(k, k);
        if (pivot == 0.0) pivot = -tiny;
        if (pivot < 0.0) ++negatives;
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const double f = m(i, k) / pivot;
            for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return negatives;
}

}  // namespace

std::vector<double> charpoly_eigs(const SymMatrix& sym) {
    const auto n = static_cast<Eigen::Index>(sym.size());
    if (n > 4) {
        fail(ErrorKind::DimensionTooLarge, "charpoly_eigs supports n <= 4, got " + std::to_string(n));
    }
    const Matrix& a = sym.matrix();

    double lower = a(0, 0);
    double upper = a(0, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double radius = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
        lower = std::min(lower, a(i, i) - radius);
        upper = std::max(upper, a(i, i) + radius);
    }
    const double scale = std::max({1.0, std::abs(lower), std::abs(upper)});
    lower -= 1e-12 * scale;
    upper += 1e-12 * scale;
    const double tiny = 1e-30 * scale;

    std::vector<double> eigs;
    eigs.reserve(static_cast<std::size_t>(n));
    for (int k = static_cast<int>(n) - 1; k >= 0; --k) {
        // k-th smallest: smallest x with count_below(x) > k.
        double lo = lower;
        double hi = upper;
        for (int it = 0; it < 200 && hi - lo > 1e-14 * scale; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (count_below(a, mid, tiny) > k) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        eigs.push_back(0.5 * (lo + hi));
    }
    return eigs;
}

std::vector<double> dynamics_spectrum(const OscillatorNetwork& net) {
    const Matrix a = dynamics_matrix(net);
    Eigen::EigenSolver<Matrix> solver(a, false);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::NoConvergence, "eigenvalue iteration for the dynamics matrix failed");
    }
    const auto& ev = solver.eigenvalues();
    std::vector<double> freqs;
    double worst_real = 0.0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        worst_real = std::max(worst_real, std::abs(ev(k).real()));
        if (ev(k).imag() > 0.0) freqs.push_back(ev(k).imag());
    }
    if (worst_real > 1e-8 || freqs.size() != net.size()) {
        std::ostringstream os;
        os << "dynamics matrix has eigenvalues off the imaginary axis (max |Re| = " << worst_real
           << ", " << freqs.size() << " of " << net.size() << " oscillating pairs)";
        fail(ErrorKind::ComplexLeakage, os.str());
    }
    std::sort(freqs.begin(), freqs.end(), std::greater<>());
    return freqs;
}

}  // namespace symplecta::oracle
