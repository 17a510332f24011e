#include "symplecta/quantum.hpp"

#include <cmath>
#include <sstream>

#include "symplecta/error.hpp"

namespace symplecta {

QuantumNetwork::QuantumNetwork(Vector diag, Vector couple)
    : g_diag(std::move(diag)), g_couple(std::move(couple)) {
    const auto n = g_diag.size();
    if (n < 1) fail(ErrorKind::InvalidArgument, "quantum network needs at least one mode");
    if (g_couple.size() != n - 1) {
        std::ostringstream os;
        os << "expected " << n - 1 << " couplings for " << n << " modes, got " << g_couple.size();
        fail(ErrorKind::InvalidArgument, os.str());
    }
    if (!g_diag.allFinite() || !g_couple.allFinite()) {
        fail(ErrorKind::NonFinite, "quantum network parameters must be finite");
    }
    if ((g_diag.array() <= 0.0).any()) {
        fail(ErrorKind::InvalidArgument, "mode frequencies must be positive");
    }
}

SymMatrix QuantumNetwork::coupling_matrix() const {
    const auto n = g_diag.size();
    Matrix h = g_diag.asDiagonal();
    for (Eigen::Index i = 1; i < n; ++i) {
        h(0, i) = g_couple(i - 1);
        h(i, 0) = g_couple(i - 1);
    }
    return SymMatrix(h);
}

SingleExcitationState::SingleExcitationState(ComplexVector amps) : amps_(std::move(amps)) {
    if (amps_.size() < 1) fail(ErrorKind::InvalidArgument, "state needs at least one amplitude");
    if (!amps_.allFinite()) fail(ErrorKind::NonFinite, "amplitudes must be finite");
    const double norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        std::ostringstream os;
        os << "single-excitation state must be normalized, sum |c_i|^2 = " << norm2;
        fail(ErrorKind::InvalidArgument, os.str());
    }
}

SingleExcitationState SingleExcitationState::site(std::size_t n, std::size_t i) {
    if (i >= n) fail(ErrorKind::InvalidArgument, "site index out of range");
    ComplexVector c = ComplexVector::Zero(static_cast<Eigen::Index>(n));
    c(static_cast<Eigen::Index>(i)) = 1.0;
    return SingleExcitationState(std::move(c));
}

ComplexVector QuantumNormalModes::to_normal(const ComplexVector& c) const {
    if (static_cast<std::size_t>(c.size()) != size()) {
        fail(ErrorKind::InvalidArgument, "amplitude vector dimension does not match the network");
    }
    return m_r.matrix().cast<std::complex<double>>() * c;
}

QuantumNormalModes quantum_normal_modes(const QuantumNetwork& qnet) {
    auto eig = jacobi_eigen(qnet.coupling_matrix());
    return QuantumNormalModes{eig.lambdas, eig.basis, eig.det_sign};
}

ComplexVector evolve_amplitudes(const QuantumNormalModes& modes, const ComplexVector& c0,
                                double t) {
    if (static_cast<std::size_t>(c0.size()) != modes.size()) {
        fail(ErrorKind::InvalidArgument, "state dimension does not match the network");
    }
    if (t == 0.0) return c0;
    const Matrix& r = modes.m_r.matrix();
    const ComplexVector bar = r.cast<std::complex<double>>() * c0;
    const ComplexVector phased = matexp_hermitian_diag(modes.lambdas, t).cwiseProduct(bar);
    return r.transpose().cast<std::complex<double>>() * phased;
}

SingleExcitationState evolve_single_excitation(const QuantumNormalModes& modes,
                                               const SingleExcitationState& c0, double t) {
    return SingleExcitationState(evolve_amplitudes(modes, c0.amps(), t));
}

SingleExcitationState evolve_single_excitation(const QuantumNetwork& qnet,
                                               const SingleExcitationState& c0, double t) {
    return evolve_single_excitation(quantum_normal_modes(qnet), c0, t);
}

double excitation_number(const ComplexVector& c) { return c.squaredNorm(); }

double energy_expectation(const QuantumNormalModes& modes, const ComplexVector& c) {
    const ComplexVector bar = modes.to_normal(c);
    double e = 0.0;
    for (Eigen::Index k = 0; k < bar.size(); ++k) e += modes.lambdas(k) * std::norm(bar(k));
    return e;
}

double survival_probability(const QuantumNormalModes& modes, std::size_t i, double t) {
    const auto c0 = SingleExcitationState::site(modes.size(), i);
    return std::norm(evolve_amplitudes(modes, c0.amps(), t)(static_cast<Eigen::Index>(i)));
}

double survival_probability(const QuantumNetwork& qnet, std::size_t i, double t) {
    return survival_probability(quantum_normal_modes(qnet), i, t);
}

}  // namespace symplecta
