#include "symplecta/kernels.hpp"

#include <cstddef>

#include "symplecta/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symplecta::kernels {

namespace {

// Shared per-sample body: x(t) = Z^-1 Lambda(t) Z x0 with Z x0 hoisted.
PhaseState classical_sample(const NormalModeDecomposition& modes, const PhaseState& x0,
                            const Vector& x_bar0, double t) {
    if (t == 0.0) return x0;
    return PhaseState::from_stacked(modes.z_inv * propagator(modes.omegas, t).apply(x_bar0));
}

ComplexVector quantum_sample(const QuantumNormalModes& modes, const ComplexVector& c0,
                             const ComplexVector& bar0, const ComplexMatrix& r_t, double t) {
    if (t == 0.0) return c0;
    return r_t * matexp_hermitian_diag(modes.lambdas, t).cwiseProduct(bar0);
}

Vector normal_coordinates(const NormalModeDecomposition& modes, const PhaseState& x0) {
    if (x0.size() != modes.size()) {
        fail(ErrorKind::InvalidArgument, "initial state dimension does not match the network");
    }
    return modes.z * x0.stacked();
}

}  // namespace

namespace serial {

std::vector<PhaseState> classical_samples(const NormalModeDecomposition& modes,
                                          const PhaseState& x0, std::span<const double> times) {
    const Vector x_bar0 = normal_coordinates(modes, x0);
    std::vector<PhaseState> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(classical_sample(modes, x0, x_bar0, t));
    return out;
}

std::vector<ComplexVector> quantum_samples(const QuantumNormalModes& modes,
                                           const ComplexVector& c0,
                                           std::span<const double> times) {
    const ComplexVector bar0 = modes.to_normal(c0);
    const ComplexMatrix r_t = modes.m_r.transpose().cast<std::complex<double>>();
    std::vector<ComplexVector> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(quantum_sample(modes, c0, bar0, r_t, t));
    return out;
}

Vector energies(const OscillatorNetwork& net, std::span<const PhaseState> states) {
    Vector e(static_cast<Eigen::Index>(states.size()));
    for (std::size_t k = 0; k < states.size(); ++k) {
        e(static_cast<Eigen::Index>(k)) = energy(net, states[k]);
    }
    return e;
}

}  // namespace serial

namespace omp {

std::vector<PhaseState> classical_samples(const NormalModeDecomposition& modes,
                                          const PhaseState& x0, std::span<const double> times) {
    const Vector x_bar0 = normal_coordinates(modes, x0);
    const auto n = static_cast<Eigen::Index>(modes.size());
    std::vector<PhaseState> out(times.size(), PhaseState(Vector::Zero(n), Vector::Zero(n)));
    const auto count = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        out[idx] = classical_sample(modes, x0, x_bar0, times[idx]);
    }
    return out;
}

std::vector<ComplexVector> quantum_samples(const QuantumNormalModes& modes,
                                           const ComplexVector& c0,
                                           std::span<const double> times) {
    const ComplexVector bar0 = modes.to_normal(c0);
    const ComplexMatrix r_t = modes.m_r.transpose().cast<std::complex<double>>();
    std::vector<ComplexVector> out(times.size());
    const auto count = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        out[idx] = quantum_sample(modes, c0, bar0, r_t, times[idx]);
    }
    return out;
}

Vector energies(const OscillatorNetwork& net, std::span<const PhaseState> states) {
    Vector e(static_cast<Eigen::Index>(states.size()));
    const auto count = static_cast<std::ptrdiff_t>(states.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        e(k) = energy(net, states[static_cast<std::size_t>(k)]);
    }
    return e;
}

}  // namespace omp

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace symplecta::kernels
