#pragma once

// Sampling kernels over time grids. Every sample is evaluated from the
// initial state with the closed-form propagator, so samples are independent
// and the OpenMP variants must reproduce the serial reference bit for bit.

#include <span>
#include <vector>

#include "symplecta/classical.hpp"
#include "symplecta/quantum.hpp"

namespace symplecta::kernels {

namespace serial {

std::vector<PhaseState> classical_samples(const NormalModeDecomposition& modes,
                                          const PhaseState& x0, std::span<const double> times);
std::vector<ComplexVector> quantum_samples(const QuantumNormalModes& modes,
                                           const ComplexVector& c0,
                                           std::span<const double> times);
Vector energies(const OscillatorNetwork& net, std::span<const PhaseState> states);

}  // namespace serial

namespace omp {

std::vector<PhaseState> classical_samples(const NormalModeDecomposition& modes,
                                          const PhaseState& x0, std::span<const double> times);
std::vector<ComplexVector> quantum_samples(const QuantumNormalModes& modes,
                                           const ComplexVector& c0,
                                           std::span<const double> times);
Vector energies(const OscillatorNetwork& net, std::span<const PhaseState> states);

}  // namespace omp

int max_threads();

}  // namespace symplecta::kernels
