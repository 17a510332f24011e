#pragma once

// Rotating-wave sector of N bosonic modes, mode 1 coupled to the rest:
//   H = sum_i g_ii a_i^+ a_i + sum_{i>=2} g_1i (a_1^+ a_i + a_i^+ a_1)
// Excitation number commutes with H, so states are kept in the
// single-excitation basis {|1_i>}. Evolution follows e^{+iHt}.

#include <cstddef>

#include "symplecta/linalg.hpp"

namespace symplecta {

struct QuantumNetwork {
    Vector g_diag;
    Vector g_couple;

    QuantumNetwork(Vector diag, Vector couple);
    std::size_t size() const { return static_cast<std::size_t>(g_diag.size()); }

    // n x n arrowhead coupling matrix.
    SymMatrix coupling_matrix() const;
};

class SingleExcitationState {
public:
    static constexpr double kNormTolerance = 1e-12;

    explicit SingleExcitationState(ComplexVector amps);
    static SingleExcitationState site(std::size_t n, std::size_t i);

    const ComplexVector& amps() const { return amps_; }
    std::size_t size() const { return static_cast<std::size_t>(amps_.size()); }

private:
    ComplexVector amps_;
};

struct QuantumNormalModes {
    Vector lambdas;
    OrthoMatrix m_r;
    int det_sign = 1;

    std::size_t size() const { return static_cast<std::size_t>(lambdas.size()); }
    // c_bar = M_R c
    ComplexVector to_normal(const ComplexVector& c) const;
};

QuantumNormalModes quantum_normal_modes(const QuantumNetwork& qnet);

// c(t) = M_R^T diag(e^{i lambda t}) M_R c0
SingleExcitationState evolve_single_excitation(const QuantumNormalModes& modes,
                                               const SingleExcitationState& c0, double t);
SingleExcitationState evolve_single_excitation(const QuantumNetwork& qnet,
                                               const SingleExcitationState& c0, double t);

ComplexVector evolve_amplitudes(const QuantumNormalModes& modes, const ComplexVector& c0,
                                double t);

double excitation_number(const ComplexVector& c);
inline double excitation_number(const SingleExcitationState& c) {
    return excitation_number(c.amps());
}

// sum_k lambda_k |c_bar_k|^2
double energy_expectation(const QuantumNormalModes& modes, const ComplexVector& c);

// |<1_i| e^{iHt} |1_i>|^2, i 0-based.
double survival_probability(const QuantumNormalModes& modes, std::size_t i, double t);
double survival_probability(const QuantumNetwork& qnet, std::size_t i, double t);

}  // namespace symplecta
