#pragma once

// Squeeze -> rotate -> squeeze reduction of a star-coupled oscillator
// network to decoupled normal modes.
//
//   H = 1/2 sum_i w_ii (p_i^2 + q_i^2) + sum_{i>=2} w_1i q_1 q_i
//     = 1/2 (Q^T, P^T) blockdiag(H_Q, H_P) (Q, P)
//
// Phase-space vectors are stacked as x = (q_1..q_n, p_1..p_n); every map in
// this header acts on that layout and satisfies Z J Z^T = J with
// J = [[0, I], [-I, 0]].

#include <cstddef>

#include "symplecta/linalg.hpp"

namespace symplecta {

struct OscillatorNetwork {
    Vector diag_freq;  // w_ii > 0
    Vector couplings;  // w_1i for i = 2..n (length n - 1)

    OscillatorNetwork(Vector diag, Vector coupling);
    std::size_t size() const { return static_cast<std::size_t>(diag_freq.size()); }
};

struct HamiltonianBlocks {
    SymMatrix h_q;  // arrowhead
    Vector h_p;     // diagonal of H_P
};

struct SqueezeStage {
    Vector m_s;  // diagonal of M_S (position block; momentum block is 1 / m_s)
    double big_g = 0.0;
    double log_g = 0.0;
    SymMatrix g_mat;
};

struct RotateStage {
    Vector lambdas;
    OrthoMatrix m_r;
    int det_sign = 1;
};

struct FinalSqueezeStage {
    Vector m_t;     // diagonal of M_T (position block; momentum block is 1 / m_t)
    Vector omegas;  // normal-mode frequencies
};

struct NormalModeDecomposition {
    Vector m_s;
    double big_g = 0.0;
    SymMatrix g_mat;
    OrthoMatrix m_r;
    int det_sign = 1;
    Vector lambdas;
    Vector m_t;
    Vector omegas;
    Matrix z;      // 2n x 2n total map
    Matrix z_inv;  // assembled from the inverse factors, not by inversion

    std::size_t size() const { return static_cast<std::size_t>(omegas.size()); }
};

HamiltonianBlocks build_hamiltonian(const OscillatorNetwork& net);

// Matrix of the quadratic form H = x^T K x (includes the leading 1/2).
Matrix hamiltonian_form(const OscillatorNetwork& net);

SqueezeStage squeeze_stage(const OscillatorNetwork& net);
RotateStage rotate_stage(const SymMatrix& g_mat);
FinalSqueezeStage final_squeeze_stage(const Vector& lambdas, double big_g);
NormalModeDecomposition decompose(const OscillatorNetwork& net);

// blockdiag(M_T, M_T^-1) blockdiag(M_R, M_R) blockdiag(M_S, M_S^-1).
// Takes a raw matrix for m_r so the assembly can be exercised with a
// corrupted rotation.
Matrix assemble_z(const Vector& m_s, const Matrix& m_r, const Vector& m_t);

Matrix symplectic_j(std::size_t n);
double symplectic_residual(const Matrix& z);

// Closed-form diagnostics for two coupled oscillators.
struct TwoOscDiagnostics {
    double alpha = 0.0;
    double omega_bar = 0.0;
    double omega1_cap = 0.0;
    double omega2_cap = 0.0;
    double cos_phi = 0.0;
    double sin_phi = 0.0;
    double omega_plus = 0.0;
    double omega_minus = 0.0;
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
    double cap_omega_plus = 0.0;
    double cap_omega_minus = 0.0;
    bool stable = true;
};

TwoOscDiagnostics two_osc_closed_form(double omega1, double omega2, double g);

// M = M3 M2 M1 built from the closed-form diagnostics (4 x 4).
Matrix two_osc_transform(const TwoOscDiagnostics& d);

// Omega_{+/-} from the original parameters without any intermediate stage.
double two_osc_cap_omega(double omega1, double omega2, double g, bool plus);

struct SpringMassPair {
    double m1 = 1.0;
    double m2 = 1.0;
    double k1 = 1.0;
    double k2 = 1.0;
    double k = 0.0;
};

struct TwoOscParams {
    double omega1 = 0.0;
    double omega2 = 0.0;
    double g = 0.0;
};

TwoOscParams from_spring_mass(const SpringMassPair& p);

}  // namespace symplecta
