#pragma once

// Brute-force reference computations. Nothing here calls into the
// normal-mode pipeline: the dynamics matrix is rebuilt from the raw network
// parameters and eigenvalues come from independent algorithms.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "symplecta/classical.hpp"
#include "symplecta/linalg.hpp"
#include "symplecta/pipeline.hpp"

namespace symplecta::oracle {

struct OracleReport {
    std::string check_name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string details;

    static OracleReport make(std::string name, double max_error, double tolerance,
                             std::string details = {});
    std::string line() const;
};

// A = J * blockdiag(H_Q, H_P), so that dx/dt = A x.
Matrix dynamics_matrix(const OscillatorNetwork& net);

inline constexpr std::size_t kMaxRk4Steps = 100'000'000;

PhaseState rk4_hamilton(const OscillatorNetwork& net, const PhaseState& x0, double t_max,
                        double dt);

// exp(A) by scaling and squaring on the Taylor series: s is chosen so that
// ||A / 2^s||_inf <= 0.5, and the series stops once a term's norm falls
// below 1e-18 of the partial sum's.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> expm_taylor(
    const Eigen::MatrixBase<Derived>& a) {
    using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const auto n = a.rows();
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int s = 0;
    if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Mat scaled = a / std::ldexp(1.0, s);

    Mat sum = Mat::Identity(n, n);
    Mat term = Mat::Identity(n, n);
    for (int k = 1; k < 200; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        sum += term;
        const double term_norm = term.cwiseAbs().rowwise().sum().maxCoeff();
        const double sum_norm = sum.cwiseAbs().rowwise().sum().maxCoeff();
        if (term_norm < 1e-18 * sum_norm) break;
    }
    for (int k = 0; k < s; ++k) sum = sum * sum;
    return sum;
}

// e^{i h t} c0
ComplexVector matexp_series(const SymMatrix& h, double t, const ComplexVector& c0);

// exp(A t) x0 for the classical dynamics matrix.
PhaseState expm_evolve(const OscillatorNetwork& net, const PhaseState& x0, double t);

// Eigenvalues of a symmetric matrix (n <= 4), descending, by bisection on
// the sign pattern of det((A - lambda I)_k) over leading minors.
std::vector<double> charpoly_eigs(const SymMatrix& a);

// Normal-mode frequencies from the eigenvalues of the 2n x 2n dynamics
// matrix, descending.
std::vector<double> dynamics_spectrum(const OscillatorNetwork& net);

}  // namespace symplecta::oracle
