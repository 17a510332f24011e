#pragma once

// Dense real kernels for small systems: validated symmetric/orthogonal
// matrix types, cyclic Jacobi eigendecomposition and the planar-rotation
// factorization of special orthogonal matrices.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace symplecta {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

double inf_norm(const Matrix& m);

// Real symmetric matrix. Construction symmetrizes inputs whose asymmetry is
// within 1e-12 * ||A||_inf and rejects anything else.
class SymMatrix {
public:
    explicit SymMatrix(const Matrix& a);
    static SymMatrix diagonal(const Vector& d);

    std::size_t size() const { return static_cast<std::size_t>(m_.rows()); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

// Real orthogonal matrix, ||M M^T - I||_inf <= tol checked at construction.
class OrthoMatrix {
public:
    static constexpr double kTolerance = 1e-12;

    explicit OrthoMatrix(const Matrix& m, double tol = kTolerance);
    static OrthoMatrix identity(std::size_t n);

    std::size_t size() const { return static_cast<std::size_t>(m_.rows()); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const { return m_; }
    Matrix transpose() const { return m_.transpose(); }

private:
    Matrix m_;
};

double orthogonality_residual(const Matrix& m);

// Planar rotation acting on coordinates i < j (0-based):
//   [R]_ii = [R]_jj = cos(alpha), [R]_ij = sin(alpha), [R]_ji = -sin(alpha).
struct GivensRotation {
    std::size_t i = 0;
    std::size_t j = 1;
    double alpha = 0.0;

    Matrix embed(std::size_t n) const;
};

// rotations are stored in the order they were extracted: (1,2), (1,3), ...,
// (1,N), (2,3), ... Reconstruction left-multiplies each in turn, giving
// D * R_{N-1} * ... * R_1 where D = diag(1, ..., 1, det_sign).
struct GivensSequence {
    std::size_t n = 0;
    std::vector<GivensRotation> rotations;
    int det_sign = 1;
};

struct EigenResult {
    Vector lambdas;       // descending
    OrthoMatrix basis;    // rows are eigenvectors: basis * A * basis^T = diag
    int det_sign = 1;     // -1 if the last row was flipped to force det = +1
    int sweeps = 0;
};

struct JacobiOptions {
    double relative_tolerance = 1e-14;
    int max_sweeps = 30;
};

EigenResult jacobi_eigen(const SymMatrix& a, const JacobiOptions& options = {});

GivensSequence givens_decompose(const OrthoMatrix& m);
// Validates orthogonality at 1e-10 before factoring.
GivensSequence givens_decompose(const Matrix& m);
OrthoMatrix givens_reconstruct(const GivensSequence& seq);

// diag(e^{i lambda_k t})
ComplexVector matexp_hermitian_diag(const Vector& lambdas, double t);

}  // namespace symplecta
