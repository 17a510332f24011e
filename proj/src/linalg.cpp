#include "symplecta/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "symplecta/error.hpp"

namespace symplecta {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::Asymmetric: return "Asymmetric";
        case ErrorKind::NonOrthogonal: return "NonOrthogonal";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::UnstableMode: return "UnstableMode";
        case ErrorKind::IndefiniteSection: return "IndefiniteSection";
        case ErrorKind::SampleBudget: return "SampleBudget";
        case ErrorKind::StepBudget: return "StepBudget";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::ComplexLeakage: return "ComplexLeakage";
    }
    return "Unknown";
}

double inf_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

double orthogonality_residual(const Matrix& m) {
    const auto n = m.rows();
    return inf_norm(m * m.transpose() - Matrix::Identity(n, n));
}

SymMatrix::SymMatrix(const Matrix& a) {
    if (a.rows() < 1 || a.rows() != a.cols()) {
        fail(ErrorKind::InvalidArgument, "SymMatrix requires a non-empty square matrix");
    }
    if (!a.allFinite()) {
        fail(ErrorKind::NonFinite, "SymMatrix entries must be finite");
    }
    const double asym = inf_norm(a - a.transpose());
    if (asym > 1e-12 * inf_norm(a)) {
        std::ostringstream os;
        os << "matrix asymmetry " << asym << " exceeds 1e-12 * ||A||_inf";
        fail(ErrorKind::Asymmetric, os.str());
    }
    m_ = 0.5 * (a + a.transpose());
}

SymMatrix SymMatrix::diagonal(const Vector& d) {
    return SymMatrix(Matrix(d.asDiagonal()));
}

OrthoMatrix::OrthoMatrix(const Matrix& m, double tol) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        fail(ErrorKind::InvalidArgument, "OrthoMatrix requires a non-empty square matrix");
    }
    if (!m.allFinite()) {
        fail(ErrorKind::NonFinite, "OrthoMatrix entries must be finite");
    }
    const double res = orthogonality_residual(m);
    if (!(res <= tol)) {
        std::ostringstream os;
        os << "||M M^T - I||_inf = " << res << " exceeds " << tol;
        fail(ErrorKind::NonOrthogonal, os.str());
    }
    m_ = m;
}

OrthoMatrix OrthoMatrix::identity(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return OrthoMatrix(Matrix::Identity(k, k));
}

Matrix GivensRotation::embed(std::size_t n) const {
    const auto k = static_cast<Eigen::Index>(n);
    Matrix r = Matrix::Identity(k, k);
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    const auto a = static_cast<Eigen::Index>(i);
    const auto b = static_cast<Eigen::Index>(j);
    r(a, a) = c;
    r(b, b) = c;
    r(a, b) = s;
    r(b, a) = -s;
    return r;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (i != j) sum += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

// A <- J^T A J and V <- V J for the rotation zeroing a(p, q).
void jacobi_rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const Eigen::Index n = a.rows();

    for (Eigen::Index k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

EigenResult jacobi_eigen(const SymMatrix& sym, const JacobiOptions& options) {
    Matrix a = sym.matrix();
    const Eigen::Index n = a.rows();
    Matrix v = Matrix::Identity(n, n);
    const double threshold = options.relative_tolerance * a.norm();

    int sweeps = 0;
    for (;;) {
        if (off_diagonal_norm(a) <= threshold) break;
        if (sweeps == options.max_sweeps) {
            std::ostringstream os;
            os << "Jacobi off-diagonal norm " << off_diagonal_norm(a) << " above "
               << threshold << " after " << sweeps << " sweeps";
            fail(ErrorKind::NoConvergence, os.str());
        }
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) != 0.0) jacobi_rotate(a, v, p, q);
            }
        }
        ++sweeps;
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index l, Eigen::Index r) { return a(l, l) > a(r, r); });

    Vector lambdas(n);
    Matrix basis(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        lambdas(k) = a(src, src);
        basis.row(k) = v.col(src).transpose();

        Eigen::Index lead = 0;
        basis.row(k).cwiseAbs().maxCoeff(&lead);
        if (basis(k, lead) < 0.0) basis.row(k) *= -1.0;
    }

    int det_sign = 1;
    if (basis.determinant() < 0.0) {
        basis.row(n - 1) *= -1.0;
        det_sign = -1;
    }
    return EigenResult{lambdas, OrthoMatrix(basis), det_sign, sweeps};
}

GivensSequence givens_decompose(const Matrix& m) {
    return givens_decompose(OrthoMatrix(m, 1e-10));
}

GivensSequence givens_decompose(const OrthoMatrix& m) {
    Matrix a = m.matrix();
    const Eigen::Index n = a.rows();
    GivensSequence seq;
    seq.n = static_cast<std::size_t>(n);

    // Zero row k to the right of the diagonal with A <- A R_{k,j}^T; the
    // lower-right block stays orthogonal, so recurse on it in place.
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        for (Eigen::Index j = k + 1; j < n; ++j) {
            double alpha = std::atan2(a(k, j), a(k, k));
            if (alpha <= -std::numbers::pi) alpha += 2.0 * std::numbers::pi;
            if (alpha == 0.0) continue;
            const double c = std::cos(alpha);
            const double s = std::sin(alpha);
            for (Eigen::Index r = 0; r < n; ++r) {
                const double ark = a(r, k);
                const double arj = a(r, j);
                a(r, k) = c * ark + s * arj;
                a(r, j) = -s * ark + c * arj;
            }
            seq.rotations.push_back(
                {static_cast<std::size_t>(k), static_cast<std::size_t>(j), alpha});
        }
    }
    // Planar rotations only reach SO(n); a reflection shows up as -1 in the
    // final diagonal slot.
    if (a(n - 1, n - 1) < 0.0) seq.det_sign = -1;
    return seq;
}

OrthoMatrix givens_reconstruct(const GivensSequence& seq) {
    if (seq.n < 1) fail(ErrorKind::InvalidArgument, "GivensSequence dimension must be >= 1");
    if (seq.det_sign != 1 && seq.det_sign != -1) {
        fail(ErrorKind::InvalidArgument, "det_sign must be +1 or -1");
    }
    const auto n = static_cast<Eigen::Index>(seq.n);
    Matrix m = Matrix::Identity(n, n);
    for (const auto& rot : seq.rotations) {
        if (!(rot.i < rot.j && rot.j < seq.n)) {
            fail(ErrorKind::InvalidArgument, "Givens rotation indices must satisfy i < j < n");
        }
        const auto i = static_cast<Eigen::Index>(rot.i);
        const auto j = static_cast<Eigen::Index>(rot.j);
        const double c = std::cos(rot.alpha);
        const double s = std::sin(rot.alpha);
        for (Eigen::Index col = 0; col < n; ++col) {
            const double mi = m(i, col);
            const double mj = m(j, col);
            m(i, col) = c * mi + s * mj;
            m(j, col) = -s * mi + c * mj;
        }
    }
    if (seq.det_sign < 0) m.row(n - 1) *= -1.0;
    return OrthoMatrix(m);
}

ComplexVector matexp_hermitian_diag(const Vector& lambdas, double t) {
    ComplexVector out(lambdas.size());
    for (Eigen::Index k = 0; k < lambdas.size(); ++k) {
        out(k) = std::polar(1.0, lambdas(k) * t);
    }
    return out;
}

}  // namespace symplecta
