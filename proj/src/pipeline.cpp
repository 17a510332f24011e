#include "symplecta/pipeline.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>
#include <vector>

#include "symplecta/error.hpp"

namespace symplecta {

OscillatorNetwork::OscillatorNetwork(Vector diag, Vector coupling)
    : diag_freq(std::move(diag)), couplings(std::move(coupling)) {
    const auto n = diag_freq.size();
    if (n < 2) fail(ErrorKind::InvalidArgument, "network needs at least two oscillators");
    if (couplings.size() != n - 1) {
        std::ostringstream os;
        os << "expected " << n - 1 << " couplings for " << n << " oscillators, got "
           << couplings.size();
        fail(ErrorKind::InvalidArgument, os.str());
    }
    if (!diag_freq.allFinite() || !couplings.allFinite()) {
        fail(ErrorKind::NonFinite, "network parameters must be finite");
    }
    if ((diag_freq.array() <= 0.0).any()) {
        fail(ErrorKind::InvalidArgument, "oscillator frequencies must be positive");
    }
}

HamiltonianBlocks build_hamiltonian(const OscillatorNetwork& net) {
    const auto n = static_cast<Eigen::Index>(net.size());
    Matrix hq = net.diag_freq.asDiagonal();
    for (Eigen::Index i = 1; i < n; ++i) {
        hq(0, i) = net.couplings(i - 1);
        hq(i, 0) = net.couplings(i - 1);
    }
    return HamiltonianBlocks{SymMatrix(hq), net.diag_freq};
}

Matrix hamiltonian_form(const OscillatorNetwork& net) {
    const auto blocks = build_hamiltonian(net);
    const auto n = static_cast<Eigen::Index>(net.size());
    Matrix k = Matrix::Zero(2 * n, 2 * n);
    k.topLeftCorner(n, n) = 0.5 * blocks.h_q.matrix();
    k.bottomRightCorner(n, n) = 0.5 * Matrix(blocks.h_p.asDiagonal());
    return k;
}

SqueezeStage squeeze_stage(const OscillatorNetwork& net) {
    const auto n = static_cast<Eigen::Index>(net.size());
    const Vector log_w = net.diag_freq.array().log();
    // G = prod sqrt(w_ii) is assembled in log space so that the individual
    // squeeze factors stay representable even when G alone would not be.
    const double log_g = 0.5 * log_w.sum();
    if (!(log_g < std::log(DBL_MAX)) || !(log_g > std::log(DBL_MIN))) {
        std::ostringstream os;
        os << "G = prod sqrt(w_ii) = exp(" << log_g
           << ") is not representable; rescale the frequencies";
        fail(ErrorKind::Overflow, os.str());
    }

    Vector m_s(n);
    Matrix g = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m_s(i) = std::exp(0.5 * log_g - 0.5 * log_w(i));
        g(i, i) = std::exp(2.0 * log_w(i) - log_g);
    }
    for (Eigen::Index j = 1; j < n; ++j) {
        const double v = net.couplings(j - 1) * std::exp(0.5 * (log_w(0) + log_w(j)) - log_g);
        g(0, j) = v;
        g(j, 0) = v;
    }
    if (!m_s.allFinite() || !g.allFinite()) {
        fail(ErrorKind::Overflow, "squeeze stage entries overflowed; rescale the frequencies");
    }
    return SqueezeStage{m_s, std::exp(log_g), log_g, SymMatrix(g)};
}

RotateStage rotate_stage(const SymMatrix& g_mat) {
    auto eig = jacobi_eigen(g_mat);
    return RotateStage{eig.lambdas, eig.basis, eig.det_sign};
}

FinalSqueezeStage final_squeeze_stage(const Vector& lambdas, double big_g) {
    if (!(big_g > 0.0) || !std::isfinite(big_g)) {
        fail(ErrorKind::InvalidArgument, "G must be positive and finite");
    }
    const auto n = lambdas.size();
    const double scale = lambdas.cwiseAbs().maxCoeff();
    std::vector<std::size_t> unstable;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(lambdas(i) > 1e-12 * scale)) unstable.push_back(static_cast<std::size_t>(i));
    }
    if (!unstable.empty()) {
        std::ostringstream os;
        os << "unstable normal mode(s):";
        for (auto i : unstable) os << ' ' << i + 1 << " (lambda=" << lambdas(static_cast<Eigen::Index>(i)) << ")";
        throw UnstableModeError(std::move(unstable), os.str());
    }

    const double log_g = std::log(big_g);
    Vector m_t(n);
    Vector omegas(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double log_l = std::log(lambdas(i));
        m_t(i) = std::exp(0.25 * (log_l - log_g));
        omegas(i) = std::sqrt(big_g * lambdas(i));
    }
    return FinalSqueezeStage{m_t, omegas};
}

Matrix assemble_z(const Vector& m_s, const Matrix& m_r, const Vector& m_t) {
    const auto n = m_s.size();
    Matrix z = Matrix::Zero(2 * n, 2 * n);
    z.topLeftCorner(n, n) = m_t.asDiagonal() * m_r * m_s.asDiagonal();
    z.bottomRightCorner(n, n) =
        m_t.cwiseInverse().asDiagonal() * m_r * m_s.cwiseInverse().asDiagonal();
    return z;
}

namespace {

Matrix assemble_z_inverse(const Vector& m_s, const Matrix& m_r, const Vector& m_t) {
    const auto n = m_s.size();
    Matrix zi = Matrix::Zero(2 * n, 2 * n);
    zi.topLeftCorner(n, n) =
        m_s.cwiseInverse().asDiagonal() * m_r.transpose() * m_t.cwiseInverse().asDiagonal();
    zi.bottomRightCorner(n, n) = m_s.asDiagonal() * m_r.transpose() * m_t.asDiagonal();
    return zi;
}

}  // namespace

NormalModeDecomposition decompose(const OscillatorNetwork& net) {
    auto squeeze = squeeze_stage(net);
    auto rotate = rotate_stage(squeeze.g_mat);
    auto final_sq = final_squeeze_stage(rotate.lambdas, squeeze.big_g);
    Matrix z = assemble_z(squeeze.m_s, rotate.m_r.matrix(), final_sq.m_t);
    Matrix z_inv = assemble_z_inverse(squeeze.m_s, rotate.m_r.matrix(), final_sq.m_t);
    return NormalModeDecomposition{
        squeeze.m_s,     squeeze.big_g,   squeeze.g_mat,    rotate.m_r,
        rotate.det_sign, rotate.lambdas,  final_sq.m_t,     final_sq.omegas,
        std::move(z),    std::move(z_inv)};
}

Matrix symplectic_j(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    Matrix j = Matrix::Zero(2 * k, 2 * k);
    j.topRightCorner(k, k).setIdentity();
    j.bottomLeftCorner(k, k) = -Matrix::Identity(k, k);
    return j;
}

double symplectic_residual(const Matrix& z) {
    const Matrix j = symplectic_j(static_cast<std::size_t>(z.rows() / 2));
    return inf_norm(z * j * z.transpose() - j);
}

TwoOscDiagnostics two_osc_closed_form(double omega1, double omega2, double g) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0) || !std::isfinite(omega1) ||
        !std::isfinite(omega2)) {
        fail(ErrorKind::InvalidArgument, "two-oscillator frequencies must be positive and finite");
    }
    if (!std::isfinite(g)) fail(ErrorKind::NonFinite, "coupling must be finite");
    if (omega1 * omega2 < g * g) {
        std::ostringstream os;
        os << "w1*w2 = " << omega1 * omega2 << " < g^2 = " << g * g
           << ": Omega_- is imaginary";
        throw UnstableModeError({1}, os.str());
    }

    TwoOscDiagnostics d;
    d.alpha = std::pow(omega2 / omega1, 0.25);
    d.omega_bar = std::sqrt(omega1 * omega2);
    d.omega1_cap = std::sqrt(omega1 * omega1 * omega1 / omega2);
    d.omega2_cap = std::sqrt(omega2 * omega2 * omega2 / omega1);

    const double diff = d.omega1_cap - d.omega2_cap;
    const double root = std::sqrt(diff * diff + 4.0 * g * g);
    // root == 0 only for equal frequencies without coupling: any angle works,
    // take the symmetric +/-45 degree split.
    const double ratio = root > 0.0 ? diff / root : 0.0;
    d.cos_phi = std::sqrt(0.5 * (1.0 + ratio));
    d.sin_phi = (g > 0.0 ? 1.0 : -1.0) * std::sqrt(0.5 * (1.0 - ratio));

    d.omega_plus = 0.5 * ((d.omega1_cap + d.omega2_cap) + root);
    d.omega_minus = 0.5 * ((d.omega1_cap + d.omega2_cap) - root);
    d.alpha_plus = std::pow(d.omega_plus / d.omega_bar, 0.25);
    d.alpha_minus = std::pow(std::max(d.omega_minus, 0.0) / d.omega_bar, 0.25);
    d.cap_omega_plus = std::sqrt(d.omega_bar * d.omega_plus);
    d.cap_omega_minus = std::sqrt(d.omega_bar * std::max(d.omega_minus, 0.0));
    d.stable = true;
    return d;
}

Matrix two_osc_transform(const TwoOscDiagnostics& d) {
    Matrix m1 = Matrix::Zero(4, 4);
    m1.diagonal() << d.alpha, 1.0 / d.alpha, 1.0 / d.alpha, d.alpha;

    Matrix m2 = Matrix::Zero(4, 4);
    const double c = d.cos_phi;
    const double s = d.sin_phi;
    m2.topLeftCorner(2, 2) << c, s, -s, c;
    m2.bottomRightCorner(2, 2) << c, s, -s, c;

    Matrix m3 = Matrix::Zero(4, 4);
    m3.diagonal() << d.alpha_plus, d.alpha_minus, 1.0 / d.alpha_plus, 1.0 / d.alpha_minus;
    return m3 * m2 * m1;
}

double two_osc_cap_omega(double omega1, double omega2, double g, bool plus) {
    const double w1s = omega1 * omega1;
    const double w2s = omega2 * omega2;
    const double inner = std::sqrt((w1s - w2s) * (w1s - w2s) + 4.0 * g * g * omega1 * omega2);
    const double sq = plus ? w1s + w2s + inner : w1s + w2s - inner;
    return std::sqrt(std::max(sq, 0.0)) / std::sqrt(2.0);
}

TwoOscParams from_spring_mass(const SpringMassPair& p) {
    if (!(p.m1 > 0.0) || !(p.m2 > 0.0)) fail(ErrorKind::InvalidArgument, "masses must be positive");
    if (!(p.k1 > 0.0) || !(p.k2 > 0.0)) {
        fail(ErrorKind::InvalidArgument, "spring constants k1, k2 must be positive");
    }
    if (!(p.k >= 0.0)) fail(ErrorKind::InvalidArgument, "coupling spring k must be non-negative");
    if (!std::isfinite(p.m1 + p.m2 + p.k1 + p.k2 + p.k)) {
        fail(ErrorKind::NonFinite, "spring-mass parameters must be finite");
    }
    const double a1 = std::pow(p.m1 * (p.k1 + p.k), 0.25);
    const double a2 = std::pow(p.m2 * (p.k2 + p.k), 0.25);
    return TwoOscParams{std::sqrt((p.k1 + p.k) / p.m1), std::sqrt((p.k2 + p.k) / p.m2),
                        -p.k / (a1 * a2)};
}

}  // namespace symplecta
