#include "symplecta/classical.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "symplecta/error.hpp"
#include "symplecta/kernels.hpp"

namespace symplecta {

PhaseState::PhaseState(Vector q_, Vector p_) : q(std::move(q_)), p(std::move(p_)) {
    if (q.size() != p.size()) {
        fail(ErrorKind::InvalidArgument, "phase state needs as many momenta as positions");
    }
    if (!q.allFinite() || !p.allFinite()) fail(ErrorKind::NonFinite, "phase state must be finite");
}

PhaseState PhaseState::from_stacked(const Vector& x) {
    if (x.size() % 2 != 0) fail(ErrorKind::InvalidArgument, "stacked phase vector has odd length");
    const auto n = x.size() / 2;
    return PhaseState(x.head(n), x.tail(n));
}

Vector PhaseState::stacked() const {
    Vector x(q.size() + p.size());
    x << q, p;
    return x;
}

Matrix PropagatorBlocks::matrix() const {
    const auto n = cos_diag.size();
    Matrix m = Matrix::Zero(2 * n, 2 * n);
    m.topLeftCorner(n, n) = cos_diag.asDiagonal();
    m.topRightCorner(n, n) = sin_diag.asDiagonal();
    m.bottomLeftCorner(n, n) = -Matrix(sin_diag.asDiagonal());
    m.bottomRightCorner(n, n) = cos_diag.asDiagonal();
    return m;
}

Vector PropagatorBlocks::apply(const Vector& x_bar) const {
    const auto n = cos_diag.size();
    Vector out(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double q = x_bar(i);
        const double p = x_bar(n + i);
        out(i) = cos_diag(i) * q + sin_diag(i) * p;
        out(n + i) = -sin_diag(i) * q + cos_diag(i) * p;
    }
    return out;
}

PropagatorBlocks propagator(const Vector& omegas, double t) {
    if (!std::isfinite(t)) fail(ErrorKind::NonFinite, "propagator time must be finite");
    PropagatorBlocks blocks{t, Vector(omegas.size()), Vector(omegas.size())};
    for (Eigen::Index i = 0; i < omegas.size(); ++i) {
        blocks.cos_diag(i) = std::cos(omegas(i) * t);
        blocks.sin_diag(i) = std::sin(omegas(i) * t);
    }
    return blocks;
}

PhaseState evolve(const NormalModeDecomposition& modes, const PhaseState& x0, double t) {
    if (x0.size() != modes.size()) {
        fail(ErrorKind::InvalidArgument, "initial state dimension does not match the network");
    }
    if (t == 0.0) return x0;
    const Vector x_bar = modes.z * x0.stacked();
    return PhaseState::from_stacked(modes.z_inv * propagator(modes.omegas, t).apply(x_bar));
}

PhaseState evolve(const OscillatorNetwork& net, const PhaseState& x0, double t) {
    return evolve(decompose(net), x0, t);
}

std::vector<double> sample_times(double t_max, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) fail(ErrorKind::InvalidArgument, "dt must be positive");
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
        fail(ErrorKind::InvalidArgument, "t_max must be non-negative");
    }
    const double steps = std::floor(t_max / dt + 1e-9);
    if (steps + 1.0 > static_cast<double>(kMaxTrajectorySamples)) {
        std::ostringstream os;
        os << "trajectory would need " << steps + 1.0 << " samples (limit "
           << kMaxTrajectorySamples << ")";
        fail(ErrorKind::SampleBudget, os.str());
    }
    const auto count = static_cast<std::size_t>(steps) + 1;
    std::vector<double> times(count);
    for (std::size_t k = 0; k < count; ++k) times[k] = static_cast<double>(k) * dt;
    return times;
}

std::vector<PhaseState> evolve_trajectory(const OscillatorNetwork& net, const PhaseState& x0,
                                          double t_max, double dt) {
    const auto times = sample_times(t_max, dt);
    const auto modes = decompose(net);
    return kernels::omp::classical_samples(modes, x0, times);
}

double energy(const OscillatorNetwork& net, const PhaseState& x) {
    if (x.size() != net.size()) {
        fail(ErrorKind::InvalidArgument, "state dimension does not match the network");
    }
    double e = 0.0;
    for (Eigen::Index i = 0; i < x.q.size(); ++i) {
        e += 0.5 * net.diag_freq(i) * (x.p(i) * x.p(i) + x.q(i) * x.q(i));
    }
    for (Eigen::Index i = 1; i < x.q.size(); ++i) e += net.couplings(i - 1) * x.q(0) * x.q(i);
    return e;
}

const char* to_string(Stage stage) {
    switch (stage) {
        case Stage::Original: return "original";
        case Stage::AfterS: return "after-s";
        case Stage::AfterR: return "after-r";
        case Stage::AfterT: return "after-t";
    }
    return "original";
}

Stage parse_stage(const std::string& text) {
    if (text == "original") return Stage::Original;
    if (text == "after-s" || text == "after_S" || text == "after_s") return Stage::AfterS;
    if (text == "after-r" || text == "after_R" || text == "after_r") return Stage::AfterR;
    if (text == "after-t" || text == "after_T" || text == "after_t") return Stage::AfterT;
    fail(ErrorKind::InvalidArgument, "unknown stage '" + text + "'");
}

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

Matrix squeeze_map(const Vector& scale) {
    return block_diag(scale.asDiagonal(), scale.cwiseInverse().asDiagonal());
}

}  // namespace

Matrix stage_transform(const NormalModeDecomposition& modes, Stage stage) {
    const auto n = static_cast<Eigen::Index>(modes.size());
    const Matrix s = squeeze_map(modes.m_s);
    switch (stage) {
        case Stage::Original: return Matrix::Identity(2 * n, 2 * n);
        case Stage::AfterS: return s;
        case Stage::AfterR: return block_diag(modes.m_r.matrix(), modes.m_r.matrix()) * s;
        case Stage::AfterT: return modes.z;
    }
    return Matrix::Identity(2 * n, 2 * n);
}

Matrix stage_inverse(const NormalModeDecomposition& modes, Stage stage) {
    const auto n = static_cast<Eigen::Index>(modes.size());
    const Matrix s_inv = squeeze_map(modes.m_s.cwiseInverse());
    const Matrix r_t = modes.m_r.transpose();
    switch (stage) {
        case Stage::Original: return Matrix::Identity(2 * n, 2 * n);
        case Stage::AfterS: return s_inv;
        case Stage::AfterR: return s_inv * block_diag(r_t, r_t);
        case Stage::AfterT: return modes.z_inv;
    }
    return Matrix::Identity(2 * n, 2 * n);
}

Matrix stage_hamiltonian(const OscillatorNetwork& net, const NormalModeDecomposition& modes,
                         Stage stage) {
    const Matrix inv = stage_inverse(modes, stage);
    const Matrix k = inv.transpose() * hamiltonian_form(net) * inv;
    return 0.5 * (k + k.transpose());
}

std::string axis_label(std::size_t axis, std::size_t n) {
    if (axis >= 2 * n) fail(ErrorKind::InvalidArgument, "axis index out of range");
    return (axis < n ? "q" : "p") + std::to_string(axis % n + 1);
}

SectionPlane parse_plane(const std::string& text, std::size_t n) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        fail(ErrorKind::InvalidArgument, "plane must be '<axis1>,<axis2>', e.g. q1,p1");
    }
    auto parse_axis = [n](const std::string& label) -> std::size_t {
        if (label.size() < 2 || (label[0] != 'q' && label[0] != 'p')) {
            fail(ErrorKind::InvalidArgument, "bad axis label '" + label + "'");
        }
        std::size_t idx = 0;
        for (std::size_t c = 1; c < label.size(); ++c) {
            if (label[c] < '0' || label[c] > '9') {
                fail(ErrorKind::InvalidArgument, "bad axis label '" + label + "'");
            }
            idx = idx * 10 + static_cast<std::size_t>(label[c] - '0');
            if (idx > n) break;
        }
        if (idx < 1 || idx > n) {
            fail(ErrorKind::InvalidArgument, "axis '" + label + "' out of range for n=" +
                                                 std::to_string(n));
        }
        return (label[0] == 'q' ? 0 : n) + idx - 1;
    };
    SectionPlane plane{parse_axis(text.substr(0, comma)), parse_axis(text.substr(comma + 1))};
    if (plane.first == plane.second) fail(ErrorKind::InvalidArgument, "plane axes must differ");
    return plane;
}

double SectionCurve::axis_ratio() const {
    const auto eig = jacobi_eigen(SymMatrix(form));
    return std::sqrt(eig.lambdas(0) / eig.lambdas(1));
}

namespace {

SectionCurve section_from(const Matrix& h, std::size_t n, Stage stage, SectionPlane plane,
                          double energy, std::size_t samples) {
    if (plane.first >= 2 * n || plane.second >= 2 * n || plane.first == plane.second) {
        fail(ErrorKind::InvalidArgument, "invalid section plane");
    }
    if (!(energy > 0.0) || !std::isfinite(energy)) {
        fail(ErrorKind::InvalidArgument, "section energy must be positive");
    }
    if (samples < 8) fail(ErrorKind::InvalidArgument, "a section needs at least 8 samples");

    const auto a = static_cast<Eigen::Index>(plane.first);
    const auto b = static_cast<Eigen::Index>(plane.second);
    Matrix form(2, 2);
    form << h(a, a), h(a, b), h(b, a), h(b, b);

    const auto eig = jacobi_eigen(SymMatrix(form));
    const double hi = eig.lambdas(0);
    const double lo = eig.lambdas(1);
    if (!(hi > 0.0) || !(lo > 1e-12 * hi)) {
        std::ostringstream os;
        os << "restricted form on (" << axis_label(plane.first, n) << ", "
           << axis_label(plane.second, n) << ") is not positive definite (eigenvalues " << hi
           << ", " << lo << ")";
        fail(ErrorKind::IndefiniteSection, os.str());
    }

    SectionCurve curve;
    curve.stage = stage;
    curve.plane = plane;
    curve.labels = {axis_label(plane.first, n), axis_label(plane.second, n)};
    curve.energy = energy;
    curve.form = form;
    curve.points.reserve(samples);

    const double r_major = std::sqrt(energy / hi);
    const double r_minor = std::sqrt(energy / lo);
    const Matrix& v = eig.basis.matrix();
    for (std::size_t k = 0; k < samples; ++k) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
        const double c = r_major * std::cos(theta);
        const double s = r_minor * std::sin(theta);
        curve.points.push_back({c * v(0, 0) + s * v(1, 0), c * v(0, 1) + s * v(1, 1)});
    }
    return curve;
}

}  // namespace

SectionCurve section_curve(const OscillatorNetwork& net, const NormalModeDecomposition& modes,
                           Stage stage, SectionPlane plane, double energy, std::size_t samples) {
    return section_from(stage_hamiltonian(net, modes, stage), modes.size(), stage, plane, energy,
                        samples);
}

// The original stage needs no decomposition, so unstable networks reach the
// positivity check instead of failing in the pipeline.
SectionCurve section_curve(const OscillatorNetwork& net, Stage stage, SectionPlane plane,
                           double energy, std::size_t samples) {
    if (stage == Stage::Original) {
        return section_from(hamiltonian_form(net), net.size(), stage, plane, energy, samples);
    }
    return section_curve(net, decompose(net), stage, plane, energy, samples);
}

}  // namespace symplecta
