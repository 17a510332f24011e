#include "symplecta/random.hpp"

#include <cmath>
#include <numbers>

namespace symplecta::sampling {

namespace {

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

OscillatorNetwork random_stable_network(Rng& rng, std::size_t n, const NetworkSpec& spec) {
    const auto k = static_cast<Eigen::Index>(n);
    Vector w(k);
    for (Eigen::Index i = 0; i < k; ++i) w(i) = uniform(rng, spec.w_min, spec.w_max);

    Vector c(k - 1);
    double load = 0.0;
    for (Eigen::Index i = 0; i < k - 1; ++i) {
        c(i) = uniform(rng, -1.0, 1.0);
        load += c(i) * c(i) / w(i + 1);
    }
    const double margin = uniform(rng, 0.0, spec.max_margin);
    if (load > 0.0) c *= std::sqrt(margin * w(0) / load);
    return OscillatorNetwork(w, c);
}

TwoOscParams random_stable_pair(Rng& rng, double max_fraction) {
    const double w1 = uniform(rng, 0.2, 5.0);
    const double w2 = uniform(rng, 0.2, 5.0);
    const double f = uniform(rng, 0.0, max_fraction);
    const double sign = uniform(rng, 0.0, 1.0) < 0.8 ? -1.0 : 1.0;
    return TwoOscParams{w1, w2, sign * std::sqrt(f * w1 * w2)};
}

Matrix random_symmetric(Rng& rng, std::size_t n, double scale) {
    const auto k = static_cast<Eigen::Index>(n);
    Matrix a(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i; j < k; ++j) {
            a(i, j) = uniform(rng, -scale, scale);
            a(j, i) = a(i, j);
        }
    }
    return a;
}

Matrix random_orthogonal(Rng& rng, std::size_t n, int det_sign) {
    const auto k = static_cast<Eigen::Index>(n);
    Matrix m = Matrix::Identity(k, k);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            GivensRotation rot{i, j, uniform(rng, -std::numbers::pi, std::numbers::pi)};
            m = rot.embed(n) * m;
        }
    }
    // extra right factors, so the decomposition does not just replay the generators
    for (std::size_t r = 0; r < n; ++r) {
        const auto i = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
        const auto j = std::uniform_int_distribution<std::size_t>(i + 1, n - 1)(rng);
        GivensRotation rot{i, j, uniform(rng, -std::numbers::pi, std::numbers::pi)};
        m = m * rot.embed(n);
    }
    if (det_sign < 0) {
        const auto row = std::uniform_int_distribution<Eigen::Index>(0, k - 1)(rng);
        m.row(row) *= -1.0;
    }
    return m;
}

PhaseState random_phase_state(Rng& rng, std::size_t n, double scale) {
    const auto k = static_cast<Eigen::Index>(n);
    Vector q(k);
    Vector p(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        q(i) = uniform(rng, -scale, scale);
        p(i) = uniform(rng, -scale, scale);
    }
    return PhaseState(q, p);
}

QuantumNetwork random_quantum_network(Rng& rng, std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    Vector g(k);
    Vector c(k - 1);
    for (Eigen::Index i = 0; i < k; ++i) g(i) = uniform(rng, 0.5, 3.0);
    for (Eigen::Index i = 0; i < k - 1; ++i) c(i) = uniform(rng, -0.5, 0.2);
    return QuantumNetwork(g, c);
}

SingleExcitationState random_single_excitation(Rng& rng, std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    ComplexVector c(k);
    std::normal_distribution<double> normal;
    for (Eigen::Index i = 0; i < k; ++i) c(i) = {normal(rng), normal(rng)};
    c /= c.norm();
    return SingleExcitationState(c);
}

}  // namespace symplecta::sampling
