#pragma once

// Seeded generators for randomized checks (tests, acceptance, `verify`).

#include <cstdint>
#include <random>

#include "symplecta/classical.hpp"
#include "symplecta/linalg.hpp"
#include "symplecta/pipeline.hpp"
#include "symplecta/quantum.hpp"

namespace symplecta::sampling {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 42;

// Frequencies uniform in [w_min, w_max]; couplings scaled so that the
// Schur complement w_11 - sum_i w_1i^2 / w_ii stays >= (1 - margin) w_11,
// with margin drawn from [0, max_margin]. Coupling signs are random.
struct NetworkSpec {
    double w_min = 0.5;
    double w_max = 3.0;
    double max_margin = 0.9;
};

OscillatorNetwork random_stable_network(Rng& rng, std::size_t n, const NetworkSpec& spec = {});

// (w1, w2, g) with g^2 = f w1 w2, f drawn from [0, max_fraction].
TwoOscParams random_stable_pair(Rng& rng, double max_fraction = 0.95);

Matrix random_symmetric(Rng& rng, std::size_t n, double scale = 1.0);

// Product of n(n-1)/2 random planar rotations applied to I; det_sign = -1
// additionally flips one random row.
Matrix random_orthogonal(Rng& rng, std::size_t n, int det_sign = 1);

PhaseState random_phase_state(Rng& rng, std::size_t n, double scale = 1.0);

QuantumNetwork random_quantum_network(Rng& rng, std::size_t n);
SingleExcitationState random_single_excitation(Rng& rng, std::size_t n);

}  // namespace symplecta::sampling
