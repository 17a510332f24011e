#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "symplecta/pipeline.hpp"

namespace symplecta {

struct PhaseState {
    Vector q;
    Vector p;

    PhaseState(Vector q_, Vector p_);
    static PhaseState from_stacked(const Vector& x);

    std::size_t size() const { return static_cast<std::size_t>(q.size()); }
    Vector stacked() const;
};

// Lambda = [[Lambda_C, Lambda_S], [-Lambda_S, Lambda_C]]
struct PropagatorBlocks {
    double t = 0.0;
    Vector cos_diag;
    Vector sin_diag;

    Matrix matrix() const;
    Vector apply(const Vector& x_bar) const;
};

PropagatorBlocks propagator(const Vector& omegas, double t);

// x(t) = Z^-1 Lambda(t) Z x(0)
PhaseState evolve(const NormalModeDecomposition& modes, const PhaseState& x0, double t);
PhaseState evolve(const OscillatorNetwork& net, const PhaseState& x0, double t);

inline constexpr std::size_t kMaxTrajectorySamples = 10'000'000;

// Sample times k * dt for k = 0..floor(t_max / dt); each sample evaluated
// from x0 directly.
std::vector<double> sample_times(double t_max, double dt);
std::vector<PhaseState> evolve_trajectory(const OscillatorNetwork& net, const PhaseState& x0,
                                          double t_max, double dt);

double energy(const OscillatorNetwork& net, const PhaseState& x);

enum class Stage { Original, AfterS, AfterR, AfterT };

const char* to_string(Stage stage);
Stage parse_stage(const std::string& text);

// Linear map from original coordinates to the stage's coordinates, and its
// inverse, both 2n x 2n.
Matrix stage_transform(const NormalModeDecomposition& modes, Stage stage);
Matrix stage_inverse(const NormalModeDecomposition& modes, Stage stage);

// Quadratic form of H in stage coordinates: (M^-1)^T K M^-1, K including 1/2.
Matrix stage_hamiltonian(const OscillatorNetwork& net, const NormalModeDecomposition& modes,
                         Stage stage);

// Two distinct axes of the 2n-dimensional stage phase space, 0-based in the
// stacked (q..., p...) layout.
struct SectionPlane {
    std::size_t first = 0;
    std::size_t second = 1;
};

std::string axis_label(std::size_t axis, std::size_t n);
SectionPlane parse_plane(const std::string& text, std::size_t n);

struct SectionCurve {
    Stage stage = Stage::Original;
    SectionPlane plane;
    std::array<std::string, 2> labels;
    double energy = 1.0;
    Matrix form;  // 2 x 2 restriction of the stage Hamiltonian
    std::vector<std::array<double, 2>> points;

    double cross_term() const { return form(0, 1); }
    // Ratio of the longest to the shortest semi-axis.
    double axis_ratio() const;
};

SectionCurve section_curve(const OscillatorNetwork& net, const NormalModeDecomposition& modes,
                           Stage stage, SectionPlane plane, double energy, std::size_t samples);
SectionCurve section_curve(const OscillatorNetwork& net, Stage stage, SectionPlane plane,
                           double energy, std::size_t samples);

}  // namespace symplecta
