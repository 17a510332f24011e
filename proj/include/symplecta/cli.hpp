#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symplecta/oracle.hpp"
#include "symplecta/pipeline.hpp"
#include "symplecta/quantum.hpp"

namespace symplecta::cli {

// Exit codes are a stable scripting contract.
enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,
    kExitUnstable = 2,
    kExitGeometry = 3,
    kExitVerifyFailed = 4,
};

enum class NetworkKind { Classical, Quantum };

struct NetworkConfig {
    NetworkKind kind = NetworkKind::Classical;
    std::size_t n = 0;
    Vector diag;    // diag_freq or g_diag
    Vector couple;  // couplings or g_couple
    std::optional<SpringMassPair> spring_mass;

    OscillatorNetwork classical() const;
    QuantumNetwork quantum() const;
};

NetworkConfig parse_config(const std::string& json_text);
NetworkConfig load_config(const std::string& path);
std::string config_to_json(const NetworkConfig& config);

PhaseState parse_initial_state(const std::string& json_text);

// 17 significant digits, '.' separator; parses back to the same double.
std::string format_double(double v);

std::string normal_modes_document(const NetworkConfig& config);
std::string evolve_csv(const OscillatorNetwork& net, const PhaseState& x0, double t_max,
                       double dt);
std::string sections_csv(const OscillatorNetwork& net, const std::string& stage,
                         const std::string& plane, double energy, std::size_t samples);
std::string quantum_evolve_csv(const QuantumNetwork& qnet, std::size_t site, double t_max,
                               double dt);

struct VerifyOptions {
    std::uint64_t seed = 42;
    bool corrupt_mr = false;  // negative control: perturb M_R before assembling Z
};

std::vector<oracle::OracleReport> verify_checks(const NetworkConfig& config,
                                                const VerifyOptions& options);

// Seed precedence: --seed, then SYMPLECTA_SEED, then 42.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace symplecta::cli
