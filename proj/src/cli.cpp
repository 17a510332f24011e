#include "symplecta/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symplecta/classical.hpp"
#include "symplecta/error.hpp"
#include "symplecta/kernels.hpp"
#include "symplecta/random.hpp"

namespace symplecta::cli {

using nlohmann::json;

namespace {

[[noreturn]] void input_error(const std::string& what) { fail(ErrorKind::InvalidArgument, what); }

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) input_error("unknown field '" + key + "' in " + where);
    }
}

double number_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) input_error("missing field '" + key + "' in " + where);
    const auto& v = obj.at(key);
    if (!v.is_number()) input_error("field '" + key + "' in " + where + " must be a number");
    return v.get<double>();
}

Vector vector_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) input_error("missing field '" + key + "' in " + where);
    const auto& v = obj.at(key);
    if (!v.is_array()) input_error("field '" + key + "' in " + where + " must be an array");
    Vector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) input_error("field '" + key + "' must contain only numbers");
        out(static_cast<Eigen::Index>(i)) = v[i].get<double>();
    }
    return out;
}

json vector_json(const Vector& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i).transpose()));
    return rows;
}

json givens_json(const GivensSequence& seq) {
    json rotations = json::array();
    for (const auto& r : seq.rotations) {
        rotations.push_back({{"i", r.i + 1}, {"j", r.j + 1}, {"alpha", r.alpha}});
    }
    return json{{"det_sign", seq.det_sign}, {"rotations", rotations}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) input_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) input_error("cannot write '" + path + "'");
    file << text;
}

}  // namespace

OscillatorNetwork NetworkConfig::classical() const {
    if (kind != NetworkKind::Classical) input_error("config is not a classical network");
    return OscillatorNetwork(diag, couple);
}

QuantumNetwork NetworkConfig::quantum() const {
    if (kind != NetworkKind::Quantum) input_error("config is not a quantum network");
    return QuantumNetwork(diag, couple);
}

NetworkConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        input_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) input_error("config must be a JSON object");
    if (!root.contains("kind") || !root.at("kind").is_string()) {
        input_error("config needs a string field 'kind' (classical | quantum)");
    }
    if (!root.contains("n") || !root.at("n").is_number_integer() || root.at("n").get<long long>() < 1) {
        input_error("config needs a positive integer field 'n'");
    }

    NetworkConfig config;
    config.n = root.at("n").get<std::size_t>();
    const auto kind = root.at("kind").get<std::string>();
    if (kind == "classical") {
        config.kind = NetworkKind::Classical;
        reject_unknown_keys(root, {"kind", "n", "diag_freq", "couplings", "spring_mass"}, "config");
        const bool has_sm = root.contains("spring_mass");
        const bool has_direct = root.contains("diag_freq") || root.contains("couplings");
        if (has_sm == has_direct) {
            input_error("classical config needs exactly one parameter source: "
                        "diag_freq+couplings or spring_mass");
        }
        if (has_sm) {
            const auto& sm = root.at("spring_mass");
            if (!sm.is_object()) input_error("spring_mass must be an object");
            reject_unknown_keys(sm, {"m1", "m2", "k1", "k2", "k"}, "spring_mass");
            if (config.n != 2) input_error("spring_mass configs describe exactly n = 2 oscillators");
            SpringMassPair p{number_field(sm, "m1", "spring_mass"),
                             number_field(sm, "m2", "spring_mass"),
                             number_field(sm, "k1", "spring_mass"),
                             number_field(sm, "k2", "spring_mass"),
                             number_field(sm, "k", "spring_mass")};
            const auto params = from_spring_mass(p);
            config.spring_mass = p;
            config.diag = Vector(2);
            config.diag << params.omega1, params.omega2;
            config.couple = Vector(1);
            config.couple << params.g;
        } else {
            config.diag = vector_field(root, "diag_freq", "config");
            config.couple = vector_field(root, "couplings", "config");
        }
    } else if (kind == "quantum") {
        config.kind = NetworkKind::Quantum;
        reject_unknown_keys(root, {"kind", "n", "g_diag", "g_couple"}, "config");
        config.diag = vector_field(root, "g_diag", "config");
        config.couple = vector_field(root, "g_couple", "config");
    } else {
        input_error("unknown config kind '" + kind + "'");
    }

    if (static_cast<std::size_t>(config.diag.size()) != config.n ||
        static_cast<std::size_t>(config.couple.size()) + 1 != config.n) {
        input_error("config lengths are inconsistent with n = " + std::to_string(config.n));
    }
    // Validate by constructing the network once.
    if (config.kind == NetworkKind::Classical) {
        (void)config.classical();
    } else {
        (void)config.quantum();
    }
    return config;
}

NetworkConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

std::string config_to_json(const NetworkConfig& config) {
    json root;
    root["n"] = config.n;
    if (config.kind == NetworkKind::Classical) {
        root["kind"] = "classical";
        root["diag_freq"] = vector_json(config.diag);
        root["couplings"] = vector_json(config.couple);
    } else {
        root["kind"] = "quantum";
        root["g_diag"] = vector_json(config.diag);
        root["g_couple"] = vector_json(config.couple);
    }
    return root.dump(2) + "\n";
}

PhaseState parse_initial_state(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        input_error(std::string("initial state is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) input_error("initial state must be a JSON object {\"q\": [...], \"p\": [...]}");
    reject_unknown_keys(root, {"q", "p"}, "initial state");
    return PhaseState(vector_field(root, "q", "initial state"),
                      vector_field(root, "p", "initial state"));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string normal_modes_document(const NetworkConfig& config) {
    json doc;
    doc["n"] = config.n;
    if (config.kind == NetworkKind::Classical) {
        const auto net = config.classical();
        const auto modes = decompose(net);
        doc["kind"] = "classical";
        doc["omegas"] = vector_json(modes.omegas);
        doc["lambdas"] = vector_json(modes.lambdas);
        doc["big_g"] = modes.big_g;
        doc["m_s"] = vector_json(modes.m_s);
        doc["m_t"] = vector_json(modes.m_t);
        doc["m_r"] = matrix_json(modes.m_r.matrix());
        doc["givens"] = givens_json(givens_decompose(modes.m_r));
        doc["symplectic_residual"] = symplectic_residual(modes.z);
    } else {
        const auto modes = quantum_normal_modes(config.quantum());
        doc["kind"] = "quantum";
        doc["lambdas"] = vector_json(modes.lambdas);
        doc["m_r"] = matrix_json(modes.m_r.matrix());
        doc["givens"] = givens_json(givens_decompose(modes.m_r));
    }
    return doc.dump(2) + "\n";
}

std::string evolve_csv(const OscillatorNetwork& net, const PhaseState& x0, double t_max,
                       double dt) {
    if (x0.size() != net.size()) {
        input_error("initial state has dimension " + std::to_string(x0.size()) +
                    " but the network has n = " + std::to_string(net.size()));
    }
    const auto times = sample_times(t_max, dt);
    const auto modes = decompose(net);
    const auto states = kernels::omp::classical_samples(modes, x0, times);
    const Vector e = kernels::omp::energies(net, states);

    const std::size_t n = net.size();
    std::string out;
    out += "# symplecta evolve\n";
    out += "# n=" + std::to_string(n) + "\n";
    out += "# t_max=" + format_double(t_max) + "\n";
    out += "# dt=" + format_double(dt) + "\n";
    out += "t";
    for (std::size_t i = 1; i <= n; ++i) out += ",q" + std::to_string(i);
    for (std::size_t i = 1; i <= n; ++i) out += ",p" + std::to_string(i);
    out += ",energy\n";
    for (std::size_t k = 0; k < states.size(); ++k) {
        out += format_double(times[k]);
        for (Eigen::Index i = 0; i < states[k].q.size(); ++i) out += "," + format_double(states[k].q(i));
        for (Eigen::Index i = 0; i < states[k].p.size(); ++i) out += "," + format_double(states[k].p(i));
        out += "," + format_double(e(static_cast<Eigen::Index>(k))) + "\n";
    }
    return out;
}

std::string sections_csv(const OscillatorNetwork& net, const std::string& stage,
                         const std::string& plane, double energy, std::size_t samples) {
    const Stage st = parse_stage(stage);
    const auto pl = parse_plane(plane, net.size());
    const auto curve = section_curve(net, st, pl, energy, samples);
    std::string out;
    out += "# symplecta sections\n";
    out += std::string("# stage=") + to_string(st) + "\n";
    out += "# plane=" + curve.labels[0] + "," + curve.labels[1] + "\n";
    out += "# energy=" + format_double(energy) + "\n";
    out += "# axes are stage-local coordinates\n";
    out += "u,v\n";
    for (const auto& pt : curve.points) {
        out += format_double(pt[0]) + "," + format_double(pt[1]) + "\n";
    }
    return out;
}

std::string quantum_evolve_csv(const QuantumNetwork& qnet, std::size_t site, double t_max,
                               double dt) {
    const std::size_t n = qnet.size();
    if (site < 1 || site > n) {
        input_error("initial site " + std::to_string(site) + " out of range 1.." + std::to_string(n));
    }
    const auto times = sample_times(t_max, dt);
    const auto modes = quantum_normal_modes(qnet);
    const auto c0 = SingleExcitationState::site(n, site - 1);
    const auto amps = kernels::omp::quantum_samples(modes, c0.amps(), times);

    std::string out;
    out += "# symplecta quantum-evolve\n";
    out += "# n=" + std::to_string(n) + "\n";
    out += "# initial_site=" + std::to_string(site) + "\n";
    out += "t";
    for (std::size_t i = 1; i <= n; ++i) {
        out += ",re_c" + std::to_string(i) + ",im_c" + std::to_string(i);
    }
    out += ",norm,survival\n";
    for (std::size_t k = 0; k < amps.size(); ++k) {
        out += format_double(times[k]);
        for (Eigen::Index i = 0; i < amps[k].size(); ++i) {
            out += "," + format_double(amps[k](i).real()) + "," + format_double(amps[k](i).imag());
        }
        out += "," + format_double(amps[k].norm());
        out += "," + format_double(std::norm(amps[k](static_cast<Eigen::Index>(site - 1)))) + "\n";
    }
    return out;
}

namespace {

using oracle::OracleReport;

double max_relative(const Vector& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double ref = b[static_cast<std::size_t>(i)];
        worst = std::max(worst, std::abs(a(i) - ref) / std::abs(ref));
    }
    return worst;
}

void classical_checks(const OscillatorNetwork& net, const VerifyOptions& options,
                      std::vector<OracleReport>& reports) {
    sampling::Rng rng(options.seed);
    const std::size_t n = net.size();
    const auto modes = decompose(net);

    Matrix m_r = modes.m_r.matrix();
    if (options.corrupt_mr) m_r(0, 0) += 1e-3;
    const Matrix z = assemble_z(modes.m_s, m_r, modes.m_t);
    reports.push_back(OracleReport::make("symplectic_condition", symplectic_residual(z), 1e-10));

    const Matrix k = hamiltonian_form(net);
    const Matrix normal = modes.z_inv.transpose() * k * modes.z_inv;
    Matrix expected = Matrix::Zero(2 * static_cast<Eigen::Index>(n), 2 * static_cast<Eigen::Index>(n));
    expected.diagonal() << 0.5 * modes.omegas, 0.5 * modes.omegas;
    reports.push_back(OracleReport::make("normal_form_diagonal",
                                         inf_norm(normal - expected) / inf_norm(k), 1e-10));

    reports.push_back(OracleReport::make(
        "spectrum_vs_dynamics_map", max_relative(modes.omegas, oracle::dynamics_spectrum(net)), 1e-9));

    {
        const auto x0 = sampling::random_phase_state(rng, n);
        const auto exact = evolve(modes, x0, 10.0);
        const auto ref = oracle::rk4_hamilton(net, x0, 10.0, 1e-3);
        reports.push_back(OracleReport::make(
            "evolve_vs_rk4", (exact.stacked() - ref.stacked()).cwiseAbs().maxCoeff(), 1e-6,
            "t=10 dt=1e-3"));
    }
    {
        const auto x0 = sampling::random_phase_state(rng, n);
        const auto times = sample_times(100.0, 0.25);
        const auto states = kernels::omp::classical_samples(modes, x0, times);
        const Vector e = kernels::omp::energies(net, states);
        const double e0 = energy(net, x0);
        reports.push_back(OracleReport::make(
            "energy_drift", (e.array() - e0).abs().maxCoeff() / std::abs(e0), 1e-9, "t<=100"));
    }
    {
        const auto seq = givens_decompose(modes.m_r);
        reports.push_back(OracleReport::make(
            "givens_round_trip", inf_norm(givens_reconstruct(seq).matrix() - modes.m_r.matrix()),
            1e-12, std::to_string(seq.rotations.size()) + " rotations"));
    }
    if (n == 2) {
        const double w1 = net.diag_freq(0);
        const double w2 = net.diag_freq(1);
        const double g = net.couplings(0);
        const double plus = two_osc_cap_omega(w1, w2, g, true);
        const double minus = two_osc_cap_omega(w1, w2, g, false);
        const double err = std::max(std::abs(modes.omegas(0) - plus) / plus,
                                    std::abs(modes.omegas(1) - minus) / minus);
        reports.push_back(OracleReport::make("two_osc_closed_form", err, 1e-10));
    }
    {
        double spec_err = 0.0;
        double symp_err = 0.0;
        constexpr int kNets = 20;
        for (int r = 0; r < kNets; ++r) {
            const auto rnet = sampling::random_stable_network(rng, std::max<std::size_t>(n, 2));
            const auto rmodes = decompose(rnet);
            spec_err = std::max(spec_err, max_relative(rmodes.omegas, oracle::dynamics_spectrum(rnet)));
            symp_err = std::max(symp_err, symplectic_residual(rmodes.z));
        }
        const std::string detail = std::to_string(kNets) + " nets, seed " + std::to_string(options.seed);
        reports.push_back(OracleReport::make("random_nets_spectrum", spec_err, 1e-9, detail));
        reports.push_back(OracleReport::make("random_nets_symplectic", symp_err, 1e-10, detail));
    }
}

void quantum_checks(const QuantumNetwork& qnet, const VerifyOptions& options,
                    std::vector<OracleReport>& reports) {
    sampling::Rng rng(options.seed);
    const std::size_t n = qnet.size();
    const auto modes = quantum_normal_modes(qnet);
    const SymMatrix h = qnet.coupling_matrix();

    Matrix m_r = modes.m_r.matrix();
    if (options.corrupt_mr) m_r(0, 0) += 1e-3;
    reports.push_back(OracleReport::make("mr_orthogonality", orthogonality_residual(m_r), 1e-12));

    const Matrix conj = m_r * h.matrix() * m_r.transpose();
    reports.push_back(OracleReport::make(
        "normal_form_diagonal",
        inf_norm(conj - Matrix(modes.lambdas.asDiagonal())) / inf_norm(h.matrix()), 1e-12));

    double amp_err = 0.0;
    double norm_err = 0.0;
    for (std::size_t site = 0; site < n; ++site) {
        const auto c0 = SingleExcitationState::site(n, site);
        for (double t : {0.5, 10.0, 100.0}) {
            const ComplexVector c = evolve_amplitudes(modes, c0.amps(), t);
            const ComplexVector ref = oracle::matexp_series(h, t, c0.amps());
            amp_err = std::max(amp_err, (c - ref).cwiseAbs().maxCoeff());
            norm_err = std::max(norm_err, std::abs(c.norm() - 1.0));
        }
    }
    for (int r = 0; r < 20; ++r) {
        const auto c0 = sampling::random_single_excitation(rng, n);
        const double t = std::uniform_real_distribution<double>(0.0, 100.0)(rng);
        const ComplexVector c = evolve_amplitudes(modes, c0.amps(), t);
        amp_err = std::max(amp_err, (c - oracle::matexp_series(h, t, c0.amps())).cwiseAbs().maxCoeff());
        norm_err = std::max(norm_err, std::abs(c.norm() - 1.0));
    }
    reports.push_back(OracleReport::make("evolve_vs_matexp", amp_err, 1e-9, "t<=100"));
    reports.push_back(OracleReport::make("norm_conservation", norm_err, 1e-12));

    const auto seq = givens_decompose(modes.m_r);
    reports.push_back(OracleReport::make(
        "givens_round_trip", inf_norm(givens_reconstruct(seq).matrix() - modes.m_r.matrix()), 1e-12,
        std::to_string(seq.rotations.size()) + " rotations"));
}

}  // namespace

std::vector<oracle::OracleReport> verify_checks(const NetworkConfig& config,
                                                const VerifyOptions& options) {
    std::vector<oracle::OracleReport> reports;
    if (config.kind == NetworkKind::Classical) {
        classical_checks(config.classical(), options, reports);
    } else {
        quantum_checks(config.quantum(), options, reports);
    }
    return reports;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SYMPLECTA_SEED"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end == nullptr || *end != '\0') input_error("SYMPLECTA_SEED must be an unsigned integer");
        return v;
    }
    return sampling::kDefaultSeed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal modes of star-coupled harmonic oscillators", "symplecta"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string initial_path;
    double t_max = 10.0;
    double dt = 0.01;
    std::string stage = "original";
    std::string plane = "q1,q2";
    double section_energy = 1.0;
    std::size_t samples = 256;
    std::size_t initial_site = 1;
    std::optional<std::uint64_t> seed;
    bool corrupt_mr = false;
    SpringMassPair pair;

    auto* normal_modes = app.add_subcommand("normal-modes", "Normal-mode frequencies and maps");
    normal_modes->add_option("--config", config_path, "Network config (JSON)")->required();
    normal_modes->add_option("--out", out_path, "Output path (default stdout)");

    auto* evolve_cmd = app.add_subcommand("evolve", "Exact classical trajectory as CSV");
    evolve_cmd->add_option("--config", config_path, "Classical network config (JSON)")->required();
    evolve_cmd->add_option("--initial", initial_path, "Initial state JSON {\"q\":[..],\"p\":[..]}")
        ->required();
    evolve_cmd->add_option("--t-max", t_max, "Final time");
    evolve_cmd->add_option("--dt", dt, "Sample spacing");
    evolve_cmd->add_option("--out", out_path, "Output path (default stdout)");

    auto* sections = app.add_subcommand("sections", "Energy-level section in a coordinate plane");
    sections->add_option("--config", config_path, "Classical network config (JSON)")->required();
    sections->add_option("--stage", stage, "original | after-s | after-r | after-t");
    sections->add_option("--plane", plane, "Axis pair, e.g. q1,q2 or q1,p1");
    sections->add_option("--energy", section_energy, "Energy level E");
    sections->add_option("--samples", samples, "Number of points");
    sections->add_option("--out", out_path, "Output path (default stdout)");

    auto* quantum_cmd = app.add_subcommand("quantum-evolve", "Single-excitation amplitudes as CSV");
    quantum_cmd->add_option("--config", config_path, "Quantum network config (JSON)")->required();
    quantum_cmd->add_option("--initial-site", initial_site, "Initially excited mode (1-based)");
    quantum_cmd->add_option("--t-max", t_max, "Final time");
    quantum_cmd->add_option("--dt", dt, "Sample spacing");
    quantum_cmd->add_option("--out", out_path, "Output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "Run oracle checks against a config");
    verify->add_option("--config", config_path, "Network config (JSON)")->required();
    verify->add_option("--seed", seed, "Seed for randomized checks (overrides SYMPLECTA_SEED)");
    verify->add_flag("--corrupt-mr", corrupt_mr, "Negative control: perturb M_R")
        ->group("");

    auto* spring = app.add_subcommand("from-spring-mass", "Two-oscillator config from masses and springs");
    spring->add_option("--m1", pair.m1, "Mass 1")->required();
    spring->add_option("--k1", pair.k1, "Spring constant 1")->required();
    spring->add_option("--m2", pair.m2, "Mass 2")->required();
    spring->add_option("--k2", pair.k2, "Spring constant 2")->required();
    spring->add_option("--k", pair.k, "Coupling spring constant")->required();
    spring->add_option("--out", out_path, "Output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (normal_modes->parsed()) {
            write_output(out_path, normal_modes_document(load_config(config_path)), out);
        } else if (evolve_cmd->parsed()) {
            const auto net = load_config(config_path).classical();
            const auto x0 = parse_initial_state(read_file(initial_path));
            write_output(out_path, evolve_csv(net, x0, t_max, dt), out);
        } else if (sections->parsed()) {
            const auto net = load_config(config_path).classical();
            write_output(out_path, sections_csv(net, stage, plane, section_energy, samples), out);
        } else if (quantum_cmd->parsed()) {
            const auto qnet = load_config(config_path).quantum();
            write_output(out_path, quantum_evolve_csv(qnet, initial_site, t_max, dt), out);
        } else if (verify->parsed()) {
            const auto config = load_config(config_path);
            const auto reports = verify_checks(config, {resolve_seed(seed), corrupt_mr});
            bool ok = true;
            for (const auto& r : reports) {
                out << r.line() << "\n";
                ok = ok && r.passed;
            }
            out << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
            return ok ? kExitOk : kExitVerifyFailed;
        } else if (spring->parsed()) {
            const auto params = from_spring_mass(pair);
            NetworkConfig config;
            config.kind = NetworkKind::Classical;
            config.n = 2;
            config.diag = Vector(2);
            config.diag << params.omega1, params.omega2;
            config.couple = Vector(1);
            config.couple << params.g;
            write_output(out_path, config_to_json(config), out);
        }
    } catch (const UnstableModeError& e) {
        err << "error: " << e.what() << "\n";
        err << "unstable modes:";
        for (auto m : e.modes()) err << ' ' << m + 1;
        err << "\n";
        return kExitUnstable;
    } catch (const Error& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return e.kind() == ErrorKind::IndefiniteSection ? kExitGeometry : kExitInput;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace symplecta::cli
