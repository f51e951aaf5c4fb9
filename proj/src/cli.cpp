#include "qcorr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "qcorr/config.hpp"
#include "qcorr/csv.hpp"
#include "qcorr/experiments.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcorr {

namespace {

struct Overrides {
    std::string config_path;
    std::string out_path;
    std::optional<std::string> grid;
    std::optional<std::string> c_in;
    std::optional<std::string> eta;
    std::optional<std::string> scenario;
    std::optional<std::string> channel;
    std::optional<std::string> family;
    int threads = 0;
};

void add_common_options(CLI::App& command, Overrides& o) {
    command.add_option("--config", o.config_path, "key=value configuration file");
    command.add_option("--out", o.out_path, "CSV output path (overrides the config's output key)");
    command.add_option("--grid", o.grid, "strength grid, start:step:end or a comma list");
    command.add_option("--cin", o.c_in, "initial concurrence(s), start:step:end or a comma list");
    command.add_option("--eta", o.eta, "Werner mixing parameter(s)");
    command.add_option("--scenario", o.scenario,
                       "PHASE_BOTH, PHASE_ONE, AMP_ONE, AMP_BOTH, WERNER_PHASE or WERNER_AMP");
    command.add_option("--channel", o.channel, "PHASE or AMPLITUDE");
    command.add_option("--family", o.family, "PHI or PSI");
    command.add_option("--threads", o.threads, "OpenMP thread count (0 keeps the default)")
        ->check(CLI::NonNegativeNumber);
}

ConfigValues resolve(const Overrides& o) {
    ConfigValues values = o.config_path.empty() ? ConfigValues{} : load_config(o.config_path);
    auto set = [&](const char* key, const std::optional<std::string>& v) {
        if (v) values[key] = *v;
    };
    set("grid", o.grid);
    set("c_in", o.c_in);
    set("eta", o.eta);
    set("scenario", o.scenario);
    set("channel", o.channel);
    set("family", o.family);
    if (!o.out_path.empty()) values["output"] = o.out_path;
    if (!values.contains("output")) throw ConfigError("no output path (use --out or output=)");
    return values;
}

template <class T, class Parse>
T value_or(const ConfigValues& values, const char* key, T fallback, Parse parse) {
    const auto it = values.find(key);
    return it == values.end() ? fallback : parse(it->second);
}

std::vector<double> grid_or(const ConfigValues& values, const char* key, std::vector<double> fallback) {
    return value_or(values, key, std::move(fallback), parse_grid);
}

std::vector<double> unit_lattice() {
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
    return grid;
}

LatticeSpec lattice_from(const ConfigValues& values, ChannelKind default_channel) {
    LatticeSpec spec;
    spec.family = value_or(values, "family", FamilyKind::Phi, parse_family);
    spec.channel = value_or(values, "channel", default_channel, parse_channel);
    spec.c_in = grid_or(values, "c_in", unit_lattice());
    spec.strength = grid_or(values, "grid", unit_lattice());
    return spec;
}

int run_sweep_command(const ConfigValues& values, std::ostream& out, std::ostream& err) {
    SweepConfig config;
    config.scenario = value_or(values, "scenario", Scenario::PhaseBoth, parse_scenario);
    config.family = value_or(values, "family", FamilyKind::Phi, parse_family);
    config.c_in = grid_or(values, "c_in", config.c_in);
    config.eta = grid_or(values, "eta", config.eta);
    config.bell = value_or(values, "bell", BellKind::PsiMinus, parse_bell);
    config.strength = grid_or(values, "grid", default_strength_grid());
    if (values.contains("grid_b")) config.strength_b = parse_grid(values.at("grid_b"));
    config.bipartitions = value_or(values, "bipartitions", config.bipartitions, parse_bipartitions);
    if (values.contains("channel")) {
        throw ConfigError("sweep takes its channel from the scenario; drop the channel key");
    }

    const auto result = run_sweep(config);
    for (const auto& d : result.diagnostics) {
        err << "row skipped: param=" << format_number(d.c_in_or_eta)
            << " strength_a=" << format_number(d.strength_a)
            << " strength_b=" << format_number(d.strength_b) << " " << d.bipartition << ": "
            << d.message << '\n';
    }
    emit_csv(sweep_table(result.rows), values.at("output"));
    out << "sweep " << to_string(config.scenario) << ": " << result.rows.size() << " rows, "
        << result.diagnostics.size() << " skipped -> " << values.at("output") << '\n';
    return kExitOk;
}

int run_conserve_command(const ConfigValues& values, std::ostream& out) {
    const auto spec = lattice_from(values, ChannelKind::Phase);
    const auto audit = conservation_audit(spec);
    emit_csv(conservation_table(audit), values.at("output"));
    const bool ok = audit.max_violation <= kConservationTolerance;
    out << "conserve " << to_string(spec.channel) << " " << to_string(spec.family) << ": "
        << audit.points.size() << " points, max |E_AB + E_AE - D_AB - D_AE| = "
        << format_number(audit.max_violation) << " (tolerance " << format_number(kConservationTolerance)
        << ") " << (ok ? "PASS" : "FAIL") << "; projectors on A instead: "
        << format_number(audit.max_violation_on_a) << '\n';
    return ok ? kExitOk : kExitAuditFailure;
}

int run_dominance_command(const ConfigValues& values, std::ostream& out) {
    const auto spec = lattice_from(values, ChannelKind::Phase);
    const auto checks = dominance_audit(spec);
    emit_csv(dominance_table(checks), values.at("output"));
    const auto failures = std::count_if(checks.begin(), checks.end(),
                                        [](const DominanceCheck& c) { return !c.holds; });
    out << "dominance " << to_string(spec.channel) << " " << to_string(spec.family) << ": "
        << checks.size() << " checks, " << failures << " failed " << (failures ? "FAIL" : "PASS")
        << '\n';
    return failures ? kExitAuditFailure : kExitOk;
}

int run_werner_command(const ConfigValues& values, std::ostream& out) {
    WernerSpec spec;
    spec.eta = grid_or(values, "eta", spec.eta);
    spec.channel = value_or(values, "channel", ChannelKind::Phase, parse_channel);
    spec.bell = value_or(values, "bell", BellKind::PsiMinus, parse_bell);
    spec.strength = grid_or(values, "grid", default_strength_grid());
    const auto rows = werner_rescaled_sweep(spec);
    emit_csv(werner_table(rows), values.at("output"));
    out << "werner " << to_string(spec.channel) << ": " << rows.size() << " rows -> "
        << values.at("output") << '\n';
    return kExitOk;
}

int run_geometric_command(const ConfigValues& values, std::ostream& out) {
    const auto spec = lattice_from(values, ChannelKind::Phase);
    const auto rows = inequality_audit_geometric(spec);
    emit_csv(geometric_table(rows), values.at("output"));
    std::size_t broken = 0;
    std::size_t unsaturated = 0;
    std::size_t separable_discordant = 0;
    for (const auto& r : rows) {
        if (!r.inequality_holds) ++broken;
        if (r.bipartition == "AB" && !r.saturated) ++unsaturated;
        if (r.bipartition == "AE" && r.negativity <= 1e-10 && r.geometric_discord > 1e-10) {
            ++separable_discordant;
        }
    }
    const bool ok = broken == 0 && unsaturated == 0;
    out << "geometric: " << rows.size() << " rows, N^2 <= G_D violated " << broken
        << ", AB unsaturated " << unsaturated << ", AE rows with N = 0 < G_D "
        << separable_discordant << " " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitAuditFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-qubit correlation dynamics under phase and amplitude damping", "qcorr"};
    app.require_subcommand(1);

    Overrides o;
    const std::array<std::pair<const char*, const char*>, 5> commands{{
        {"sweep", "correlation measures over a damping-strength grid"},
        {"conserve", "E_AB + E_AE = D_AB + D_AE audit with damping on A"},
        {"dominance", "EoF versus discord inequalities with damping on A"},
        {"werner", "rescaled EoF and discord for Werner states"},
        {"geometric", "negativity squared versus geometric discord audit"},
    }};
    for (const auto& [name, description] : commands) {
        add_common_options(*app.add_subcommand(name, description), o);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitBadConfig;
    }

#ifdef _OPENMP
    if (o.threads > 0) omp_set_num_threads(o.threads);
#endif

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const auto values = resolve(o);
        if (command == "sweep") return run_sweep_command(values, out, err);
        if (command == "conserve") return run_conserve_command(values, out);
        if (command == "dominance") return run_dominance_command(values, out);
        if (command == "werner") return run_werner_command(values, out);
        return run_geometric_command(values, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIoFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    }
}

}  // namespace qcorr
