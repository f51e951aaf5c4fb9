#include "qcorr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcorr {

namespace {

// Runs body(i) for i in [0, count). Each index writes only its own slot, so the
// collected output does not depend on scheduling. The exception from the
// lowest failing index is rethrown after the loop.
void for_each_index(std::size_t count, bool parallel, const std::function<void(std::size_t)>& body) {
    const auto n = static_cast<long long>(count);
    std::vector<std::exception_ptr> errors(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    (void)parallel;
    for (const auto& error : errors)
        if (error) std::rethrow_exception(error);
}

void require_unit_grid(const std::vector<double>& grid, const std::string& name) {
    if (grid.empty()) throw ConfigError(name + " grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
            throw ConfigError(name + " grid value " + std::to_string(grid[i]) + " outside [0, 1]");
        }
        if (i > 0 && grid[i] <= grid[i - 1]) {
            throw ConfigError(name + " grid must be strictly ascending");
        }
    }
}

bool is_single_damping(Scenario s) { return s == Scenario::PhaseOne || s == Scenario::AmpOne; }
bool is_double_damping(Scenario s) { return s == Scenario::PhaseBoth || s == Scenario::AmpBoth; }
bool is_werner(Scenario s) { return s == Scenario::WernerPhase || s == Scenario::WernerAmp; }

ChannelKind channel_of(Scenario s) {
    switch (s) {
        case Scenario::PhaseBoth:
        case Scenario::PhaseOne:
        case Scenario::WernerPhase: return ChannelKind::Phase;
        case Scenario::AmpBoth:
        case Scenario::AmpOne:
        case Scenario::WernerAmp: return ChannelKind::Amplitude;
    }
    return ChannelKind::Identity;
}

bool bipartition_allowed(Scenario s, Bipartition b) {
    if (b == Bipartition::AB) return true;
    if (is_single_damping(s)) return b == Bipartition::AE || b == Bipartition::BE;
    if (is_double_damping(s)) {
        return b != Bipartition::AE && b != Bipartition::BE;
    }
    return false;
}

std::pair<std::string, std::string> labels_of(Bipartition b) {
    switch (b) {
        case Bipartition::AB: return {"A", "B"};
        case Bipartition::AE: return {"A", "E"};
        case Bipartition::BE: return {"B", "E"};
        case Bipartition::AE_A: return {"A", "E_A"};
        case Bipartition::AE_B: return {"A", "E_B"};
        case Bipartition::BE_A: return {"B", "E_A"};
        case Bipartition::BE_B: return {"B", "E_B"};
        case Bipartition::E_AE_B: return {"E_A", "E_B"};
    }
    return {"A", "B"};
}

DensityMatrix pair_state(const DensityMatrix& joint, Bipartition b) {
    const auto [first, second] = labels_of(b);
    return joint.reduce({joint.index_of(first), joint.index_of(second)});
}

// Pure state of A, B, E with qubit A damped; pairs AB and AE.
struct SingleDampedPair {
    DensityMatrix ab;
    DensityMatrix ae;
};

SingleDampedPair single_damped(FamilyKind family, double c_in, ChannelKind channel, double strength) {
    const auto joint = to_density(
        purify_single(make_pure(StateFamily(family, c_in)), make_channel(channel, strength), Party::A),
        {"A", "B", "E"});
    return {joint.reduce({0, 1}), joint.reduce({0, 2})};
}

void validate_lattice(const LatticeSpec& lattice) {
    require_unit_grid(lattice.c_in, "c_in");
    require_unit_grid(lattice.strength, "strength");
    if (lattice.channel == ChannelKind::Identity) {
        throw ConfigError("audits need a phase or amplitude channel");
    }
}

struct LatticePoint {
    double c_in;
    double strength;
};

std::vector<LatticePoint> lattice_points(const LatticeSpec& lattice) {
    std::vector<LatticePoint> points;
    for (double c : lattice.c_in)
        for (double s : lattice.strength) points.push_back({c, s});
    return points;
}

}  // namespace

std::vector<double> default_strength_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 50; ++i) grid.push_back(i / 50.0);
    return grid;
}

LatticeSpec default_lattice(FamilyKind family, ChannelKind channel) {
    LatticeSpec spec;
    spec.family = family;
    spec.channel = channel;
    for (int i = 0; i <= 10; ++i) {
        spec.c_in.push_back(i / 10.0);
        spec.strength.push_back(i / 10.0);
    }
    return spec;
}

void validate(const SweepConfig& config) {
    if (!config.strength.empty()) require_unit_grid(config.strength, "strength");
    if (config.strength_b) {
        if (!is_double_damping(config.scenario) && !is_werner(config.scenario)) {
            throw ConfigError("a second strength grid needs a scenario that damps both qubits");
        }
        require_unit_grid(*config.strength_b, "strength_b");
    }
    if (is_werner(config.scenario)) {
        if (config.eta.empty()) throw ConfigError("eta list is empty");
        for (double eta : config.eta)
            if (!(eta > 0.0 && eta <= 1.0)) {
                throw ConfigError("eta " + std::to_string(eta) + " outside (0, 1]");
            }
    } else {
        require_unit_grid(config.c_in, "c_in");
    }
    if (config.bipartitions.empty()) throw ConfigError("no bipartitions requested");
    for (auto b : config.bipartitions)
        if (!bipartition_allowed(config.scenario, b)) {
            throw ConfigError("bipartition " + to_string(b) + " does not exist in scenario " +
                              to_string(config.scenario));
        }
}

SweepResult run_sweep(const SweepConfig& config) {
    validate(config);
    const auto strengths = config.strength.empty() ? default_strength_grid() : config.strength;
    auto bipartitions = config.bipartitions;
    std::sort(bipartitions.begin(), bipartitions.end());
    bipartitions.erase(std::unique(bipartitions.begin(), bipartitions.end()), bipartitions.end());

    const bool werner = is_werner(config.scenario);
    const auto& params = werner ? config.eta : config.c_in;
    const std::string family_label =
        werner ? "WERNER_" + to_string(config.bell) : to_string(config.family);
    const ChannelKind channel = channel_of(config.scenario);
    const bool needs_environment =
        std::any_of(bipartitions.begin(), bipartitions.end(),
                    [](Bipartition b) { return b != Bipartition::AB; });

    struct Item {
        double param;
        double strength_a;
        double strength_b;
    };
    std::vector<Item> items;
    for (double p : params)
        for (double sa : strengths) {
            if (config.strength_b) {
                for (double sb : *config.strength_b) items.push_back({p, sa, sb});
            } else if (is_single_damping(config.scenario)) {
                items.push_back({p, sa, 0.0});
            } else {
                items.push_back({p, sa, sa});
            }
        }

    std::vector<std::vector<SweepRow>> rows(items.size());
    std::vector<std::vector<RowDiagnostic>> diagnostics(items.size());
    for_each_index(items.size(), config.parallel, [&](std::size_t k) {
        const Item& item = items[k];
        auto diagnose = [&](const std::string& bipartition, const std::string& message) {
            diagnostics[k].push_back(
                {item.param, item.strength_a, item.strength_b, bipartition, message});
        };

        std::optional<DensityMatrix> joint;
        try {
            const auto ch_a = make_channel(channel, item.strength_a);
            const auto ch_b = is_single_damping(config.scenario)
                                  ? QubitChannel::identity()
                                  : make_channel(channel, item.strength_b);
            if (werner) {
                joint = apply_two_qubit(make_werner(item.param, bell_state(config.bell)), ch_a, ch_b);
            } else {
                const auto psi = make_pure(StateFamily(config.family, item.param));
                if (is_single_damping(config.scenario)) {
                    joint = to_density(purify_single(psi, ch_a, Party::A), {"A", "B", "E"});
                } else if (needs_environment) {
                    joint = to_density(purify_double(psi, ch_a, ch_b), {"A", "B", "E_A", "E_B"});
                } else {
                    joint = apply_two_qubit(to_density(psi, {"A", "B"}), ch_a, ch_b);
                }
            }
        } catch (const std::exception& e) {
            for (auto b : bipartitions) diagnose(to_string(b), e.what());
            return;
        }

        for (auto b : bipartitions) {
            try {
                const auto pair = joint->n_qubits() == 2 ? *joint : pair_state(*joint, b);
                rows[k].push_back({config.scenario, family_label, item.param, item.strength_a,
                                   item.strength_b,
                                   correlation_report(pair, to_string(b), config.discord)});
            } catch (const std::exception& e) {
                diagnose(to_string(b), e.what());
            }
        }
    });

    SweepResult result;
    for (std::size_t k = 0; k < items.size(); ++k) {
        std::move(rows[k].begin(), rows[k].end(), std::back_inserter(result.rows));
        std::move(diagnostics[k].begin(), diagnostics[k].end(),
                  std::back_inserter(result.diagnostics));
    }
    return result;
}

ConservationAudit conservation_audit(const LatticeSpec& lattice) {
    validate_lattice(lattice);
    const auto grid = lattice_points(lattice);
    ConservationAudit audit;
    audit.points.resize(grid.size());
    for_each_index(grid.size(), lattice.parallel, [&](std::size_t k) {
        const auto [c_in, strength] = grid[k];
        const auto pair = single_damped(lattice.family, c_in, lattice.channel, strength);
        ConservationPoint p{};
        p.c_in = c_in;
        p.strength = strength;
        p.eof_ab = eof(pair.ab);
        p.eof_ae = eof(pair.ae);
        p.discord_ab = discord(pair.ab, MeasuredSide::B, lattice.discord);
        p.discord_ae = discord(pair.ae, MeasuredSide::B, lattice.discord);
        p.violation = std::abs(p.eof_ab + p.eof_ae - p.discord_ab - p.discord_ae);
        p.discord_ab_on_a = discord(pair.ab, MeasuredSide::A, lattice.discord);
        p.discord_ae_on_a = discord(pair.ae, MeasuredSide::A, lattice.discord);
        p.violation_on_a = std::abs(p.eof_ab + p.eof_ae - p.discord_ab_on_a - p.discord_ae_on_a);
        audit.points[k] = p;
    });
    for (const auto& p : audit.points) {
        audit.max_violation = std::max(audit.max_violation, p.violation);
        audit.max_violation_on_a = std::max(audit.max_violation_on_a, p.violation_on_a);
    }
    return audit;
}

std::vector<DominanceCheck> dominance_audit(const LatticeSpec& lattice) {
    validate_lattice(lattice);
    const auto grid = lattice_points(lattice);
    std::vector<std::vector<DominanceCheck>> per_point(grid.size());
    for_each_index(grid.size(), lattice.parallel, [&](std::size_t k) {
        const auto [c_in, strength] = grid[k];
        const auto pair = single_damped(lattice.family, c_in, lattice.channel, strength);
        const double e_ab = eof(pair.ab);
        const double d_ab = discord(pair.ab, MeasuredSide::B, lattice.discord);
        const double d_ae = discord(pair.ae, MeasuredSide::B, lattice.discord);
        auto& out = per_point[k];
        auto add = [&](std::string relation, double lhs, double rhs, bool holds) {
            out.push_back({c_in, strength, std::move(relation), lhs, rhs, holds});
        };
        if (lattice.channel == ChannelKind::Phase) {
            const double c_ae = concurrence(pair.ae);
            add("E_AB = D_AB + D_AE", e_ab, d_ab + d_ae,
                std::abs(e_ab - d_ab - d_ae) <= kConservationTolerance);
            add("D_AB <= E_AB", d_ab, e_ab, d_ab <= e_ab + kStrictTolerance);
            add("C_AE = 0", c_ae, 0.0, c_ae <= 1e-10);
        } else {
            const double e_ae = eof(pair.ae);
            add("E_AE <= D_AE", e_ae, d_ae, e_ae <= d_ae + kStrictTolerance);
            if (strength == 0.0 || strength == 1.0) {
                add("E_AE = D_AE", e_ae, d_ae, std::abs(e_ae - d_ae) <= kConservationTolerance);
            }
            add("E_AB >= D_AB", e_ab, d_ab, e_ab >= d_ab - kStrictTolerance);
        }
    });
    std::vector<DominanceCheck> checks;
    for (auto& v : per_point) std::move(v.begin(), v.end(), std::back_inserter(checks));
    return checks;
}

std::vector<WernerRow> werner_rescaled_sweep(const WernerSpec& spec) {
    if (spec.eta.empty()) throw ConfigError("eta list is empty");
    for (double eta : spec.eta)
        if (!(eta > 0.0 && eta <= 1.0)) {
            throw ConfigError("eta " + std::to_string(eta) + " outside (0, 1]");
        }
    if (spec.channel == ChannelKind::Identity) throw ConfigError("werner sweep needs a channel");
    const auto strengths = spec.strength.empty() ? default_strength_grid() : spec.strength;
    require_unit_grid(strengths, "strength");

    const auto bell = bell_state(spec.bell);
    struct Initial {
        double eof;
        double discord;
    };
    std::vector<Initial> initial(spec.eta.size());
    for_each_index(spec.eta.size(), spec.parallel, [&](std::size_t k) {
        const auto rho = make_werner(spec.eta[k], bell);
        initial[k] = {eof(rho), discord(rho, MeasuredSide::B, spec.discord)};
    });

    std::vector<WernerRow> rows(spec.eta.size() * strengths.size());
    for_each_index(rows.size(), spec.parallel, [&](std::size_t k) {
        const std::size_t e = k / strengths.size();
        const double eta = spec.eta[e];
        const double s = strengths[k % strengths.size()];
        const auto ch = make_channel(spec.channel, s);
        const auto rho = apply_two_qubit(make_werner(eta, bell), ch, ch);
        WernerRow row{eta, s, eof(rho), discord(rho, MeasuredSide::B, spec.discord), std::nullopt, 0.0};
        if (initial[e].eof > 1e-12) row.eof_ratio = row.eof / initial[e].eof;
        row.discord_ratio = initial[e].discord > 0.0 ? row.discord / initial[e].discord : 0.0;
        rows[k] = row;
    });
    return rows;
}

std::vector<GeometricRow> inequality_audit_geometric(const LatticeSpec& lattice) {
    if (lattice.channel != ChannelKind::Phase) {
        throw ConfigError("the geometric audit runs on phase damping");
    }
    validate_lattice(lattice);
    const auto grid = lattice_points(lattice);
    std::vector<GeometricRow> rows(2 * grid.size());
    for_each_index(grid.size(), lattice.parallel, [&](std::size_t k) {
        const auto [c_in, strength] = grid[k];
        const auto pair = single_damped(lattice.family, c_in, lattice.channel, strength);
        auto row = [&](const DensityMatrix& rho, const char* label) {
            const double n = negativity(rho);
            const double g = geometric_discord(rho, MeasuredSide::B);
            return GeometricRow{c_in, strength, label, n, n * n, g, n * n <= g + 1e-9,
                                std::abs(n * n - g) <= kStrictTolerance};
        };
        rows[2 * k] = row(pair.ab, "AB");
        rows[2 * k + 1] = row(pair.ae, "AE");
    });
    return rows;
}

std::string to_string(Scenario scenario) {
    switch (scenario) {
        case Scenario::PhaseBoth: return "PHASE_BOTH";
        case Scenario::PhaseOne: return "PHASE_ONE";
        case Scenario::AmpOne: return "AMP_ONE";
        case Scenario::AmpBoth: return "AMP_BOTH";
        case Scenario::WernerPhase: return "WERNER_PHASE";
        case Scenario::WernerAmp: return "WERNER_AMP";
    }
    return "?";
}

std::string to_string(Bipartition bipartition) {
    switch (bipartition) {
        case Bipartition::AB: return "AB";
        case Bipartition::AE: return "AE";
        case Bipartition::BE: return "BE";
        case Bipartition::AE_A: return "AE_A";
        case Bipartition::AE_B: return "AE_B";
        case Bipartition::BE_A: return "BE_A";
        case Bipartition::BE_B: return "BE_B";
        case Bipartition::E_AE_B: return "E_AE_B";
    }
    return "?";
}

}  // namespace qcorr
