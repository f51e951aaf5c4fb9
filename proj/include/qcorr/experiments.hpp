#pragma once

// Parameter sweeps over the damping scenarios and the audits built on them.
//
// Discord conventions used by the audits: for a pair (A, X) the "one-way"
// discord D_AX puts the projectors on X, the partner of A, and conditions A.
// With that convention E_AB + E_AE = D_AB + D_AE holds for any pure state of
// A, B, E.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Invalid sweep or audit settings.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Scenario { PhaseBoth, PhaseOne, AmpOne, AmpBoth, WernerPhase, WernerAmp };

/// Subsystem pairs. Single-damping scenarios use one environment E attached to
/// A; double-damping scenarios have E_A and E_B.
enum class Bipartition { AB, AE, BE, AE_A, AE_B, BE_A, BE_B, E_AE_B };

struct SweepConfig {
    Scenario scenario = Scenario::PhaseBoth;
    FamilyKind family = FamilyKind::Phi;
    std::vector<double> c_in{0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
    std::vector<double> eta{0.5, 0.95};
    BellKind bell = BellKind::PsiMinus;
    std::vector<double> strength;  // empty means 0:0.02:1
    /// Second-qubit strengths for double damping; absent means equal to strength.
    std::optional<std::vector<double>> strength_b;
    std::vector<Bipartition> bipartitions{Bipartition::AB};
    DiscordOptions discord{};
    bool parallel = true;
};

struct SweepRow {
    Scenario scenario;
    std::string family;
    double c_in_or_eta;
    double strength_a;
    double strength_b;
    CorrelationReport report;
};

struct RowDiagnostic {
    double c_in_or_eta;
    double strength_a;
    double strength_b;
    std::string bipartition;
    std::string message;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<RowDiagnostic> diagnostics;
};

/// Throws ConfigError when grids are unsorted or outside [0, 1], or when a
/// bipartition does not exist in the scenario.
void validate(const SweepConfig& config);
SweepResult run_sweep(const SweepConfig& config);

/// A (c_in, strength) lattice with damping on qubit A only.
struct LatticeSpec {
    FamilyKind family = FamilyKind::Phi;
    ChannelKind channel = ChannelKind::Phase;
    std::vector<double> c_in;
    std::vector<double> strength;
    DiscordOptions discord{};
    bool parallel = true;
};

/// Default 11 x 11 lattice {0, 0.1, ..., 1}^2.
LatticeSpec default_lattice(FamilyKind family, ChannelKind channel);

struct ConservationPoint {
    double c_in;
    double strength;
    double eof_ab;
    double eof_ae;
    double discord_ab;  // projectors on B
    double discord_ae;  // projectors on E
    double violation;   // |E_AB + E_AE - D_AB - D_AE|
    double discord_ab_on_a;
    double discord_ae_on_a;
    double violation_on_a;  // same sum with projectors on A, for reference only
};

struct ConservationAudit {
    std::vector<ConservationPoint> points;
    double max_violation = 0.0;
    double max_violation_on_a = 0.0;
};

inline constexpr double kConservationTolerance = 1e-4;
inline constexpr double kStrictTolerance = 1e-6;

ConservationAudit conservation_audit(const LatticeSpec& lattice);

struct DominanceCheck {
    double c_in;
    double strength;
    std::string relation;
    double lhs;
    double rhs;
    bool holds;
};

/// Phase damping: E_AB = D_AB + D_AE, D_AB <= E_AB, C_AE = 0.
/// Amplitude damping: E_AE <= D_AE (equality at gamma in {0, 1}), E_AB >= D_AB.
std::vector<DominanceCheck> dominance_audit(const LatticeSpec& lattice);

struct WernerSpec {
    std::vector<double> eta{0.5, 0.95};
    ChannelKind channel = ChannelKind::Phase;
    BellKind bell = BellKind::PsiMinus;
    std::vector<double> strength;  // empty means 0:0.02:1
    DiscordOptions discord{};
    bool parallel = true;
};

struct WernerRow {
    double eta;
    double strength;
    double eof;
    double discord;                   // projectors on B
    std::optional<double> eof_ratio;  // absent when the initial EoF is zero
    double discord_ratio;
};

/// Werner state with both qubits damped at the same strength; values rescaled
/// by the undamped ones.
std::vector<WernerRow> werner_rescaled_sweep(const WernerSpec& spec);

struct GeometricRow {
    double c_in;
    double strength;
    std::string bipartition;  // AB or AE
    double negativity;
    double negativity_sq;
    double geometric_discord;  // projectors on the second qubit of the pair
    bool inequality_holds;     // N^2 <= G_D + 1e-9
    bool saturated;            // |N^2 - G_D| <= 1e-6
};

/// Negativity squared against geometric discord for phase damping on A.
std::vector<GeometricRow> inequality_audit_geometric(const LatticeSpec& lattice);

std::vector<double> default_strength_grid();

std::string to_string(Scenario scenario);
std::string to_string(Bipartition bipartition);

}  // namespace qcorr
