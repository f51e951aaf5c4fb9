#pragma once

#include <array>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

enum class ChannelKind { Identity, Phase, Amplitude };

/// Single-qubit channel given by exactly two Kraus operators.
struct QubitChannel {
    ChannelKind kind = ChannelKind::Identity;
    double strength = 0.0;  // lambda (phase) or gamma (amplitude)
    std::array<ComplexMatrix, 2> kraus;

    static QubitChannel identity();

    /// Largest entry of |sum K^dagger K - I|.
    double completeness_defect() const;
};

QubitChannel phase_damping(double lambda);
QubitChannel amplitude_damping(double gamma);
/// phase_damping or amplitude_damping by kind; Identity ignores strength.
QubitChannel make_channel(ChannelKind kind, double strength);

/// sum_ij (K_i (x) K_j) rho (K_i (x) K_j)^dagger on a two-qubit state.
DensityMatrix apply_two_qubit(const DensityMatrix& rho, const QubitChannel& on_a,
                              const QubitChannel& on_b);

/// Isometry V = K0 (x) |0>_E + K1 (x) |1>_E from a qubit into qubit (x) environment.
/// Row index is 2 * system + environment, column index is the input basis state.
struct DilationIsometry {
    std::array<std::array<Complex, 2>, 4> v{};

    /// Largest entry of |V^dagger V - I_2|.
    double isometry_defect() const;
};

DilationIsometry dilate(const QubitChannel& channel);

/// Applies V to one qubit of a pure register and appends the environment qubit
/// as the new last qubit.
PureState apply_dilation(const PureState& psi, int qubit, const DilationIsometry& isometry);

/// Three-qubit purification with qubit order (A, B, E).
PureState purify_single(const PureState& psi, const QubitChannel& channel, Party target);

/// Four-qubit purification with qubit order (A, B, E_A, E_B).
PureState purify_double(const PureState& psi, const QubitChannel& on_a, const QubitChannel& on_b);

std::string to_string(ChannelKind kind);

}  // namespace qcorr
