#pragma once

#include <string>
#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// Normalized amplitude vector over an n-qubit computational basis.
class PureState {
public:
    PureState(int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits() const noexcept { return n_qubits_; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](std::size_t index) const { return amplitudes_[index]; }

private:
    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Hermitian, PSD, unit-trace matrix over named qubit subsystems.
class DensityMatrix {
public:
    /// Validates hermiticity (1e-10), trace (1e-10) and spectrum (>= -1e-8).
    /// Empty labels default to q0, q1, ...
    DensityMatrix(int n_qubits, ComplexMatrix matrix, std::vector<std::string> labels = {});

    int n_qubits() const noexcept { return n_qubits_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Reduced state on the listed qubits, labels carried along.
    DensityMatrix reduce(std::initializer_list<int> keep) const;
    DensityMatrix reduce(std::span<const int> keep) const;
    /// Index of a labelled subsystem; throws if absent.
    int index_of(const std::string& label) const;

private:
    int n_qubits_;
    ComplexMatrix matrix_;
    std::vector<std::string> labels_;
};

/// First (A) or second (B) qubit of a two-qubit pair.
enum class Party { A, B };

enum class FamilyKind { Phi, Psi };

/// Pure two-qubit family a|00> + b|11> (Phi) or a|01> + b|10> (Psi), indexed by
/// its concurrence.
struct StateFamily {
    FamilyKind kind;
    double c_in;

    StateFamily(FamilyKind kind, double c_in);
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

double alpha_from_concurrence(double c_in);

PureState make_pure(const StateFamily& family);
PureState bell_state(BellKind kind);

/// eta |bell><bell| + (1 - eta) I / 4. The bell argument must be maximally
/// entangled.
DensityMatrix make_werner(double eta, const PureState& bell);

DensityMatrix to_density(const PureState& psi, std::vector<std::string> labels = {});

/// 2|a00 a11 - a01 a10| for a two-qubit pure state.
double pure_state_concurrence(const PureState& psi);

std::string to_string(FamilyKind kind);
std::string to_string(BellKind kind);

}  // namespace qcorr
