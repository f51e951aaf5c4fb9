#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qcorr {

namespace {

std::vector<std::string> default_labels(int n_qubits) {
    std::vector<std::string> labels;
    for (int q = 0; q < n_qubits; ++q) labels.push_back("q" + std::to_string(q));
    return labels;
}

}  // namespace

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > 4 || amplitudes_.size() != (std::size_t{1} << n_qubits)) {
        throw NumericError("PureState: " + std::to_string(amplitudes_.size()) +
                           " amplitudes for " + std::to_string(n_qubits) + " qubits");
    }
    double norm = 0.0;
    for (const auto& z : amplitudes_) norm += std::norm(z);
    if (std::abs(norm - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "PureState: squared norm " << norm << " is not 1";
        throw NumericError(msg.str());
    }
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix matrix, std::vector<std::string> labels)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)), labels_(std::move(labels)) {
    if (n_qubits < 1 || n_qubits > 4 || matrix_.dim() != (std::size_t{1} << n_qubits)) {
        throw NumericError("DensityMatrix: dim " + std::to_string(matrix_.dim()) +
                           " does not hold " + std::to_string(n_qubits) + " qubits");
    }
    if (labels_.empty()) labels_ = default_labels(n_qubits);
    if (labels_.size() != static_cast<std::size_t>(n_qubits)) {
        throw NumericError("DensityMatrix: expected " + std::to_string(n_qubits) + " labels");
    }
    std::ostringstream msg;
    if (const double defect = matrix_.hermitian_defect(); defect > 1e-10) {
        msg << "DensityMatrix: not Hermitian (max asymmetry " << defect << ")";
        throw NumericError(msg.str());
    }
    if (const Complex tr = matrix_.trace(); std::abs(tr - 1.0) > 1e-10) {
        msg << "DensityMatrix: trace " << tr.real() << " is not 1";
        throw NumericError(msg.str());
    }
    const auto values = hermitian_eigenvalues(matrix_);
    if (values.back() < -kNegativeClip) {
        msg << "DensityMatrix: negative eigenvalue " << values.back();
        throw NumericError(msg.str());
    }
}

DensityMatrix DensityMatrix::reduce(std::initializer_list<int> keep) const {
    return reduce(std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix DensityMatrix::reduce(std::span<const int> keep) const {
    std::vector<std::string> kept_labels;
    for (int q : keep) {
        if (q < 0 || q >= n_qubits_) throw NumericError("reduce: qubit index out of range");
        kept_labels.push_back(labels_[q]);
    }
    return DensityMatrix(static_cast<int>(keep.size()), partial_trace(matrix_, n_qubits_, keep),
                         std::move(kept_labels));
}

int DensityMatrix::index_of(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw NumericError("DensityMatrix: no subsystem labelled " + label);
    return static_cast<int>(it - labels_.begin());
}

StateFamily::StateFamily(FamilyKind kind_, double c_in_) : kind(kind_), c_in(c_in_) {
    if (!(c_in >= 0.0 && c_in <= 1.0)) {
        throw NumericError("StateFamily: c_in " + std::to_string(c_in) + " outside [0, 1]");
    }
}

double alpha_from_concurrence(double c_in) {
    if (!(c_in >= 0.0 && c_in <= 1.0)) {
        throw NumericError("alpha_from_concurrence: c_in " + std::to_string(c_in) +
                           " outside [0, 1]");
    }
    return std::sqrt((1.0 + std::sqrt(1.0 - c_in * c_in)) / 2.0);
}

PureState make_pure(const StateFamily& family) {
    const double alpha = alpha_from_concurrence(family.c_in);
    const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    std::vector<Complex> amps(4);
    if (family.kind == FamilyKind::Phi) {
        amps[0b00] = alpha;
        amps[0b11] = beta;
    } else {
        amps[0b01] = alpha;
        amps[0b10] = beta;
    }
    return PureState(2, std::move(amps));
}

PureState bell_state(BellKind kind) {
    const double h = std::numbers::sqrt2 / 2.0;
    switch (kind) {
        case BellKind::PhiPlus: return PureState(2, {h, 0.0, 0.0, h});
        case BellKind::PhiMinus: return PureState(2, {h, 0.0, 0.0, -h});
        case BellKind::PsiPlus: return PureState(2, {0.0, h, h, 0.0});
        case BellKind::PsiMinus: return PureState(2, {0.0, h, -h, 0.0});
    }
    throw NumericError("bell_state: unknown kind");
}

double pure_state_concurrence(const PureState& psi) {
    if (psi.n_qubits() != 2) throw NumericError("pure_state_concurrence: needs two qubits");
    return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

DensityMatrix make_werner(double eta, const PureState& bell) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw NumericError("make_werner: eta " + std::to_string(eta) + " outside [0, 1]");
    }
    if (bell.n_qubits() != 2 || std::abs(pure_state_concurrence(bell) - 1.0) > 1e-10) {
        throw NumericError("make_werner: reference state is not maximally entangled");
    }
    ComplexMatrix rho = outer(bell.amplitudes()) * eta;
    for (std::size_t i = 0; i < 4; ++i) rho(i, i) += (1.0 - eta) / 4.0;
    return DensityMatrix(2, std::move(rho), {"A", "B"});
}

DensityMatrix to_density(const PureState& psi, std::vector<std::string> labels) {
    return DensityMatrix(psi.n_qubits(), outer(psi.amplitudes()), std::move(labels));
}

std::string to_string(FamilyKind kind) { return kind == FamilyKind::Phi ? "PHI" : "PSI"; }

std::string to_string(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus: return "PHI_PLUS";
        case BellKind::PhiMinus: return "PHI_MINUS";
        case BellKind::PsiPlus: return "PSI_PLUS";
        case BellKind::PsiMinus: return "PSI_MINUS";
    }
    return "?";
}

}  // namespace qcorr
