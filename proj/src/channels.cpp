#include "qcorr/channels.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

namespace {

void require_strength(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw NumericError(std::string(name) + ": strength " + std::to_string(value) +
                           " outside [0, 1]");
    }
}

}  // namespace

QubitChannel QubitChannel::identity() {
    return {ChannelKind::Identity, 0.0, {ComplexMatrix::identity(2), ComplexMatrix(2)}};
}

double QubitChannel::completeness_defect() const {
    ComplexMatrix sum(2);
    for (const auto& k : kraus) sum += k.adjoint() * k;
    return sum.max_abs_diff(ComplexMatrix::identity(2));
}

QubitChannel phase_damping(double lambda) {
    require_strength(lambda, "phase_damping");
    return {ChannelKind::Phase,
            lambda,
            {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - lambda)}},
             ComplexMatrix{{0.0, 0.0}, {0.0, std::sqrt(lambda)}}}};
}

QubitChannel amplitude_damping(double gamma) {
    require_strength(gamma, "amplitude_damping");
    return {ChannelKind::Amplitude,
            gamma,
            {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}},
             ComplexMatrix{{0.0, std::sqrt(gamma)}, {0.0, 0.0}}}};
}

QubitChannel make_channel(ChannelKind kind, double strength) {
    switch (kind) {
        case ChannelKind::Identity: return QubitChannel::identity();
        case ChannelKind::Phase: return phase_damping(strength);
        case ChannelKind::Amplitude: return amplitude_damping(strength);
    }
    throw NumericError("make_channel: unknown kind");
}

DensityMatrix apply_two_qubit(const DensityMatrix& rho, const QubitChannel& on_a,
                              const QubitChannel& on_b) {
    if (rho.n_qubits() != 2) {
        throw NumericError("apply_two_qubit: expected a two-qubit state, got " +
                           std::to_string(rho.n_qubits()) + " qubits");
    }
    ComplexMatrix out(4);
    for (const auto& ka : on_a.kraus)
        for (const auto& kb : on_b.kraus) {
            const ComplexMatrix k = kron(ka, kb);
            out += k * rho.matrix() * k.adjoint();
        }
    return DensityMatrix(2, std::move(out), rho.labels());
}

double DilationIsometry::isometry_defect() const {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Complex sum = 0.0;
            for (int r = 0; r < 4; ++r) sum += std::conj(v[r][i]) * v[r][j];
            worst = std::max(worst, std::abs(sum - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

DilationIsometry dilate(const QubitChannel& channel) {
    DilationIsometry iso;
    for (int env = 0; env < 2; ++env)
        for (int out = 0; out < 2; ++out)
            for (int in = 0; in < 2; ++in) iso.v[2 * out + env][in] = channel.kraus[env](out, in);
    return iso;
}

PureState apply_dilation(const PureState& psi, int qubit, const DilationIsometry& isometry) {
    const int n = psi.n_qubits();
    if (qubit < 0 || qubit >= n) throw NumericError("apply_dilation: qubit out of range");
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
    std::vector<Complex> out(2 * dim);
    for (std::size_t index = 0; index < dim; ++index) {
        const Complex amp = psi[index];
        if (amp == Complex{}) continue;
        const int in = (index & mask) ? 1 : 0;
        for (int sys = 0; sys < 2; ++sys) {
            const std::size_t target = sys ? (index | mask) : (index & ~mask);
            for (int env = 0; env < 2; ++env)
                out[2 * target + env] += isometry.v[2 * sys + env][in] * amp;
        }
    }
    return PureState(n + 1, std::move(out));
}

PureState purify_single(const PureState& psi, const QubitChannel& channel, Party target) {
    if (psi.n_qubits() != 2) throw NumericError("purify_single: expected a two-qubit state");
    return apply_dilation(psi, target == Party::A ? 0 : 1, dilate(channel));
}

PureState purify_double(const PureState& psi, const QubitChannel& on_a, const QubitChannel& on_b) {
    if (psi.n_qubits() != 2) throw NumericError("purify_double: expected a two-qubit state");
    return apply_dilation(apply_dilation(psi, 0, dilate(on_a)), 1, dilate(on_b));
}

std::string to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::Identity: return "IDENTITY";
        case ChannelKind::Phase: return "PHASE";
        case ChannelKind::Amplitude: return "AMPLITUDE";
    }
    return "?";
}

}  // namespace qcorr
