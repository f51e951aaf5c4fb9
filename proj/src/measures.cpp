#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcorr {

namespace {

void require_pair(const DensityMatrix& rho, const char* what) {
    if (rho.n_qubits() != 2) {
        throw NumericError(std::string(what) + ": expected a two-qubit state, got " +
                           std::to_string(rho.n_qubits()) + " qubits");
    }
}

const std::array<ComplexMatrix, 3>& paulis() {
    static const std::array<ComplexMatrix, 3> sigma{
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    return sigma;
}

double expectation(const ComplexMatrix& rho, const ComplexMatrix& op) {
    return (rho * op).trace().real();
}

// Folds (theta, phi) back to theta in [0, pi], phi in [0, 2 pi).
MeasurementBasis canonical_basis(double theta, double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    if (theta > std::numbers::pi) {
        theta = two_pi - theta;
        phi += std::numbers::pi;
    }
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
    return {theta, phi};
}

}  // namespace

std::array<ComplexMatrix, 2> MeasurementBasis::projectors() const {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Complex e = std::polar(1.0, phi);
    const std::array<Complex, 2> m{c, e * s};
    const std::array<Complex, 2> m_perp{-std::conj(e) * s, c};
    return {outer(m), outer(m_perp)};
}

double concurrence(const DensityMatrix& rho) {
    require_pair(rho, "concurrence");
    const auto& sigma_y = paulis()[1];
    const ComplexMatrix flip = kron(sigma_y, sigma_y);
    const ComplexMatrix tilde = flip * rho.matrix().conjugate() * flip;
    const ComplexMatrix root = psd_sqrt(rho.matrix());
    // same spectrum as rho * tilde, but Hermitian
    const auto values = hermitian_eigenvalues(root * tilde * root);
    double c = std::sqrt(std::max(0.0, values[0]));
    for (std::size_t k = 1; k < values.size(); ++k) c -= std::sqrt(std::max(0.0, values[k]));
    return std::clamp(c, 0.0, 1.0);
}

double eof_from_concurrence(double c) {
    c = std::clamp(c, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double eof(const DensityMatrix& rho) { return eof_from_concurrence(concurrence(rho)); }

double mutual_information(const DensityMatrix& rho) {
    require_pair(rho, "mutual_information");
    const double s_a = von_neumann_entropy(partial_trace(rho.matrix(), 2, {0}));
    const double s_b = von_neumann_entropy(partial_trace(rho.matrix(), 2, {1}));
    const double s_ab = von_neumann_entropy(rho.matrix());
    return std::max(0.0, s_a + s_b - s_ab);
}

double conditional_entropy(const DensityMatrix& rho, const MeasurementBasis& basis,
                           MeasuredSide side) {
    require_pair(rho, "conditional_entropy");
    const auto identity = ComplexMatrix::identity(2);
    const int unmeasured = side == MeasuredSide::A ? 1 : 0;
    double h = 0.0;
    for (const auto& projector : basis.projectors()) {
        const ComplexMatrix lift =
            side == MeasuredSide::A ? kron(projector, identity) : kron(identity, projector);
        const ComplexMatrix post = lift * rho.matrix() * lift;
        const double p = post.trace().real();
        if (p < 1e-12) continue;
        h += p * von_neumann_entropy(partial_trace(post, 2, {unmeasured}) * (1.0 / p));
    }
    return h;
}

DiscordResult discord_search(const DensityMatrix& rho, MeasuredSide side,
                             const DiscordOptions& options) {
    require_pair(rho, "discord");
    const auto& m = rho.matrix();
    const auto& grid = options.grid;
    const double s_a = von_neumann_entropy(partial_trace(m, 2, {0}));
    const double s_b = von_neumann_entropy(partial_trace(m, 2, {1}));
    const double s_ab = von_neumann_entropy(m);
    const double s_unmeasured = side == MeasuredSide::A ? s_b : s_a;

    const auto values = options.parallel_scan ? kernels::scan_parallel(m, side, grid)
                                              : kernels::scan_serial(m, side, grid);
    const auto starts = kernels::best_indices(values, static_cast<std::size_t>(options.refine_starts));

    DiscordResult result;
    result.min_conditional_entropy = values[starts.front()];
    double best_theta = grid.theta(static_cast<int>(starts.front() / grid.n_phi));
    double best_phi = grid.phi(static_cast<int>(starts.front() % grid.n_phi));

    const auto objective = [&](double theta, double phi) {
        return kernels::conditional_entropy(m, theta, phi, side);
    };
    const double theta_step = grid.n_theta > 1 ? grid.theta(1) : std::numbers::pi / 4.0;
    const double phi_step = grid.phi(1);
    for (const std::size_t start : starts) {
        const double theta0 = grid.theta(static_cast<int>(start / grid.n_phi));
        const double phi0 = grid.phi(static_cast<int>(start % grid.n_phi));
        const auto refined = nelder_mead_2d(objective, {theta0, phi0},
                                            {0.5 * theta_step, 0.5 * phi_step}, options.simplex);
        result.converged = result.converged && refined.converged;
        if (refined.value < result.min_conditional_entropy) {
            result.min_conditional_entropy = refined.value;
            best_theta = refined.point[0];
            best_phi = refined.point[1];
        }
    }

    result.basis = canonical_basis(best_theta, best_phi);
    result.classical_correlation = s_unmeasured - result.min_conditional_entropy;
    result.raw = (s_a + s_b - s_ab) - result.classical_correlation;
    result.value = std::max(0.0, result.raw);
    return result;
}

double classical_correlation(const DensityMatrix& rho, MeasuredSide side,
                             const DiscordOptions& options) {
    return std::max(0.0, discord_search(rho, side, options).classical_correlation);
}

double discord(const DensityMatrix& rho, MeasuredSide side, const DiscordOptions& options) {
    return discord_search(rho, side, options).value;
}

double symmetrized_discord(const DensityMatrix& rho, const DiscordOptions& options) {
    return std::max(discord(rho, MeasuredSide::A, options), discord(rho, MeasuredSide::B, options));
}

double negativity(const DensityMatrix& rho) {
    require_pair(rho, "negativity");
    return std::max(0.0, trace_norm_hermitian(partial_transpose(rho.matrix(), 2, 0)) - 1.0);
}

double geometric_discord_raw(const DensityMatrix& rho, MeasuredSide side) {
    require_pair(rho, "geometric_discord");
    const auto& m = rho.matrix();
    const auto& sigma = paulis();
    const auto identity = ComplexMatrix::identity(2);

    std::array<double, 3> local{};
    std::array<std::array<double, 3>, 3> corr{};  // row index on the measured qubit
    for (int i = 0; i < 3; ++i) {
        local[i] = side == MeasuredSide::A ? expectation(m, kron(sigma[i], identity))
                                           : expectation(m, kron(identity, sigma[i]));
        for (int j = 0; j < 3; ++j) {
            corr[i][j] = side == MeasuredSide::A ? expectation(m, kron(sigma[i], sigma[j]))
                                                 : expectation(m, kron(sigma[j], sigma[i]));
        }
    }

    ComplexMatrix k(3);
    double norm_sq = 0.0;
    for (int i = 0; i < 3; ++i) {
        norm_sq += local[i] * local[i];
        for (int j = 0; j < 3; ++j) {
            norm_sq += corr[i][j] * corr[i][j];
            double kij = local[i] * local[j];
            for (int l = 0; l < 3; ++l) kij += corr[i][l] * corr[j][l];
            k(i, j) = kij;
        }
    }
    const double k_max = hermitian_eigenvalues(k).front();
    return std::max(0.0, 0.25 * (norm_sq - k_max));
}

double geometric_discord(const DensityMatrix& rho, MeasuredSide side) {
    return 2.0 * geometric_discord_raw(rho, side);
}

CorrelationReport correlation_report(const DensityMatrix& rho, std::string bipartition,
                                     const DiscordOptions& options) {
    require_pair(rho, "correlation_report");
    CorrelationReport report;
    report.bipartition = std::move(bipartition);
    report.concurrence = concurrence(rho);
    report.eof = eof_from_concurrence(report.concurrence);
    const auto on_a = discord_search(rho, MeasuredSide::A, options);
    const auto on_b = discord_search(rho, MeasuredSide::B, options);
    report.discord_measured_a = on_a.value;
    report.discord_measured_b = on_b.value;
    report.symmetrized_discord = std::max(on_a.value, on_b.value);
    report.mutual_information = mutual_information(rho);
    report.negativity = negativity(rho);
    report.geometric_discord_raw = geometric_discord_raw(rho, MeasuredSide::B);
    report.geometric_discord = 2.0 * report.geometric_discord_raw;
    report.converged = on_a.converged && on_b.converged;
    return report;
}

}  // namespace qcorr
