#pragma once

#include <array>
#include <string>

#include "qcorr/basis_scan.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/nelder_mead.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Qubit of the pair that the projectors act on.
using MeasuredSide = Party;

/// Rank-1 projective measurement {|m><m|, |m_perp><m_perp|} with
/// |m> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;

    std::array<ComplexMatrix, 2> projectors() const;
};

/// How the measurement infimum is searched: a coarse grid, then simplex
/// refinement from the best few grid points.
struct DiscordOptions {
    kernels::ScanGrid grid{};
    int refine_starts = 3;
    SimplexOptions simplex{};
    bool parallel_scan = true;
};

struct DiscordResult {
    double value = 0.0;  // clipped at 0
    double raw = 0.0;    // I - J before clipping
    double classical_correlation = 0.0;
    double min_conditional_entropy = 0.0;
    MeasurementBasis basis{};
    bool converged = true;
};

double concurrence(const DensityMatrix& rho);
/// Entanglement of formation in bits.
double eof(const DensityMatrix& rho);
double eof_from_concurrence(double c);
double mutual_information(const DensityMatrix& rho);

double conditional_entropy(const DensityMatrix& rho, const MeasurementBasis& basis,
                           MeasuredSide side);

DiscordResult discord_search(const DensityMatrix& rho, MeasuredSide side,
                             const DiscordOptions& options = {});
double classical_correlation(const DensityMatrix& rho, MeasuredSide side,
                             const DiscordOptions& options = {});
double discord(const DensityMatrix& rho, MeasuredSide side, const DiscordOptions& options = {});
/// max(discord measured on A, discord measured on B)
double symmetrized_discord(const DensityMatrix& rho, const DiscordOptions& options = {});

/// ||rho^{T_A}||_1 - 1, clipped at 0.
double negativity(const DensityMatrix& rho);

/// Minimal Hilbert-Schmidt distance squared to classical-quantum states
/// (classical on `side`), from the Bloch decomposition.
double geometric_discord_raw(const DensityMatrix& rho, MeasuredSide side);
/// Twice the raw value, so that negativity^2 == geometric discord on pure states.
double geometric_discord(const DensityMatrix& rho, MeasuredSide side);

struct CorrelationReport {
    std::string bipartition;
    double concurrence = 0.0;
    double eof = 0.0;
    double discord_measured_a = 0.0;
    double discord_measured_b = 0.0;
    double symmetrized_discord = 0.0;
    double mutual_information = 0.0;
    double negativity = 0.0;
    double geometric_discord = 0.0;  // measured on B, the second qubit of the pair
    double geometric_discord_raw = 0.0;
    bool converged = true;
};

CorrelationReport correlation_report(const DensityMatrix& rho, std::string bipartition,
                                     const DiscordOptions& options = {});

}  // namespace qcorr
