#pragma once

// Conditional-entropy kernels over rank-1 projective measurements on one qubit
// of a two-qubit state. The grid scan has an OpenMP version and a serial
// reference; both fill the same slots so their outputs are bit-identical.

#include <cstddef>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr::kernels {

/// theta_i = i * theta_max / (n_theta - 1), phi_j = j * 2 pi / n_phi.
/// theta in [0, pi/2] covers every measurement: (theta, phi) and
/// (pi - theta, phi + pi) give the same projector pair.
struct ScanGrid {
    int n_theta = 32;
    int n_phi = 64;

    double theta(int i) const;
    double phi(int j) const;
    std::size_t size() const { return static_cast<std::size_t>(n_theta) * n_phi; }
};

/// sum_i p_i S(post-measurement state of the unmeasured qubit), for projectors
/// |m><m| and |m_perp><m_perp| with |m> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
/// `rho` is a 4x4 two-qubit matrix; no validation is done here.
double conditional_entropy(const ComplexMatrix& rho, double theta, double phi, Party measured);

/// Row-major (theta-major) values of conditional_entropy on the grid.
std::vector<double> scan_serial(const ComplexMatrix& rho, Party measured, const ScanGrid& grid);
std::vector<double> scan_parallel(const ComplexMatrix& rho, Party measured, const ScanGrid& grid);

/// Indices of the `count` smallest values. Ties go to the lower theta index,
/// then the lower phi index, so the choice is independent of scheduling.
std::vector<std::size_t> best_indices(const std::vector<double>& values, std::size_t count);

}  // namespace qcorr::kernels
