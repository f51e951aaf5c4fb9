#pragma once

// Test-only reference computations. These go through Eigen and explicit
// projector algebra, never through the library's Jacobi solver, basis-scan
// kernel or simplex search, so they can check those paths independently.

#include <random>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr::testing {

/// Spectrum of a Hermitian matrix via Eigen, descending.
std::vector<double> oracle_eigenvalues(const ComplexMatrix& h);

/// Concurrence from the non-Hermitian product rho * (sy sy) rho^* (sy sy),
/// general complex eigensolver.
double oracle_concurrence(const ComplexMatrix& rho);

/// Von Neumann entropy in bits via Eigen.
double oracle_entropy(const ComplexMatrix& rho);

/// Discord by brute force over an n_theta x n_phi grid, theta in [0, pi/2]
/// inclusive, phi in [0, 2 pi). 100 x 100 = 10^4 bases by default.
double oracle_grid_discord(const ComplexMatrix& rho, Party measured, int n_theta = 100,
                           int n_phi = 100);

/// Conditional entropy for one basis point, explicit (P (x) I) rho (P (x) I).
double oracle_conditional_entropy(const ComplexMatrix& rho, double theta, double phi,
                                  Party measured);

/// Discord of a Bell-diagonal state with correlation vector (c, c, c) and the
/// given spectrum (closed form, used for Werner states).
double oracle_werner_discord(double eta);

/// Haar-ish random objects from a seeded engine.
PureState random_pure(std::mt19937_64& rng, int n_qubits);
ComplexMatrix random_density(std::mt19937_64& rng, int n_qubits, int rank = 4);
ComplexMatrix random_unitary(std::mt19937_64& rng, int dim);
ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim);

}  // namespace qcorr::testing
