#include "qcorr/basis_scan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcorr::kernels {

namespace {

constexpr double kNegligibleOutcome = 1e-12;

// Entropy in bits of the 2x2 Hermitian [[x, z], [conj z, y]] divided by its trace.
double outcome_entropy(double x, double y, Complex z, double p) {
    const double half_gap = 0.5 * (x - y);
    const double radius = std::sqrt(half_gap * half_gap + std::norm(z));
    const double upper = (0.5 * (x + y) + radius) / p;
    // smaller eigenvalue from the determinant avoids cancellation
    const double det = std::max(0.0, (x * y - std::norm(z)) / (p * p));
    const double lower = upper > 0.0 ? det / upper : 0.0;
    double s = 0.0;
    if (upper > 0.0) s -= upper * std::log2(upper);
    if (lower > 0.0) s -= lower * std::log2(lower);
    return s;
}

}  // namespace

double ScanGrid::theta(int i) const {
    return n_theta > 1 ? i * (std::numbers::pi / 2.0) / (n_theta - 1) : 0.0;
}

double ScanGrid::phi(int j) const { return j * (2.0 * std::numbers::pi) / n_phi; }

double conditional_entropy(const ComplexMatrix& rho, double theta, double phi, Party measured) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Complex e = std::polar(1.0, phi);
    const std::array<std::array<Complex, 2>, 2> kets{{{c, e * s}, {-std::conj(e) * s, c}}};

    double h = 0.0;
    for (const auto& m : kets) {
        // sigma(u, v) = <m|_measured rho |m>_measured, indexed by the unmeasured qubit
        Complex sigma[2][2] = {};
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) {
                Complex acc = 0.0;
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        const std::size_t row = measured == Party::B ? 2 * u + k : 2 * k + u;
                        const std::size_t col = measured == Party::B ? 2 * v + l : 2 * l + v;
                        acc += std::conj(m[k]) * rho(row, col) * m[l];
                    }
                sigma[u][v] = acc;
            }
        const double x = sigma[0][0].real();
        const double y = sigma[1][1].real();
        const double p = x + y;
        if (p < kNegligibleOutcome) continue;
        const Complex z = 0.5 * (sigma[0][1] + std::conj(sigma[1][0]));
        h += p * outcome_entropy(x, y, z, p);
    }
    return h;
}

std::vector<double> scan_serial(const ComplexMatrix& rho, Party measured, const ScanGrid& grid) {
    std::vector<double> values(grid.size());
    for (int i = 0; i < grid.n_theta; ++i)
        for (int j = 0; j < grid.n_phi; ++j)
            values[static_cast<std::size_t>(i) * grid.n_phi + j] =
                conditional_entropy(rho, grid.theta(i), grid.phi(j), measured);
    return values;
}

std::vector<double> scan_parallel(const ComplexMatrix& rho, Party measured, const ScanGrid& grid) {
    std::vector<double> values(grid.size());
    const auto total = static_cast<long long>(grid.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (!omp_in_parallel())
#endif
    for (long long k = 0; k < total; ++k) {
        const int i = static_cast<int>(k / grid.n_phi);
        const int j = static_cast<int>(k % grid.n_phi);
        values[k] = conditional_entropy(rho, grid.theta(i), grid.phi(j), measured);
    }
    return values;
}

std::vector<std::size_t> best_indices(const std::vector<double>& values, std::size_t count) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    count = std::min(count, order.size());
    std::partial_sort(order.begin(), order.begin() + count, order.end(),
                      [&](std::size_t a, std::size_t b) {
                          return values[a] < values[b] || (values[a] == values[b] && a < b);
                      });
    order.resize(count);
    return order;
}

}  // namespace qcorr::kernels
