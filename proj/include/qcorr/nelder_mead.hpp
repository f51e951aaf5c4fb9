#pragma once

#include <array>
#include <functional>

namespace qcorr {

struct SimplexOptions {
    double diameter_tolerance = 1e-8;
    int max_iterations = 500;
};

struct SimplexResult {
    std::array<double, 2> point{};
    double value = 0.0;
    int iterations = 0;
    bool converged = false;  // diameter fell below tolerance
};

/// Derivative-free Nelder-Mead minimization in two variables, unconstrained.
/// The initial simplex is {start, start + (step0, 0), start + (0, step1)}.
SimplexResult nelder_mead_2d(const std::function<double(double, double)>& objective,
                             std::array<double, 2> start, std::array<double, 2> step,
                             const SimplexOptions& options = {});

}  // namespace qcorr
