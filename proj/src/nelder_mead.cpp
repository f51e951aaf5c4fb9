#include "qcorr/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

namespace {

using Point = std::array<double, 2>;

Point affine(const Point& base, const Point& toward, double t) {
    return {base[0] + t * (toward[0] - base[0]), base[1] + t * (toward[1] - base[1])};
}

double distance(const Point& p, const Point& q) { return std::hypot(p[0] - q[0], p[1] - q[1]); }

}  // namespace

SimplexResult nelder_mead_2d(const std::function<double(double, double)>& objective, Point start,
                             Point step, const SimplexOptions& options) {
    std::array<Point, 3> vertex{start, Point{start[0] + step[0], start[1]},
                                Point{start[0], start[1] + step[1]}};
    std::array<double, 3> value{};
    for (int k = 0; k < 3; ++k) value[k] = objective(vertex[k][0], vertex[k][1]);

    auto order = [&] {
        // insertion sort on three vertices, stable so ties keep their position
        for (int i = 1; i < 3; ++i)
            for (int j = i; j > 0 && value[j] < value[j - 1]; --j) {
                std::swap(value[j], value[j - 1]);
                std::swap(vertex[j], vertex[j - 1]);
            }
    };
    auto diameter = [&] {
        return std::max({distance(vertex[0], vertex[1]), distance(vertex[0], vertex[2]),
                         distance(vertex[1], vertex[2])});
    };

    SimplexResult result;
    order();
    int iteration = 0;
    for (; iteration < options.max_iterations; ++iteration) {
        if (diameter() < options.diameter_tolerance) {
            result.converged = true;
            break;
        }
        const Point centroid{0.5 * (vertex[0][0] + vertex[1][0]), 0.5 * (vertex[0][1] + vertex[1][1])};
        const Point reflected = affine(centroid, vertex[2], -1.0);
        const double f_reflected = objective(reflected[0], reflected[1]);

        if (f_reflected < value[0]) {
            const Point expanded = affine(centroid, vertex[2], -2.0);
            const double f_expanded = objective(expanded[0], expanded[1]);
            if (f_expanded < f_reflected) {
                vertex[2] = expanded;
                value[2] = f_expanded;
            } else {
                vertex[2] = reflected;
                value[2] = f_reflected;
            }
        } else if (f_reflected < value[1]) {
            vertex[2] = reflected;
            value[2] = f_reflected;
        } else {
            const bool outside = f_reflected < value[2];
            const Point contracted =
                outside ? affine(centroid, reflected, 0.5) : affine(centroid, vertex[2], 0.5);
            const double f_contracted = objective(contracted[0], contracted[1]);
            if (f_contracted < std::min(f_reflected, value[2])) {
                vertex[2] = contracted;
                value[2] = f_contracted;
            } else {
                for (int k = 1; k < 3; ++k) {
                    vertex[k] = affine(vertex[0], vertex[k], 0.5);
                    value[k] = objective(vertex[k][0], vertex[k][1]);
                }
            }
        }
        order();
    }
    if (!result.converged && diameter() < options.diameter_tolerance) result.converged = true;

    result.point = vertex[0];
    result.value = value[0];
    result.iterations = iteration;
    return result;
}

}  // namespace qcorr
