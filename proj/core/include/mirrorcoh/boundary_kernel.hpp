// boundary_kernel.hpp — Mirror response functions and two-mirror image sums
//
// A perfect mirror at distance zeta (units c/omega0) modifies the emission
// spectrum through
//
//   f_parallel(zeta) = 3/(16 zeta^3) [2 zeta cos 2zeta + (4 zeta^2 - 1) sin 2zeta]
//   f_perp(zeta)     = 3/(8 zeta^3)  [2 zeta cos 2zeta - sin 2zeta]
//
// and the rate modifier F is 1 - sum_i alpha_i f_i(zeta0) for one mirror.
// Between two mirrors separated by d, F = sum_m [G(d m) - H(zeta0 - d m)]
// with G = a_x f_x + a_y f_y - a_z f_z and H = sum_i a_i f_i. Those sums
// only converge conditionally (terms ~ sin(2dm)/m) and are accelerated.

#pragma once

#include <cstddef>
#include <stdexcept>

#include "mirrorcoh/model.hpp"

namespace mirrorcoh {

/// Below this |zeta| the response functions use their Maclaurin series.
inline constexpr double kSeriesSwitch = 0.05;
inline constexpr double kDefaultSumTol = 1e-10;
inline constexpr double kDefaultFactorTol = 1e-8;
inline constexpr std::size_t kMaxImageTerms = 1'000'000;

/// f_x = f_y. Even in zeta, f_parallel(0) = 1.
double f_parallel(double zeta);

/// f_z. Even in zeta, f_perp(0) = -1.
double f_perp(double zeta);

/// Closed-form branch only, without the small-argument switch. Exposed for
/// continuity tests; undefined at zeta = 0.
double f_parallel_closed(double zeta);
double f_perp_closed(double zeta);

struct ImageSumResult {
    double g_sum{0.0};         // sum_m G(d m)
    double h_sum{0.0};         // sum_m H(zeta0 - d m)
    std::size_t terms_used{0}; // largest |m| included
    double est_error{0.0};     // absolute tail estimate, max over both sums
    bool converged{false};

    double difference() const { return g_sum - h_sum; }
};

/// Symmetric partial sums over |m| <= M, accelerated and grown geometrically
/// until successive accelerated values agree to within tol or M reaches
/// max_terms. Non-convergence is reported through `converged`, never thrown.
/// Throws std::invalid_argument for an invalid geometry, polarization or tol.
ImageSumResult image_sums(double d, double zeta0, const PolarizationWeights& pol,
                          double tol = kDefaultSumTol,
                          std::size_t max_terms = kMaxImageTerms);

class ImageSumError : public std::runtime_error {
public:
    ImageSumError(const std::string& what, ImageSumResult partial)
        : std::runtime_error(what), partial_(partial) {}

    const ImageSumResult& partial() const { return partial_; }

private:
    ImageSumResult partial_;
};

/// F for any geometry. Free space is exactly 1. Throws std::invalid_argument
/// on invalid input and ImageSumError when the two-mirror sums fail to converge.
GeometricFactor geometric_factor(const Geometry& geometry, const PolarizationWeights& pol,
                                 double tol = kDefaultSumTol);

/// 1 - sum_i alpha_i f_i(zeta0), unclamped.
double single_mirror_factor(double zeta0, const PolarizationWeights& pol);

}  // namespace mirrorcoh
