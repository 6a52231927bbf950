// oracles.hpp — Independent reference computations used only by the tests
//
// None of these share code paths with the library:
//   * the mirror response functions by direct quadrature of their cosine
//     transform representation,
//   * the two-mirror factor through its Poisson-dual finite sum over cavity
//     modes (no image series at all),
//   * the dynamics by RK4 integration of the Lindblad generator assembled
//     from Pauli matrices and the Kossakowski matrix,
//   * entropies through an Eigen eigendecomposition.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "mirrorcoh/model.hpp"

namespace mirrorcoh::oracle {

// f(zeta) = int_{-1}^{1} w(u) cos(2 zeta u) du with
//   w_par(u)  =  (3/8)(1 + u^2),  w_perp(u) = -(3/4)(1 - u^2).
inline double w_parallel(double u) { return 0.375 * (1.0 + u * u); }
inline double w_perp(double u) { return -0.75 * (1.0 - u * u); }

template <class W>
long double cosine_transform(W w, double zeta) {
    // composite 8-point Gauss-Legendre
    static constexpr std::array<long double, 4> x = {0.1834346424956498049394761L, 0.5255324099163289858177390L,
                                                     0.7966664774136267395915539L, 0.9602898564975362316835609L};
    static constexpr std::array<long double, 4> wt = {0.3626837833783619829651504L, 0.3137066458778872873379622L,
                                                      0.2223810344533744705443560L, 0.1012285362903762591525314L};
    const int panels = 64 + static_cast<int>(8.0 * std::abs(zeta));
    const long double h = 2.0L / panels;
    long double sum = 0.0L;
    for (int p = 0; p < panels; ++p) {
        const long double mid = -1.0L + (p + 0.5L) * h;
        for (std::size_t k = 0; k < 4; ++k) {
            for (int sgn : {-1, 1}) {
                const long double u = mid + sgn * x[k] * h / 2.0L;
                sum += wt[k] * h / 2.0L * w(static_cast<double>(u)) * std::cos(2.0L * zeta * u);
            }
        }
    }
    return sum;
}

inline double quad_f_parallel(double zeta) { return static_cast<double>(cosine_transform(w_parallel, zeta)); }
inline double quad_f_perp(double zeta) { return static_cast<double>(cosine_transform(w_perp, zeta)); }

/// sum_m f(x0 - d m) = (pi/d) sum_{|u_n| <= 1} w(u_n) cos(2 x0 u_n), u_n = pi n / d,
/// with half weight on modes exactly at |u| = 1.
inline double mode_sum_factor(double d, double zeta0, const PolarizationWeights& pol) {
    const double pi = std::numbers::pi;
    const double spacing = pi / d;
    const int nmax = static_cast<int>(std::floor(d / pi + 1e-12));
    const double a_par = pol.alpha_x + pol.alpha_y;
    long double g = 0.0L, h = 0.0L;
    for (int n = -nmax; n <= nmax; ++n) {
        const double u = n * spacing;
        if (std::abs(u) > 1.0 + 1e-12) continue;
        const double weight = std::abs(std::abs(u) - 1.0) < 1e-12 ? 0.5 : 1.0;
        const double wp = w_parallel(u);
        const double wz = w_perp(u);
        g += weight * spacing * (a_par * wp - pol.alpha_z * wz);
        h += weight * spacing * (a_par * wp + pol.alpha_z * wz) * std::cos(2.0 * zeta0 * u);
    }
    return static_cast<double>(g - h);
}

using Mat2 = Eigen::Matrix2cd;

inline std::array<Mat2, 3> pauli() {
    using C = std::complex<double>;
    Mat2 sx, sy, sz;
    sx << 0, 1, 1, 0;
    sy << 0, C(0, -1), C(0, 1), 0;
    sz << 1, 0, 0, -1;
    return {sx, sy, sz};
}

/// d rho/dt = -(i/2) Omega [sigma_3, rho]
///            + (1/2) sum_ij a_ij (2 s_j rho s_i - s_i s_j rho - rho s_i s_j),
/// a_ij = A delta_ij - i B eps_ij3 - A delta_i3 delta_j3.
class LindbladOracle {
public:
    LindbladOracle(double a, double b, double omega) : omega_(omega), s_(pauli()) {
        using C = std::complex<double>;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                C v = (i == j ? a : 0.0);
                if (i == 2 && j == 2) v -= a;
                if (i == 0 && j == 1) v += C(0, -b);  // eps_123 = +1
                if (i == 1 && j == 0) v += C(0, b);   // eps_213 = -1
                kossakowski_(i, j) = v;
            }
        }
    }

    Mat2 rhs(const Mat2& rho) const {
        using C = std::complex<double>;
        Mat2 out = C(0, -0.5 * omega_) * (s_[2] * rho - rho * s_[2]);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const C aij = kossakowski_(i, j);
                if (aij == C(0, 0)) continue;
                out += 0.5 * aij *
                       (2.0 * s_[j] * rho * s_[i] - s_[i] * s_[j] * rho - rho * s_[i] * s_[j]);
            }
        }
        return out;
    }

    Mat2 integrate(Mat2 rho, double tau, std::size_t steps) const {
        const double h = tau / static_cast<double>(steps);
        for (std::size_t n = 0; n < steps; ++n) {
            const Mat2 k1 = rhs(rho);
            const Mat2 k2 = rhs(rho + 0.5 * h * k1);
            const Mat2 k3 = rhs(rho + 0.5 * h * k2);
            const Mat2 k4 = rhs(rho + h * k3);
            rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        return rho;
    }

private:
    double omega_;
    std::array<Mat2, 3> s_;
    Eigen::Matrix3cd kossakowski_;
};

inline Mat2 maximally_coherent_matrix() {
    Mat2 rho;
    rho << 0.5, 0.5, 0.5, 0.5;
    return rho;
}

inline double entropy_bits(const Eigen::Vector2d& eig) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i) {
        if (eig(i) > 0.0) s -= eig(i) * std::log2(eig(i));
    }
    return s;
}

/// S(diag rho) - S(rho) via a general Hermitian eigensolver.
inline double re_coherence_eigen(const Mat2& rho) {
    Eigen::SelfAdjointEigenSolver<Mat2> solver(rho);
    Eigen::Vector2d diag(rho(0, 0).real(), rho(1, 1).real());
    return entropy_bits(diag) - entropy_bits(solver.eigenvalues());
}

inline Mat2 to_matrix(const DensityMatrix2& rho) {
    Mat2 m;
    m << rho.rho11(), rho.rho12(), std::conj(rho.rho12()), rho.rho22();
    return m;
}

}  // namespace mirrorcoh::oracle
