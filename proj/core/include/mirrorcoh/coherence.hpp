// coherence.hpp — l1-norm and relative-entropy coherence of a qubit state
//
// Two routes: the definitional measures on any DensityMatrix2, and closed
// forms in (q, n_bar, F) for the evolved maximally coherent state. Entropies
// use base-2 logarithms.

#pragma once

#include "mirrorcoh/model.hpp"

namespace mirrorcoh {

/// Eigenvalues in [-kEigenClampTol, 0) are treated as 0 before taking entropies.
inline constexpr double kEigenClampTol = 1e-14;

/// -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
double binary_entropy(double p);

/// Sum of |off-diagonal| entries, 2 |rho12|.
double l1_coherence(const DensityMatrix2& rho);

/// S(rho_diag) - S(rho).
double re_coherence(const DensityMatrix2& rho);

/// Excited population and state eigenvalues of the evolved state, written in
/// terms of the noise parameter q.
struct ClosedFormParams {
    double m_pop{0.5};
    double eig_plus{1.0};
    double eig_minus{0.0};
};

ClosedFormParams closed_form_params(double q, double n_bar, GeometricFactor f);

/// (1 - q)^((n_bar + 1/2) F)
double closed_form_l1(double q, double n_bar, GeometricFactor f);

/// H2(m_pop) - H2(eig_plus) from closed_form_params.
double closed_form_re(double q, double n_bar, GeometricFactor f);

}  // namespace mirrorcoh
