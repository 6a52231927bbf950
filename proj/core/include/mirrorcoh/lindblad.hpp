// lindblad.hpp — Kossakowski coefficients, decay timescales and the solved
// evolution of the maximally coherent initial state.

#pragma once

#include "mirrorcoh/model.hpp"

namespace mirrorcoh {

/// Below this F the dissipator is treated as switched off (A = B = 0).
inline constexpr double kInhibitedFactor = 1e-12;

/// The two scalars that fix the Kossakowski matrix
/// a_ij = A delta_ij - i B eps_ij3 - A delta_i3 delta_j3.
struct KossakowskiAB {
    double a_coef{0.0};
    double b_coef{0.0};
};

/// A = (gamma0/4)(2 n_bar + 1) F, B = (gamma0/4) F.
KossakowskiAB kossakowski(GeometricFactor f, ThermalOccupation n, double gamma0);

struct DecayScales {
    double gamma_total{0.0}; // gamma0 (2 n_bar + 1) F = 4A
    double tau_coh{0.0};     // 1/(2A), off-diagonal decay time
    double tau_pop{0.0};     // 1/(4A), population relaxation time
    bool inhibited{false};   // A == 0; both timescales are +inf
};

DecayScales decay_scales(const KossakowskiAB& k);

/// State at time tau starting from (|+> + |->)/sqrt(2):
///   rho11 = 1/2 + (B/2A)(exp(-4 A tau) - 1)
///   rho12 = (1/2) exp(-2 A tau) exp(-i omega_eff tau)
/// Throws std::invalid_argument for negative or non-finite tau.
DensityMatrix2 evolve_state(const KossakowskiAB& k, double omega_eff, double tau);

/// Noise parameter q = 1 - exp(-gamma0 tau).
double q_of_tau(double gamma0, double tau);

/// Inverse of q_of_tau; requires q in [0, 1).
double tau_of_q(double gamma0, double q);

}  // namespace mirrorcoh
