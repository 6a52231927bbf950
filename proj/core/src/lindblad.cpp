// lindblad.cpp — Solved two-level dissipative dynamics

#include "mirrorcoh/lindblad.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mirrorcoh {

KossakowskiAB kossakowski(GeometricFactor f, ThermalOccupation n, double gamma0) {
    if (!(gamma0 > 0.0)) throw std::invalid_argument("gamma0: must be > 0");
    if (!(n.n_bar >= 0.0)) throw std::invalid_argument("n_bar: must be >= 0");
    if (!(f.f_value >= 0.0)) throw std::invalid_argument("F: must be >= 0");
    if (f.f_value < kInhibitedFactor) return {};
    const double b = 0.25 * gamma0 * f.f_value;
    return {b * (2.0 * n.n_bar + 1.0), b};
}

DecayScales decay_scales(const KossakowskiAB& k) {
    DecayScales s;
    s.gamma_total = 4.0 * k.a_coef;
    if (k.a_coef <= 0.0) {
        s.inhibited = true;
        s.tau_coh = std::numeric_limits<double>::infinity();
        s.tau_pop = std::numeric_limits<double>::infinity();
        return s;
    }
    s.tau_coh = 1.0 / (2.0 * k.a_coef);
    s.tau_pop = 1.0 / (4.0 * k.a_coef);
    return s;
}

DensityMatrix2 evolve_state(const KossakowskiAB& k, double omega_eff, double tau) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("tau: must be finite and >= 0, got " + std::to_string(tau));
    }
    const double phase = -omega_eff * tau;
    if (k.a_coef <= 0.0) {
        return DensityMatrix2::make(0.5, std::polar(0.5, phase));
    }
    const double ratio = k.b_coef / k.a_coef;  // 1/(2 n_bar + 1)
    const double rho11 = 0.5 + 0.5 * ratio * std::expm1(-4.0 * k.a_coef * tau);
    const double mag = 0.5 * std::exp(-2.0 * k.a_coef * tau);
    return DensityMatrix2::make(rho11, std::polar(mag, phase));
}

double q_of_tau(double gamma0, double tau) {
    if (!(gamma0 > 0.0)) throw std::invalid_argument("gamma0: must be > 0");
    if (!(tau >= 0.0)) throw std::invalid_argument("tau: must be >= 0");
    return -std::expm1(-gamma0 * tau);
}

double tau_of_q(double gamma0, double q) {
    if (!(gamma0 > 0.0)) throw std::invalid_argument("gamma0: must be > 0");
    if (!(q >= 0.0 && q < 1.0)) {
        throw std::invalid_argument("q: must lie in [0, 1), got " + std::to_string(q));
    }
    return -std::log1p(-q) / gamma0;
}

}  // namespace mirrorcoh
