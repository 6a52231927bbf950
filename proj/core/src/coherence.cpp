// coherence.cpp — Coherence measures

#include "mirrorcoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mirrorcoh {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double clamp_eigen(double x) {
    if (x < 0.0 && x >= -kEigenClampTol) return 0.0;
    return x;
}

void check_closed_form_inputs(double q, double n_bar, GeometricFactor f) {
    if (!(q >= 0.0 && q < 1.0)) {
        throw std::invalid_argument("q: must lie in [0, 1), got " + std::to_string(q));
    }
    if (!(n_bar >= 0.0)) throw std::invalid_argument("n_bar: must be >= 0");
    if (!(f.f_value >= 0.0)) throw std::invalid_argument("F: must be >= 0");
}

}  // namespace

double binary_entropy(double p) {
    return -xlog2x(p) - xlog2x(1.0 - p);
}

double l1_coherence(const DensityMatrix2& rho) { return 2.0 * rho.rho12_abs(); }

double re_coherence(const DensityMatrix2& rho) {
    const double dev = rho.rho11() - 0.5;
    const double radius = std::sqrt(dev * dev + std::norm(rho.rho12()));
    const double eig_plus = 0.5 + radius;
    // det / eig_plus avoids cancellation in 1/2 - radius.
    const double det = rho.rho11() * rho.rho22() - std::norm(rho.rho12());
    const double eig_minus = clamp_eigen(det / eig_plus);
    const double s_state = -xlog2x(eig_plus) - xlog2x(eig_minus);
    return std::max(0.0, binary_entropy(rho.rho11()) - s_state);
}

ClosedFormParams closed_form_params(double q, double n_bar, GeometricFactor f) {
    check_closed_form_inputs(q, n_bar, f);
    const double two_n1 = 2.0 * n_bar + 1.0;
    const double decay = std::pow(1.0 - q, two_n1 * f.f_value);
    ClosedFormParams p;
    p.m_pop = 0.5 + (decay - 1.0) / (2.0 * two_n1);
    const double dev = p.m_pop - 0.5;
    const double radius = std::sqrt(0.25 * decay + dev * dev);
    p.eig_plus = 0.5 + radius;
    p.eig_minus = clamp_eigen(0.5 - radius);
    return p;
}

double closed_form_l1(double q, double n_bar, GeometricFactor f) {
    check_closed_form_inputs(q, n_bar, f);
    if (f.f_value == 0.0) return 1.0;
    return std::pow(1.0 - q, (n_bar + 0.5) * f.f_value);
}

double closed_form_re(double q, double n_bar, GeometricFactor f) {
    const auto p = closed_form_params(q, n_bar, f);
    const double value =
        -xlog2x(p.m_pop) - xlog2x(1.0 - p.m_pop) + xlog2x(p.eig_plus) + xlog2x(p.eig_minus);
    return std::max(0.0, value);
}

}  // namespace mirrorcoh
