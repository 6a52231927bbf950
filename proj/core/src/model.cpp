// model.cpp — Validation and constructors for the shared domain types

#include "mirrorcoh/model.hpp"

#include <cmath>
#include <sstream>

namespace mirrorcoh {

namespace {

constexpr double kHbar = 1.054571817e-34;   // J s
constexpr double kBoltzmann = 1.380649e-23; // J / K

std::string fmt_num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

PolarizationWeights PolarizationWeights::make(double ax, double ay, double az) {
    PolarizationWeights pol{ax, ay, az};
    if (auto v = check_polarization(pol); !v.empty()) {
        throw std::invalid_argument(v.front().field + ": " + v.front().message);
    }
    return pol;
}

ThermalOccupation ThermalOccupation::make(double n_bar) {
    if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) {
        throw std::invalid_argument("n_bar: must be finite and >= 0, got " + fmt_num(n_bar));
    }
    return ThermalOccupation{n_bar};
}

ThermalOccupation occupation_from_theta(double theta) {
    if (!(theta >= 0.0)) {
        throw std::invalid_argument("theta: must be >= 0, got " + fmt_num(theta));
    }
    if (theta == 0.0) return ThermalOccupation{0.0};
    if (std::isinf(theta)) return ThermalOccupation{theta};
    return ThermalOccupation{1.0 / std::expm1(1.0 / theta)};
}

ThermalOccupation occupation_from_kelvin(double kelvin, double omega0) {
    if (!(kelvin >= 0.0)) {
        throw std::invalid_argument("kelvin: must be >= 0, got " + fmt_num(kelvin));
    }
    if (!(omega0 > 0.0)) {
        throw std::invalid_argument("omega0: must be > 0, got " + fmt_num(omega0));
    }
    return occupation_from_theta(kBoltzmann * kelvin / (kHbar * omega0));
}

AtomParams AtomParams::make(double gamma0, double omega_eff) {
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) {
        throw std::invalid_argument("gamma0: must be finite and > 0, got " + fmt_num(gamma0));
    }
    if (!(omega_eff > 0.0) || !std::isfinite(omega_eff)) {
        throw std::invalid_argument("omega_eff: must be finite and > 0, got " + fmt_num(omega_eff));
    }
    return AtomParams{gamma0, omega_eff};
}

std::string geometry_name(const Geometry& g) {
    struct Namer {
        std::string operator()(const FreeSpace&) const { return "free"; }
        std::string operator()(const SingleMirror&) const { return "single"; }
        std::string operator()(const DoubleMirror&) const { return "double"; }
    };
    return std::visit(Namer{}, g);
}

DensityMatrix2 DensityMatrix2::make(double rho11, std::complex<double> rho12) {
    if (!std::isfinite(rho11) || !std::isfinite(rho12.real()) || !std::isfinite(rho12.imag())) {
        throw std::invalid_argument("DensityMatrix2: non-finite entry");
    }
    if (rho11 < 0.0 || rho11 > 1.0) {
        throw std::invalid_argument("DensityMatrix2: rho11 outside [0,1]: " + fmt_num(rho11));
    }
    const double dev = rho11 - 0.5;
    if (dev * dev + std::norm(rho12) > 0.25 + kPositivityTol) {
        throw std::invalid_argument("DensityMatrix2: not positive semidefinite (|rho12| = " +
                                    fmt_num(std::abs(rho12)) + ", rho11 = " + fmt_num(rho11) + ")");
    }
    return DensityMatrix2{rho11, rho12};
}

GeometricFactor GeometricFactor::from_raw(double raw) {
    if (!std::isfinite(raw)) {
        throw std::domain_error("GeometricFactor: non-finite value");
    }
    if (raw < -kClampTol) {
        throw std::domain_error("GeometricFactor: negative rate modifier " + fmt_num(raw));
    }
    return GeometricFactor{raw < 0.0 ? 0.0 : raw};
}

std::vector<Violation> check_polarization(const PolarizationWeights& pol) {
    std::vector<Violation> out;
    auto check_unit = [&](const char* name, double a) {
        if (!std::isfinite(a) || a < 0.0 || a > 1.0) {
            out.push_back({name, "weight must lie in [0,1], got " + fmt_num(a)});
        }
    };
    check_unit("pol.alpha_x", pol.alpha_x);
    check_unit("pol.alpha_y", pol.alpha_y);
    check_unit("pol.alpha_z", pol.alpha_z);
    const double sum = pol.alpha_x + pol.alpha_y + pol.alpha_z;
    if (!(std::abs(sum - 1.0) <= kPolarizationSumTol)) {
        out.push_back({"pol", "weights must sum to 1, got " + fmt_num(sum)});
    }
    return out;
}

std::vector<Violation> check_geometry(const Geometry& geometry) {
    std::vector<Violation> out;
    if (const auto* s = std::get_if<SingleMirror>(&geometry)) {
        if (!std::isfinite(s->zeta0) || s->zeta0 < 0.0) {
            out.push_back({"geometry.zeta0", "atom position must be finite and >= 0, got " +
                                                 fmt_num(s->zeta0)});
        }
    } else if (const auto* dm = std::get_if<DoubleMirror>(&geometry)) {
        if (!std::isfinite(dm->d) || dm->d <= 0.0) {
            out.push_back({"geometry.d", "mirror separation must be finite and > 0, got " +
                                             fmt_num(dm->d)});
        }
        if (!std::isfinite(dm->zeta0) || dm->zeta0 < 0.0) {
            out.push_back({"geometry.zeta0", "atom position must be finite and >= 0, got " +
                                                 fmt_num(dm->zeta0)});
        } else if (std::isfinite(dm->d) && dm->d > 0.0 && dm->zeta0 > dm->d) {
            out.push_back({"geometry.zeta0", "atom outside cavity: zeta0 = " + fmt_num(dm->zeta0) +
                                                 " > d = " + fmt_num(dm->d)});
        }
    }
    return out;
}

Validation validate(const Geometry& geometry, const PolarizationWeights& pol) {
    Validation v;
    v.violations = check_geometry(geometry);
    auto pv = check_polarization(pol);
    v.violations.insert(v.violations.end(), pv.begin(), pv.end());
    if (v.violations.empty()) v.config = CheckedConfig{geometry, pol};
    return v;
}

std::string Validation::describe() const {
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += "; ";
        s += v.field + ": " + v.message;
    }
    return s;
}

}  // namespace mirrorcoh
