// model.hpp — Domain types shared by every mirrorcoh module
//
// Unit conventions: lengths are dimensionless in units of c/omega0, times
// enter as the product gamma0 * tau, temperature as the Planck occupation
// n_bar at the transition frequency.

#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mirrorcoh {

/// Relative polarizabilities along x, y, z. Weights lie in [0,1] and sum to 1.
/// Construction through make() validates; the aggregate itself does not, so
/// validate() can report on user-supplied values.
struct PolarizationWeights {
    double alpha_x{1.0};
    double alpha_y{0.0};
    double alpha_z{0.0};

    static PolarizationWeights make(double ax, double ay, double az);

    static constexpr PolarizationWeights parallel() { return {1.0, 0.0, 0.0}; }
    static constexpr PolarizationWeights perpendicular() { return {0.0, 0.0, 1.0}; }
    static constexpr PolarizationWeights isotropic() { return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}; }

    // f_x == f_y, so only the in-plane total matters to the rates.
    constexpr double in_plane() const { return alpha_x + alpha_y; }

    friend bool operator==(const PolarizationWeights&, const PolarizationWeights&) = default;
};

inline constexpr double kPolarizationSumTol = 1e-12;

/// Mean thermal photon number at the transition frequency.
struct ThermalOccupation {
    double n_bar{0.0};

    static ThermalOccupation make(double n_bar);
};

/// n_bar = 1/(exp(1/theta) - 1) with theta = k_B T / (hbar omega0); theta = 0 gives 0.
ThermalOccupation occupation_from_theta(double theta);

/// Physical-units helper: T in kelvin, omega0 in rad/s (CODATA 2018 constants).
ThermalOccupation occupation_from_kelvin(double kelvin, double omega0);

struct AtomParams {
    double gamma0{1.0};     // free-space zero-temperature emission rate
    double omega_eff{1.0};  // effective level spacing in units of omega0

    static AtomParams make(double gamma0, double omega_eff = 1.0);
};

struct FreeSpace {
    friend bool operator==(const FreeSpace&, const FreeSpace&) = default;
};

/// Perfect mirror at z = 0, atom at zeta0 = omega0 z0 / c.
struct SingleMirror {
    double zeta0{0.0};
    friend bool operator==(const SingleMirror&, const SingleMirror&) = default;
};

/// Mirrors at z = 0 and z = a; d = omega0 a / c, atom at 0 <= zeta0 <= d.
struct DoubleMirror {
    double d{0.0};
    double zeta0{0.0};
    friend bool operator==(const DoubleMirror&, const DoubleMirror&) = default;
};

using Geometry = std::variant<FreeSpace, SingleMirror, DoubleMirror>;

std::string geometry_name(const Geometry& g);

/// Excited-state population rho11 and coherence rho12 of a qubit state in the
/// {|+>, |->} basis. rho22 = 1 - rho11 by construction.
class DensityMatrix2 {
public:
    static constexpr double kPositivityTol = 1e-12;

    /// Throws std::invalid_argument if the population is outside [0,1] or the
    /// state is not positive semidefinite.
    static DensityMatrix2 make(double rho11, std::complex<double> rho12);

    /// (|+> + |->)/sqrt(2)
    static DensityMatrix2 maximally_coherent() { return DensityMatrix2{0.5, {0.5, 0.0}}; }

    double rho11() const { return rho11_; }
    double rho22() const { return 1.0 - rho11_; }
    std::complex<double> rho12() const { return rho12_; }
    double rho12_abs() const { return std::abs(rho12_); }

private:
    DensityMatrix2(double rho11, std::complex<double> rho12) : rho11_(rho11), rho12_(rho12) {}

    double rho11_;
    std::complex<double> rho12_;
};

/// Dimensionless rate modifier F: the total transition rate is gamma0 (2 n_bar + 1) F.
struct GeometricFactor {
    static constexpr double kClampTol = 1e-9;

    double f_value{1.0};

    /// Values in [-kClampTol, 0) clamp to 0; anything more negative is a
    /// numerical fault and throws std::domain_error.
    static GeometricFactor from_raw(double raw);
    static constexpr GeometricFactor free_space() { return {1.0}; }
};

struct Violation {
    std::string field;
    std::string message;
};

struct CheckedConfig {
    Geometry geometry;
    PolarizationWeights pol;
};

/// Either a checked configuration or the list of violated invariants.
struct Validation {
    std::optional<CheckedConfig> config;
    std::vector<Violation> violations;

    bool ok() const { return config.has_value(); }
    std::string describe() const;
};

std::vector<Violation> check_polarization(const PolarizationWeights& pol);
std::vector<Violation> check_geometry(const Geometry& geometry);
Validation validate(const Geometry& geometry, const PolarizationWeights& pol);

}  // namespace mirrorcoh
