// scenarios.hpp — Coherence sweeps, rate profiles, position search and the
// table of closed-form special cases.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mirrorcoh/boundary_kernel.hpp"
#include "mirrorcoh/model.hpp"

namespace mirrorcoh {

/// `count` uniform points on [q_min, q_max]; q_max < 1 since q = 1 is tau = inf.
struct QGrid {
    std::size_t count{200};
    double q_min{0.0};
    double q_max{0.995};

    std::vector<double> points() const;
};

struct Measures {
    bool l1{true};
    bool re{true};
};

struct SweepConfig {
    Geometry geometry{FreeSpace{}};
    PolarizationWeights pol{PolarizationWeights::parallel()};
    std::vector<double> n_bars{0.0};
    QGrid q_grid{};
    Measures measures{};
    AtomParams atom{};
    double tol{kDefaultSumTol};
};

/// Throws std::invalid_argument listing every problem with the config.
void check_sweep_config(const SweepConfig& cfg);

/// One sample of an evolution sweep. Unrequested measures are NaN.
struct CoherenceCurvePoint {
    double n_bar{0.0};
    double q{0.0};
    double gamma0_tau{0.0};
    double c_l1{0.0};
    double c_re{0.0};
    double rho11{0.0};
    double rho12_abs{0.0};
};

/// Rows ordered by n_bar (as listed) then q.
std::vector<CoherenceCurvePoint> sweep_coherence(const SweepConfig& cfg);

/// Position-dependent geometries: one mirror, or two mirrors at separation d.
struct GeometryFamily {
    enum class Kind { single_mirror, double_mirror };

    Kind kind{Kind::single_mirror};
    double d{0.0};

    static GeometryFamily single() { return {Kind::single_mirror, 0.0}; }
    static GeometryFamily cavity(double separation) { return {Kind::double_mirror, separation}; }

    Geometry at(double zeta0) const;
    /// Closed interval of admissible zeta0; the upper end is +inf for one mirror.
    std::pair<double, double> bounds() const;
};

struct RatePoint {
    double zeta0{0.0};
    double f{0.0};
    double est_error{0.0};
    bool converged{true};
};

/// Throws std::invalid_argument naming the first grid point outside the
/// family's bounds; unconverged image sums are flagged per point.
std::vector<RatePoint> rate_profile(const GeometryFamily& family, const PolarizationWeights& pol,
                                    std::span<const double> zeta_grid,
                                    double tol = kDefaultSumTol);

/// n >= 2 inclusive uniform points; n == 1 yields {lo}.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

struct OptimizeResult {
    double zeta_star{0.0};
    double f_star{0.0};
    std::size_t evaluations{0};
};

inline constexpr std::size_t kOptimizeScanPoints = 512;
inline constexpr double kOptimizeTol = 1e-8;

/// Coarse scan followed by golden-section refinement around the best scan
/// point. Returns the smallest F found; ties go to the smaller zeta0.
OptimizeResult optimize_position(const GeometryFamily& family, const PolarizationWeights& pol,
                                 double lo, double hi, double tol = kDefaultSumTol);

inline constexpr double kSpecialCaseTol = 1e-6;
/// Single-mirror "at the mirror" rows are evaluated this close to it.
inline constexpr double kNearMirrorZeta = 1e-6;

struct SpecialCaseRow {
    std::string geometry;   // "single" or "double"
    double d{0.0};          // 0 for a single mirror
    std::string pol_name;   // "parallel", "perpendicular", "isotropic"
    PolarizationWeights pol{};
    double zeta0{0.0};
    double f_computed{0.0};
    double f_reference{0.0}; // exact rational value of the rate ratio
    double abs_err{0.0};
    bool pass{false};
};

/// Every closed-form rate ratio: three near a single mirror, three for
/// d = pi/2 and nine for d = 3 pi/2. Rows over tolerance are flagged.
std::vector<SpecialCaseRow> special_case_table();

}  // namespace mirrorcoh
