// scenarios.cpp — High-level experiments built on the kernel, dynamics and measures

#include "mirrorcoh/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mirrorcoh/coherence.hpp"
#include "mirrorcoh/lindblad.hpp"

namespace mirrorcoh {

namespace {

std::string num(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

}  // namespace

std::vector<double> QGrid::points() const { return uniform_grid(q_min, q_max, count); }

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    std::vector<double> out;
    if (n == 0) return out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(lo + step * static_cast<double>(i));
    out.push_back(hi);
    return out;
}

void check_sweep_config(const SweepConfig& cfg) {
    auto v = validate(cfg.geometry, cfg.pol);
    std::string problems = v.describe();
    auto add = [&](const std::string& s) {
        if (!problems.empty()) problems += "; ";
        problems += s;
    };
    if (cfg.n_bars.empty()) add("n_bar: at least one value required");
    for (double n : cfg.n_bars) {
        if (!(n >= 0.0) || !std::isfinite(n)) add("n_bar: must be finite and >= 0, got " + num(n));
    }
    const auto& g = cfg.q_grid;
    if (g.count == 0) add("q grid: count must be > 0");
    if (!(g.q_min >= 0.0) || !(g.q_max < 1.0) || !(g.q_min <= g.q_max)) {
        add("q grid: need 0 <= q_min <= q_max < 1, got [" + num(g.q_min) + ", " + num(g.q_max) + "]");
    }
    if (!cfg.measures.l1 && !cfg.measures.re) add("measures: at least one measure required");
    if (!(cfg.atom.gamma0 > 0.0)) add("gamma0: must be > 0");
    if (!(cfg.atom.omega_eff > 0.0)) add("omega_eff: must be > 0");
    if (!(cfg.tol > 0.0)) add("tol: must be > 0");
    if (!problems.empty()) throw std::invalid_argument(problems);
}

std::vector<CoherenceCurvePoint> sweep_coherence(const SweepConfig& cfg) {
    check_sweep_config(cfg);
    const GeometricFactor f = geometric_factor(cfg.geometry, cfg.pol, cfg.tol);
    const auto qs = cfg.q_grid.points();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<CoherenceCurvePoint> rows;
    rows.reserve(qs.size() * cfg.n_bars.size());
    for (double n_bar : cfg.n_bars) {
        const auto k = kossakowski(f, ThermalOccupation{n_bar}, cfg.atom.gamma0);
        for (double q : qs) {
            try {
                const double tau = tau_of_q(cfg.atom.gamma0, q);
                const auto rho = evolve_state(k, cfg.atom.omega_eff, tau);
                CoherenceCurvePoint p;
                p.n_bar = n_bar;
                p.q = q;
                p.gamma0_tau = cfg.atom.gamma0 * tau;
                p.c_l1 = cfg.measures.l1 ? l1_coherence(rho) : nan;
                p.c_re = cfg.measures.re ? re_coherence(rho) : nan;
                p.rho11 = rho.rho11();
                p.rho12_abs = rho.rho12_abs();
                rows.push_back(p);
            } catch (const std::exception& e) {
                throw std::runtime_error("sweep row (n_bar = " + num(n_bar) + ", q = " + num(q) +
                                         "): " + e.what());
            }
        }
    }
    return rows;
}

Geometry GeometryFamily::at(double zeta0) const {
    if (kind == Kind::single_mirror) return SingleMirror{zeta0};
    return DoubleMirror{d, zeta0};
}

std::pair<double, double> GeometryFamily::bounds() const {
    if (kind == Kind::single_mirror) return {0.0, std::numeric_limits<double>::infinity()};
    return {0.0, d};
}

std::vector<RatePoint> rate_profile(const GeometryFamily& family, const PolarizationWeights& pol,
                                    std::span<const double> zeta_grid, double tol) {
    if (family.kind == GeometryFamily::Kind::double_mirror && !(family.d > 0.0)) {
        throw std::invalid_argument("geometry.d: mirror separation must be > 0");
    }
    const auto [lo, hi] = family.bounds();
    for (std::size_t i = 0; i < zeta_grid.size(); ++i) {
        if (!(zeta_grid[i] >= lo && zeta_grid[i] <= hi)) {
            throw std::invalid_argument("zeta grid point " + std::to_string(i) + " (" +
                                        num(zeta_grid[i]) + ") outside [" + num(lo) + ", " +
                                        num(hi) + "]");
        }
    }
    if (auto pv = check_polarization(pol); !pv.empty()) {
        throw std::invalid_argument(pv.front().field + ": " + pv.front().message);
    }

    std::vector<RatePoint> out;
    out.reserve(zeta_grid.size());
    for (double z : zeta_grid) {
        RatePoint p{z, 0.0, 0.0, true};
        if (family.kind == GeometryFamily::Kind::single_mirror) {
            p.f = GeometricFactor::from_raw(single_mirror_factor(z, pol)).f_value;
        } else {
            const auto sums = image_sums(family.d, z, pol, tol);
            p.converged = sums.converged;
            p.est_error = sums.est_error;
            p.f = sums.converged ? GeometricFactor::from_raw(sums.difference()).f_value
                                 : sums.difference();
        }
        out.push_back(p);
    }
    return out;
}

OptimizeResult optimize_position(const GeometryFamily& family, const PolarizationWeights& pol,
                                 double lo, double hi, double tol) {
    const auto [blo, bhi] = family.bounds();
    if (!(lo < hi)) {
        throw std::invalid_argument("search interval must be nonempty, got [" + num(lo) + ", " +
                                    num(hi) + "]");
    }
    if (lo < blo || hi > bhi || !std::isfinite(hi)) {
        throw std::invalid_argument("search interval [" + num(lo) + ", " + num(hi) +
                                    "] outside geometry bounds [" + num(blo) + ", " + num(bhi) + "]");
    }

    OptimizeResult r;
    auto eval = [&](double z) {
        ++r.evaluations;
        return geometric_factor(family.at(z), pol, tol).f_value;
    };

    const auto grid = uniform_grid(lo, hi, kOptimizeScanPoints);
    std::size_t best = 0;
    double best_f = eval(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double f = eval(grid[i]);
        if (f < best_f - 1e-12) {
            best_f = f;
            best = i;
        }
    }
    r.zeta_star = grid[best];
    r.f_star = best_f;

    // Golden-section search on the neighbouring scan cells.
    double a = grid[best == 0 ? 0 : best - 1];
    double b = grid[std::min(best + 1, grid.size() - 1)];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (b - a > kOptimizeTol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d);
        }
    }
    const double z_ref = 0.5 * (a + b);
    const double f_ref = eval(z_ref);
    if (f_ref < r.f_star - 1e-12) {
        r.zeta_star = z_ref;
        r.f_star = f_ref;
    }
    return r;
}

std::vector<SpecialCaseRow> special_case_table() {
    using std::numbers::pi;
    const auto par = PolarizationWeights::parallel();
    const auto perp = PolarizationWeights::perpendicular();
    const auto iso = PolarizationWeights::isotropic();

    struct Case {
        const char* pol_name;
        PolarizationWeights pol;
        double d;  // 0 for a single mirror
        double zeta0;
        double expected;
    };
    const double d1 = pi / 2.0;
    const double d3 = 3.0 * pi / 2.0;
    const Case cases[] = {
        {"parallel", par, 0.0, kNearMirrorZeta, 0.0},
        {"perpendicular", perp, 0.0, kNearMirrorZeta, 2.0},
        {"isotropic", iso, 0.0, kNearMirrorZeta, 2.0 / 3.0},
        // d = pi/2: F = 3 alpha_z wherever the atom sits
        {"parallel", par, d1, d1 / 4.0, 0.0},
        {"perpendicular", perp, d1, d1 / 4.0, 3.0},
        {"isotropic", iso, d1, d1 / 4.0, 1.0},
        {"parallel", par, d3, 0.0, 0.0},
        {"parallel", par, d3, d3 / 4.0, 13.0 / 18.0},
        {"parallel", par, d3, d3 / 2.0, 13.0 / 9.0},
        {"perpendicular", perp, d3, 0.0, 19.0 / 9.0},
        {"perpendicular", perp, d3, d3 / 4.0, 14.0 / 9.0},
        {"perpendicular", perp, d3, d3 / 2.0, 1.0},
        {"isotropic", iso, d3, 0.0, 19.0 / 27.0},
        {"isotropic", iso, d3, d3 / 4.0, 1.0},
        {"isotropic", iso, d3, d3 / 2.0, 35.0 / 27.0},
    };

    std::vector<SpecialCaseRow> rows;
    for (const auto& c : cases) {
        SpecialCaseRow row;
        row.geometry = c.d == 0.0 ? "single" : "double";
        row.d = c.d;
        row.pol_name = c.pol_name;
        row.pol = c.pol;
        row.zeta0 = c.zeta0;
        row.f_reference = c.expected;
        const Geometry g = c.d == 0.0 ? Geometry{SingleMirror{c.zeta0}}
                                      : Geometry{DoubleMirror{c.d, c.zeta0}};
        try {
            row.f_computed = geometric_factor(g, c.pol).f_value;
            row.abs_err = std::abs(row.f_computed - row.f_reference);
        } catch (const ImageSumError& e) {
            row.f_computed = e.partial().difference();
            row.abs_err = std::abs(row.f_computed - row.f_reference);
        }
        row.pass = row.abs_err < kSpecialCaseTol;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mirrorcoh
