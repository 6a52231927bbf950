// run.cpp — Subcommand dispatch

#include "run.hpp"

#include <algorithm>
#include <ostream>

namespace mirrorcoh::cli {

namespace {

GeometryFamily family_of(const Geometry& g) {
    if (const auto* dm = std::get_if<DoubleMirror>(&g)) return GeometryFamily::cavity(dm->d);
    return GeometryFamily::single();
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.print_config) {
        out << render_settings(cfg);
        return kExitOk;
    }
    try {
        switch (cfg.subcommand) {
        case Subcommand::sweep: {
            SweepConfig sc;
            sc.geometry = cfg.geometry;
            sc.pol = cfg.pol;
            sc.n_bars = cfg.n_bars;
            sc.q_grid = cfg.q_grid;
            sc.measures = cfg.measures;
            sc.atom = cfg.atom;
            sc.tol = cfg.tol;
            emit(sweep_table(sweep_coherence(sc), cfg.columns), cfg.format, cfg.out, out);
            return kExitOk;
        }
        case Subcommand::rate_map: {
            const auto grid = uniform_grid(cfg.z_min, cfg.z_max, cfg.z_points);
            const auto rows = rate_profile(family_of(cfg.geometry), cfg.pol, grid, cfg.tol);
            emit(rate_table(rows), cfg.format, cfg.out, out);
            const auto bad = std::count_if(rows.begin(), rows.end(),
                                           [](const RatePoint& p) { return !p.converged; });
            if (bad > 0) {
                err << "rate-map: " << bad << " point(s) did not converge\n";
                return kExitRuntime;
            }
            return kExitOk;
        }
        case Subcommand::optimize: {
            const auto r = optimize_position(family_of(cfg.geometry), cfg.pol, cfg.z_min, cfg.z_max,
                                             cfg.tol);
            emit(optimize_table(r), cfg.format, cfg.out, out);
            return kExitOk;
        }
        case Subcommand::table: {
            const auto rows = special_case_table();
            emit(special_case_csv_table(rows), cfg.format, cfg.out, out);
            const auto bad = std::count_if(rows.begin(), rows.end(),
                                           [](const SpecialCaseRow& r) { return !r.pass; });
            if (bad > 0) {
                err << "table: " << bad << " row(s) exceed tolerance " << kSpecialCaseTol << "\n";
                return kExitRuntime;
            }
            return kExitOk;
        }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitRuntime;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const auto parsed = parse_config(argc, argv);
    if (!parsed.config) {
        (parsed.exit_code == kExitOk ? out : err) << parsed.message;
        return parsed.exit_code;
    }
    return run(*parsed.config, out, err);
}

}  // namespace mirrorcoh::cli
