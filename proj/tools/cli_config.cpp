// cli_config.cpp — Command-line and config-file parsing

#include "cli_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"

namespace mirrorcoh::cli {

namespace {

struct SubcommandSpec {
    Subcommand sub;
    const char* name;
    const char* description;
    std::vector<std::string> keys;
};

const std::vector<SubcommandSpec>& subcommand_specs() {
    static const std::vector<SubcommandSpec> specs = {
        {Subcommand::sweep, "sweep", "Coherence versus the noise parameter q",
         {"geometry", "z0", "d", "pol", "nbar", "theta", "kelvin", "omega0", "gamma0", "omega-eff",
          "points", "q-min", "q-max", "measures", "columns", "tol", "format", "out"}},
        {Subcommand::rate_map, "rate-map", "Geometric factor F versus atom position",
         {"geometry", "d", "pol", "points", "z-min", "z-max", "tol", "format", "out"}},
        {Subcommand::optimize, "optimize", "Atom position minimizing F",
         {"geometry", "d", "pol", "z-min", "z-max", "tol", "format", "out"}},
        {Subcommand::table, "table", "Closed-form special-case rate ratios", {"format", "out"}},
    };
    return specs;
}

const std::map<std::string, std::string>& key_help() {
    static const std::map<std::string, std::string> help = {
        {"geometry", "free | single | double"},
        {"z0", "atom distance from the z = 0 mirror, units c/omega0"},
        {"d", "mirror separation, units c/omega0"},
        {"pol", "polarization weights ax,ay,az (sum to 1)"},
        {"nbar", "comma-separated thermal occupations"},
        {"theta", "comma-separated k_B T / (hbar omega0) values"},
        {"kelvin", "comma-separated temperatures in K (needs --omega0)"},
        {"omega0", "transition frequency in rad/s (with --kelvin)"},
        {"gamma0", "free-space emission rate (default 1)"},
        {"omega-eff", "effective level spacing in units of omega0 (default 1)"},
        {"points", "grid points (q for sweep, zeta0 for rate-map)"},
        {"q-min", "first q (default 0)"},
        {"q-max", "last q, < 1 (default 0.995)"},
        {"z-min", "lower end of the zeta0 interval"},
        {"z-max", "upper end of the zeta0 interval"},
        {"measures", "l1,re or a subset"},
        {"columns", "output columns for sweep"},
        {"tol", "image-sum tolerance (default 1e-10)"},
        {"format", "csv | json"},
        {"out", "output path, - for stdout"},
    };
    return help;
}

std::string flag_of(const std::string& key) { return "--" + key; }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) out.push_back(trim(item));
    return out;
}

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(flag_of(key), "expected a finite number, got '" + text + "'");
    }
}

std::vector<double> parse_double_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) out.push_back(parse_double(key, item));
    if (out.empty()) throw UsageError(flag_of(key), "expected at least one value");
    return out;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
    const double v = parse_double(key, text);
    if (v < 1.0 || v != std::floor(v) || v > 1e8) {
        throw UsageError(flag_of(key), "expected a positive integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

std::string num17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string join_numbers(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += num17(xs[i]);
    }
    return out;
}

std::string field_to_flag(const std::string& field) {
    if (field == "geometry.zeta0") return "--z0";
    if (field == "geometry.d") return "--d";
    return "--pol";
}

const SubcommandSpec& spec_for(Subcommand sub) {
    for (const auto& s : subcommand_specs()) {
        if (s.sub == sub) return s;
    }
    throw std::logic_error("unknown subcommand");
}

}  // namespace

std::string subcommand_name(Subcommand s) { return spec_for(s).name; }

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& [key, _] : key_help()) k.push_back(key);
        return k;
    }();
    return keys;
}

std::map<std::string, std::string> parse_config_text(const std::string& text,
                                                     const std::string& origin) {
    std::map<std::string, std::string> out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    const auto& keys = known_keys();
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw UsageError(where, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw UsageError(where, "unknown key '" + key + "'");
        }
        out[key] = value;
    }
    return out;
}

RunConfig resolve(Subcommand sub, const std::map<std::string, std::string>& settings) {
    RunConfig cfg;
    cfg.subcommand = sub;
    auto get = [&](const std::string& key) -> std::optional<std::string> {
        if (auto it = settings.find(key); it != settings.end()) return it->second;
        return std::nullopt;
    };

    if (auto f = get("format")) {
        if (*f == "csv") cfg.format = OutputFormat::csv;
        else if (*f == "json") cfg.format = OutputFormat::json;
        else throw UsageError("--format", "expected csv or json, got '" + *f + "'");
    }
    if (auto o = get("out")) {
        if (o->empty()) throw UsageError("--out", "empty path");
        cfg.out = *o;
    }
    if (sub == Subcommand::table) return cfg;

    if (auto t = get("tol")) {
        cfg.tol = parse_double("tol", *t);
        if (!(cfg.tol > 0.0)) throw UsageError("--tol", "must be > 0");
    }

    if (auto p = get("pol")) {
        const auto w = parse_double_list("pol", *p);
        if (w.size() != 3) throw UsageError("--pol", "expected three weights ax,ay,az");
        cfg.pol = PolarizationWeights{w[0], w[1], w[2]};
        if (auto v = check_polarization(cfg.pol); !v.empty()) {
            throw UsageError("--pol", v.front().message);
        }
    }

    const std::string geometry =
        get("geometry").value_or(sub == Subcommand::sweep ? "free" : "single");
    const double z0 = get("z0") ? parse_double("z0", *get("z0")) : 0.0;
    if (geometry == "free") {
        if (sub != Subcommand::sweep) {
            throw UsageError("--geometry", subcommand_name(sub) + " needs single or double");
        }
        cfg.geometry = FreeSpace{};
    } else if (geometry == "single") {
        cfg.geometry = SingleMirror{z0};
    } else if (geometry == "double") {
        if (!get("d")) throw UsageError("--d", "required for the double geometry");
        cfg.geometry = DoubleMirror{parse_double("d", *get("d")), z0};
    } else {
        throw UsageError("--geometry", "expected free, single or double, got '" + geometry + "'");
    }
    if (auto v = check_geometry(cfg.geometry); !v.empty()) {
        throw UsageError(field_to_flag(v.front().field), v.front().message);
    }

    if (sub == Subcommand::sweep) {
        const int sources = (get("nbar") ? 1 : 0) + (get("theta") ? 1 : 0) + (get("kelvin") ? 1 : 0);
        if (sources > 1) throw UsageError("--nbar", "give only one of --nbar, --theta, --kelvin");
        if (get("omega0") && !get("kelvin")) throw UsageError("--omega0", "only valid with --kelvin");
        if (auto n = get("nbar")) {
            cfg.n_bars = parse_double_list("nbar", *n);
            for (double x : cfg.n_bars) {
                if (x < 0.0) throw UsageError("--nbar", "occupations must be >= 0");
            }
        } else if (auto t = get("theta")) {
            cfg.n_bars.clear();
            for (double th : parse_double_list("theta", *t)) {
                if (th < 0.0) throw UsageError("--theta", "must be >= 0");
                cfg.n_bars.push_back(occupation_from_theta(th).n_bar);
            }
        } else if (auto k = get("kelvin")) {
            if (!get("omega0")) throw UsageError("--kelvin", "needs --omega0");
            const double w0 = parse_double("omega0", *get("omega0"));
            if (!(w0 > 0.0)) throw UsageError("--omega0", "must be > 0");
            cfg.n_bars.clear();
            for (double temp : parse_double_list("kelvin", *k)) {
                if (temp < 0.0) throw UsageError("--kelvin", "must be >= 0");
                cfg.n_bars.push_back(occupation_from_kelvin(temp, w0).n_bar);
            }
        }

        if (auto g = get("gamma0")) cfg.atom.gamma0 = parse_double("gamma0", *g);
        if (!(cfg.atom.gamma0 > 0.0)) throw UsageError("--gamma0", "must be > 0");
        if (auto w = get("omega-eff")) cfg.atom.omega_eff = parse_double("omega-eff", *w);
        if (!(cfg.atom.omega_eff > 0.0)) throw UsageError("--omega-eff", "must be > 0");

        if (auto n = get("points")) cfg.q_grid.count = parse_count("points", *n);
        if (auto q = get("q-min")) cfg.q_grid.q_min = parse_double("q-min", *q);
        if (auto q = get("q-max")) cfg.q_grid.q_max = parse_double("q-max", *q);
        if (!(cfg.q_grid.q_min >= 0.0)) throw UsageError("--q-min", "must be >= 0");
        if (!(cfg.q_grid.q_max < 1.0)) throw UsageError("--q-max", "must be < 1");
        if (!(cfg.q_grid.q_min <= cfg.q_grid.q_max)) throw UsageError("--q-min", "must not exceed --q-max");

        if (auto m = get("measures")) {
            cfg.measures = Measures{false, false};
            for (const auto& item : split_list(*m)) {
                if (item == "l1") cfg.measures.l1 = true;
                else if (item == "re") cfg.measures.re = true;
                else throw UsageError("--measures", "unknown measure '" + item + "'");
            }
            if (!cfg.measures.l1 && !cfg.measures.re) {
                throw UsageError("--measures", "at least one measure required");
            }
        }
        if (auto c = get("columns")) {
            cfg.columns = split_list(*c);
            if (cfg.columns.empty()) throw UsageError("--columns", "no columns given");
            for (const auto& col : cfg.columns) {
                if (std::find(kSweepColumns.begin(), kSweepColumns.end(), col) == kSweepColumns.end()) {
                    throw UsageError("--columns", "unknown column '" + col + "'");
                }
                if ((col == "c_l1" && !cfg.measures.l1) || (col == "c_re" && !cfg.measures.re)) {
                    throw UsageError("--columns", "column '" + col + "' needs its measure requested");
                }
            }
        } else {
            cfg.columns.clear();
            for (const auto& col : kSweepColumns) {
                if (col == "c_l1" && !cfg.measures.l1) continue;
                if (col == "c_re" && !cfg.measures.re) continue;
                cfg.columns.push_back(col);
            }
        }
        return cfg;
    }

    // rate-map / optimize
    const bool cavity = std::holds_alternative<DoubleMirror>(cfg.geometry);
    const double d = cavity ? std::get<DoubleMirror>(cfg.geometry).d : 0.0;
    cfg.z_min = get("z-min") ? parse_double("z-min", *get("z-min")) : 0.0;
    cfg.z_max = get("z-max") ? parse_double("z-max", *get("z-max")) : (cavity ? d : 10.0);
    if (cfg.z_min < 0.0) throw UsageError("--z-min", "must be >= 0");
    if (cavity && cfg.z_max > d) throw UsageError("--z-max", "must not exceed --d");
    if (!(cfg.z_min < cfg.z_max)) throw UsageError("--z-min", "must be below --z-max");
    if (auto n = get("points")) cfg.z_points = parse_count("points", *n);
    return cfg;
}

std::string render_settings(const RunConfig& cfg) {
    std::ostringstream os;
    os << "# mirrorcoh " << subcommand_name(cfg.subcommand) << "\n";
    auto line = [&](const std::string& k, const std::string& v) { os << k << " = " << v << "\n"; };

    if (cfg.subcommand != Subcommand::table) {
        line("geometry", geometry_name(cfg.geometry));
        if (const auto* s = std::get_if<SingleMirror>(&cfg.geometry)) {
            if (cfg.subcommand == Subcommand::sweep) line("z0", num17(s->zeta0));
        } else if (const auto* dm = std::get_if<DoubleMirror>(&cfg.geometry)) {
            line("d", num17(dm->d));
            if (cfg.subcommand == Subcommand::sweep) line("z0", num17(dm->zeta0));
        }
        line("pol", join_numbers({cfg.pol.alpha_x, cfg.pol.alpha_y, cfg.pol.alpha_z}));
        line("tol", num17(cfg.tol));
    }
    if (cfg.subcommand == Subcommand::sweep) {
        line("nbar", join_numbers(cfg.n_bars));
        line("gamma0", num17(cfg.atom.gamma0));
        line("omega-eff", num17(cfg.atom.omega_eff));
        line("points", std::to_string(cfg.q_grid.count));
        line("q-min", num17(cfg.q_grid.q_min));
        line("q-max", num17(cfg.q_grid.q_max));
        std::string m;
        if (cfg.measures.l1) m = "l1";
        if (cfg.measures.re) m += m.empty() ? "re" : ",re";
        line("measures", m);
        std::string cols;
        for (const auto& c : cfg.columns) cols += (cols.empty() ? "" : ",") + c;
        line("columns", cols);
    } else if (cfg.subcommand != Subcommand::table) {
        line("z-min", num17(cfg.z_min));
        line("z-max", num17(cfg.z_max));
        if (cfg.subcommand == Subcommand::rate_map) line("points", std::to_string(cfg.z_points));
    }
    line("format", cfg.format == OutputFormat::csv ? "csv" : "json");
    line("out", cfg.out);
    return os.str();
}

ParseResult parse_config(int argc, const char* const* argv) {
    CLI::App app{"Coherence of a static two-level atom in a thermal field near perfect mirrors",
                 "mirrorcoh"};
    app.require_subcommand(1);

    const auto& specs = subcommand_specs();
    std::vector<std::map<std::string, std::string>> values(specs.size());
    std::vector<std::map<std::string, CLI::Option*>> options(specs.size());
    std::vector<CLI::App*> subs;
    std::string config_path;
    bool print_config = false;

    for (std::size_t i = 0; i < specs.size(); ++i) {
        auto* sc = app.add_subcommand(specs[i].name, specs[i].description);
        for (const auto& key : specs[i].keys) {
            options[i][key] = sc->add_option(flag_of(key), values[i][key], key_help().at(key));
        }
        sc->add_option("--config", config_path, "plain-text key = value file; flags override it");
        sc->add_flag("--print-config", print_config, "echo the resolved configuration and exit");
        subs.push_back(sc);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        app.exit(e, os, os);
        return {std::nullopt, e.get_exit_code() == 0 ? kExitOk : kExitUsage, os.str()};
    }

    std::size_t idx = 0;
    while (idx < subs.size() && !subs[idx]->parsed()) ++idx;
    const Subcommand sub = specs[idx].sub;

    try {
        std::map<std::string, std::string> settings;
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) throw UsageError("--config", "cannot read " + config_path);
            std::stringstream buf;
            buf << is.rdbuf();
            settings = parse_config_text(buf.str(), config_path);
        }
        for (const auto& [key, opt] : options[idx]) {
            if (opt->count() > 0) settings[key] = values[idx][key];
        }
        RunConfig cfg = resolve(sub, settings);
        cfg.print_config = print_config;
        return {cfg, kExitOk, ""};
    } catch (const UsageError& e) {
        return {std::nullopt, kExitUsage, std::string("usage error: ") + e.what() + "\n"};
    }
}

}  // namespace mirrorcoh::cli
