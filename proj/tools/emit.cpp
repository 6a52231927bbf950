// emit.cpp — CSV/JSON serialization and atomic file output

#include "emit.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "json.hpp"

namespace mirrorcoh::cli {

namespace fs = std::filesystem;

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string cell_text(const Cell& c) {
    struct Text {
        std::string operator()(double x) const { return format_number(x); }
        std::string operator()(std::int64_t x) const { return std::to_string(x); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Text{}, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
    struct ToJson {
        nlohmann::ordered_json operator()(double x) const {
            if (!std::isfinite(x)) return nullptr;
            // Round through the CSV text so both formats carry the same value.
            return std::stod(format_number(x));
        }
        nlohmann::ordered_json operator()(std::int64_t x) const { return x; }
        nlohmann::ordered_json operator()(bool b) const { return b; }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    };
    return std::visit(ToJson{}, c);
}

}  // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_text(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
        arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
}

void write_output(const std::string& text, const std::string& destination,
                  std::ostream& stdout_stream) {
    if (destination == "-") {
        stdout_stream << text;
        stdout_stream.flush();
        return;
    }
    const fs::path target(destination);
    fs::path tmp = target;
    tmp += ".tmp-" + std::to_string(::getpid());
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw OutputError("cannot write " + destination + ": unable to open output file");
        os << text;
        os.flush();
        if (!os) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw OutputError("cannot write " + destination + ": write failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignore;
        fs::remove(tmp, ignore);
        throw OutputError("cannot write " + destination + ": " + ec.message());
    }
}

void emit(const Table& table, OutputFormat format, const std::string& destination,
          std::ostream& stdout_stream) {
    write_output(format == OutputFormat::csv ? to_csv(table) : to_json(table), destination,
                 stdout_stream);
}

std::size_t CsvData::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::out_of_range("no CSV column named " + name);
}

CsvData parse_csv(const std::string& text) {
    CsvData data;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (first) {
            data.header = std::move(fields);
            first = false;
        } else {
            data.rows.push_back(std::move(fields));
        }
    }
    return data;
}

Table sweep_table(const std::vector<CoherenceCurvePoint>& rows,
                  const std::vector<std::string>& columns) {
    Table t;
    t.columns = columns;
    for (const auto& p : rows) {
        std::vector<Cell> r;
        r.reserve(columns.size());
        for (const auto& c : columns) {
            if (c == "n_bar") r.emplace_back(p.n_bar);
            else if (c == "q") r.emplace_back(p.q);
            else if (c == "gamma0_tau") r.emplace_back(p.gamma0_tau);
            else if (c == "c_l1") r.emplace_back(p.c_l1);
            else if (c == "c_re") r.emplace_back(p.c_re);
            else if (c == "rho11") r.emplace_back(p.rho11);
            else if (c == "rho12_abs") r.emplace_back(p.rho12_abs);
            else throw std::invalid_argument("unknown sweep column " + c);
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

Table rate_table(const std::vector<RatePoint>& rows) {
    Table t;
    t.columns = {"zeta0", "f", "est_error", "converged"};
    for (const auto& p : rows) {
        t.rows.push_back({p.zeta0, p.f, p.est_error, p.converged});
    }
    return t;
}

Table optimize_table(const OptimizeResult& result) {
    Table t;
    t.columns = {"zeta_star", "f_star", "evaluations"};
    t.rows.push_back({result.zeta_star, result.f_star, static_cast<std::int64_t>(result.evaluations)});
    return t;
}

Table special_case_csv_table(const std::vector<SpecialCaseRow>& rows) {
    Table t;
    t.columns = {"geometry", "d", "pol", "zeta0", "f_computed", "f_paper", "abs_err", "pass"};
    for (const auto& r : rows) {
        t.rows.push_back({r.geometry, r.d, r.pol_name, r.zeta0, r.f_computed, r.f_reference,
                          r.abs_err, r.pass});
    }
    return t;
}

}  // namespace mirrorcoh::cli
