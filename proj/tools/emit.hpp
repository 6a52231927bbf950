// emit.hpp — Tabular CSV/JSON output for the mirrorcoh tool

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mirrorcoh/scenarios.hpp"

namespace mirrorcoh::cli {

enum class OutputFormat { csv, json };

using Cell = std::variant<double, std::int64_t, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Doubles print with 12 significant digits; NaN as "nan", infinities as "inf"/"-inf".
std::string format_number(double x);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

/// Writes to stdout when destination is "-", otherwise to a temporary file
/// beside the destination that is then renamed over it. Throws OutputError
/// naming the path on failure.
void write_output(const std::string& text, const std::string& destination, std::ostream& stdout_stream);

void emit(const Table& table, OutputFormat format, const std::string& destination,
          std::ostream& stdout_stream);

/// Header plus rows of raw field strings. Minimal: no quoting support, which
/// the emitted tables never need.
struct CsvData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const;
};
CsvData parse_csv(const std::string& text);

inline const std::vector<std::string> kSweepColumns = {
    "n_bar", "q", "gamma0_tau", "c_l1", "c_re", "rho11", "rho12_abs"};

Table sweep_table(const std::vector<CoherenceCurvePoint>& rows,
                  const std::vector<std::string>& columns);
Table rate_table(const std::vector<RatePoint>& rows);
Table optimize_table(const OptimizeResult& result);
Table special_case_csv_table(const std::vector<SpecialCaseRow>& rows);

}  // namespace mirrorcoh::cli
