// cli_config.hpp — Run configuration for the mirrorcoh tool
//
// Every setting is a `key = value` pair; the same keys are accepted as
// `--key value` flags and in a plain-text config file (`--config path`).
// Flags override the file.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "emit.hpp"
#include "mirrorcoh/model.hpp"
#include "mirrorcoh/scenarios.hpp"

namespace mirrorcoh::cli {

enum class Subcommand { sweep, rate_map, optimize, table };

std::string subcommand_name(Subcommand s);

struct RunConfig {
    Subcommand subcommand{Subcommand::sweep};
    Geometry geometry{FreeSpace{}};
    PolarizationWeights pol{PolarizationWeights::parallel()};
    std::vector<double> n_bars{0.0};
    QGrid q_grid{};
    Measures measures{};
    std::vector<std::string> columns{kSweepColumns};
    AtomParams atom{};
    double tol{kDefaultSumTol};
    // rate-map / optimize
    double z_min{0.0};
    double z_max{0.0};
    std::size_t z_points{200};
    OutputFormat format{OutputFormat::csv};
    std::string out{"-"};
    bool print_config{false};
};

/// Bad flag, bad value or unknown config key. `flag` names the culprit.
class UsageError : public std::runtime_error {
public:
    UsageError(std::string flag, const std::string& message)
        : std::runtime_error(flag + ": " + message), flag_(std::move(flag)) {}

    const std::string& flag() const { return flag_; }

private:
    std::string flag_;
};

struct ParseResult {
    std::optional<RunConfig> config;  // empty when the run should stop early
    int exit_code{0};
    std::string message;               // help text or error
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Keys accepted on the command line and in config files.
const std::vector<std::string>& known_keys();

/// Parses `key = value` lines; '#' starts a comment. Throws UsageError on
/// unknown keys or malformed lines.
std::map<std::string, std::string> parse_config_text(const std::string& text,
                                                     const std::string& origin);

/// Converts resolved settings into a RunConfig; throws UsageError.
RunConfig resolve(Subcommand sub, const std::map<std::string, std::string>& settings);

/// Text accepted back by parse_config_text.
std::string render_settings(const RunConfig& cfg);

ParseResult parse_config(int argc, const char* const* argv);

}  // namespace mirrorcoh::cli
