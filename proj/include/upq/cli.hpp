#pragma once

#include "upq/model.hpp"
#include "upq/rational.hpp"
#include "upq/walls.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace upq::cli {

enum class Command { toledo, mw, walls, chambers, certify, selftest };
enum class OutputFormat { json, csv };

/// Missing, malformed or contradictory flags. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `--help` was requested; carries the rendered help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::toledo;
    std::optional<HitchinPairType> type;  // absent only for selftest
    std::optional<std::int64_t> genus;
    std::optional<GeometryContext> ctx;
    std::optional<Rational> alpha;
    std::optional<AlphaInterval> interval;
    std::optional<HiggsRankPair> ranks;
    bool mw_filter = false;
    OutputFormat output_format = OutputFormat::json;
    std::optional<std::string> output_path;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
};

constexpr int exit_ok = 0;
constexpr int exit_engine_error = 1;
constexpr int exit_usage = 2;

/// Name of the environment variable holding the default output format.
inline constexpr const char* format_env_var = "UPQ_FORMAT";

/// Parses the arguments after the program name. `default_format` is the
/// value of UPQ_FORMAT, if set. Throws UsageError or HelpRequested.
RunConfig parse_args(const std::vector<std::string>& args,
                     const std::optional<std::string>& default_format = std::nullopt);

/// Renders the report for a validated config. Engine errors propagate.
std::string render(const RunConfig& config);

/// Runs the command, writing the report to `out` or config.output_path and
/// diagnostics to `err`. Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Whole-program entry: parse, run, map failures onto exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upq::cli
