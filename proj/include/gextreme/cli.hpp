#ifndef GEXTREME_CLI_HPP
#define GEXTREME_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace gextreme::cli {

enum class Command { tail, prob_set, rate, compare, simulate, diagnose };
enum class OutputFormat { csv, json };

/// Everything a single invocation needs; filled by parse_args or by hand
/// in tests. Per-command requirements are validated before any
/// computation runs.
struct CliConfig {
    Command command = Command::tail;
    std::int64_t n = 1000000;
    double x = 0.0;
    std::string set_text;
    double grid_lo = 0.0;
    double grid_hi = 5.0;
    double grid_step = 0.05;
    std::int64_t samples = 0;
    std::uint64_t seed = 42;
    OutputFormat format = OutputFormat::csv;
    int threads = 0;  // 0: library default (all cores)
};

/// Executes one command, writing results to `out` and a one-line message
/// to `err` on failure. Returns 0 on success, 2 on input errors, 1 on
/// internal errors.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// argv -> CliConfig -> run. Reads GEXTREME_THREADS for the worker cap.
int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

/// 10-significant-digit token used by both CSV and JSON emitters;
/// infinities spell "-inf"/"inf", negative zero normalizes to "0".
std::string fmt_g10(double v);

/// Natural log -> base-10 log (serialization-boundary conversion).
double nat_to_log10(double v);

} // namespace gextreme::cli

#endif
