#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace chains::cli {

/// Malformed command line. The CLI maps this to exit code 1; domain failures
/// (chains::ValidationError) map to exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct HelpRequested {
    std::string text;
};

struct CountCmd {
    std::string points_file;
    std::vector<double> deltas;
    std::string method = "dfs";  // dfs | brute | walk
    double tol = 1e-9;
    int threads = 1;
    std::string format = "json";  // json | csv
};

struct ConstructCmd {
    std::string family;
    std::int64_t n = 0;
    int k = -1;  // -1: family default (hinge)
    double delta1 = 0.0;
    std::optional<double> delta2;
    std::string out;  // empty: full JSON to stdout
};

struct BoundsCmd {
    int k = 0;
    std::optional<int> kmax;
    int dim = 2;
    std::string u_exp = "4/3";
    std::string format = "json";
};

struct ExperimentCmd {
    std::string family;
    int k = -1;
    std::vector<std::int64_t> sizes;
    double delta1 = 0.0;
    std::optional<double> delta2;
    std::string out;
};

struct RichCmd {
    std::string points_file;
    double delta = 0.0;
    std::vector<std::int64_t> r_values;
    double tol = 1e-9;
    std::string format = "json";
};

using CommandSpec = std::variant<CountCmd, ConstructCmd, BoundsCmd, ExperimentCmd, RichCmd>;

/// Parses argv (without the program name) into a validated spec.
/// Throws UsageError on bad flags or values, HelpRequested for --help.
CommandSpec parse_args(const std::vector<std::string>& args);

/// Executes a spec, writing one JSON (or CSV) document to `out`.
/// Returns 0; domain failures escape as chains::ValidationError.
int run(const CommandSpec& spec, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, map errors to exit codes 0/1/2.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chains::cli
