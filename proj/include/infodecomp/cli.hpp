#pragma once

// Command-line front end. `run` executes a fully resolved configuration;
// `run_command_line` parses argv first. Both write results to `out`,
// diagnostics to `err`, and return a process exit status.

#include <iosfwd>
#include <optional>
#include <string>

#include "infodecomp/io.hpp"

namespace infodecomp {

enum class Subcommand { decompose, constraint_info, lattice, oracle_check, examples };
enum class OutputMode { table, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitOracleMismatch = 4;

struct RunConfig {
    Subcommand subcommand = Subcommand::decompose;

    // Exactly one of these for the commands that read a distribution.
    std::string input_path;
    std::string example;

    TableFormat format = TableFormat::tsv;
    std::optional<std::string> target;
    double tolerance = 1e-10;
    int max_sweeps = 100000;
    LogBase base = LogBase::two;
    OutputMode output = OutputMode::table;
    bool strict = true;

    int lattice_inputs = 2;               // `lattice`
    std::string node;                     // `constraint-info` facet notation
    double oracle_tolerance = 1e-9;       // `oracle-check` pass/fail threshold
    std::optional<int> input_filter;      // `examples` arity filter
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infodecomp
