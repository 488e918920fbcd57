#pragma once

// Parsing and serialization of joint distributions.
//
// TSV: first line holds whitespace-separated variable names followed by the
// literal column `p`; every following line is one state (non-negative
// integers) and its probability. `#` starts a comment. The target is the last
// column unless overridden. Alphabet sizes are inferred from the states.
//
// JSON: object with `variables` (list of {name, cardinality, role}) and
// `states` (list of {state: [ints], p: real}).

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "infodecomp/joint_distribution.hpp"

namespace infodecomp {

enum class TableFormat { tsv, json };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseOptions {
    // Strict mode rejects probability sums outside [1-1e-6, 1+1e-6]; lenient
    // mode renormalizes and records a warning.
    bool strict = true;
    std::optional<std::string> target;  // overrides the default target column
    std::size_t max_states = kDefaultStateCap;
};

struct ParseResult {
    JointDistribution distribution;
    std::vector<std::string> warnings;
};

ParseResult parse_distribution(std::istream& in, TableFormat format,
                               const ParseOptions& options = {});

void write_tsv(std::ostream& out, const JointDistribution& d);

nlohmann::json distribution_to_json(const JointDistribution& d);

}  // namespace infodecomp
