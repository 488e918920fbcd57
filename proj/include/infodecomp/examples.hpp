#pragma once

// Built-in example distributions, state-for-state as published.

#include <string>
#include <string_view>
#include <vector>

#include "infodecomp/joint_distribution.hpp"

namespace infodecomp {

struct ExampleInfo {
    std::string name;
    int input_count = 0;
    std::string description;
};

// All nine built-ins in stable order (two-input examples first).
const std::vector<ExampleInfo>& example_catalog();

// Case-insensitive lookup; throws std::invalid_argument for unknown names.
JointDistribution example_distribution(std::string_view name);

}  // namespace infodecomp
