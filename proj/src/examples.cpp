#include "infodecomp/examples.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace infodecomp {

namespace {

JointDistribution make(std::vector<int> cardinalities,
                       const std::vector<std::vector<int>>& support) {
    std::vector<VariableSpec> vars;
    int n = static_cast<int>(cardinalities.size()) - 1;
    for (int i = 0; i < n; ++i)
        vars.push_back({"X" + std::to_string(i + 1), cardinalities[i], VarRole::input});
    vars.push_back({"Y", cardinalities.back(), VarRole::target});
    std::vector<std::pair<std::vector<int>, double>> states;
    for (const auto& s : support) states.emplace_back(s, 1.0 / support.size());
    return JointDistribution::from_states(std::move(vars), states);
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

}  // namespace

const std::vector<ExampleInfo>& example_catalog() {
    static const std::vector<ExampleInfo> catalog = {
        {"rdn", 2, "both inputs carry the same single bit about Y"},
        {"xor", 2, "Y is the exclusive-or of two uniform bits"},
        {"2bitcopy", 2, "Y is the pair (X1, X2) of two uniform bits"},
        {"and", 2, "Y is the logical AND of two uniform bits"},
        {"synrdn", 2, "independent combination of Rdn and Xor"},
        {"parity", 3, "Y is the parity of three uniform bits"},
        {"xormulticoal", 3, "any two inputs determine Y, any single one says nothing"},
        {"rboj", 3, "pairwise-XOR inputs with Y a one-to-one copy of them"},
        {"threewayand", 3, "Y is the logical AND of three uniform bits"},
    };
    return catalog;
}

JointDistribution example_distribution(std::string_view name) {
    std::string key = lower(name);
    if (key == "rdn") return make({2, 2, 2}, {{0, 0, 0}, {1, 1, 1}});
    if (key == "xor") return make({2, 2, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    if (key == "2bitcopy") return make({2, 2, 4}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}, {1, 1, 3}});
    if (key == "and") return make({2, 2, 2}, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
    if (key == "synrdn")
        return make({4, 4, 4}, {{0, 0, 0},
                                {0, 1, 1},
                                {1, 0, 1},
                                {1, 1, 0},
                                {2, 2, 2},
                                {2, 3, 3},
                                {3, 2, 3},
                                {3, 3, 2}});
    if (key == "parity")
        return make({2, 2, 2, 2}, {{0, 0, 0, 0},
                                   {0, 0, 1, 1},
                                   {0, 1, 0, 1},
                                   {0, 1, 1, 0},
                                   {1, 0, 0, 1},
                                   {1, 0, 1, 0},
                                   {1, 1, 0, 0},
                                   {1, 1, 1, 1}});
    if (key == "xormulticoal")
        return make({6, 4, 7, 2}, {{4, 0, 4, 0},
                                   {0, 2, 2, 0},
                                   {1, 1, 0, 0},
                                   {5, 3, 6, 0},
                                   {5, 1, 4, 1},
                                   {1, 3, 2, 1},
                                   {0, 0, 0, 1},
                                   {4, 2, 6, 1}});
    if (key == "rboj")
        return make({2, 2, 2, 4}, {{0, 0, 0, 0}, {0, 1, 1, 1}, {1, 0, 1, 2}, {1, 1, 0, 3}});
    if (key == "threewayand")
        return make({2, 2, 2, 2}, {{0, 0, 0, 0},
                                   {0, 0, 1, 0},
                                   {0, 1, 0, 0},
                                   {0, 1, 1, 0},
                                   {1, 0, 0, 0},
                                   {1, 0, 1, 0},
                                   {1, 1, 0, 0},
                                   {1, 1, 1, 1}});
    throw std::invalid_argument("unknown example: " + std::string(name));
}

}  // namespace infodecomp
