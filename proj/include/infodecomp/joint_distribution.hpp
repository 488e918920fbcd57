#pragma once

// Dense joint probability distributions over named finite-alphabet variables.
//
// Conventions used throughout the library:
//   * tables are row-major over the variable list (last variable fastest),
//   * 0*log(0) := 0 and 0/0 := 0,
//   * logarithms are base 2 unless LogBase::natural is requested.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace infodecomp {

enum class VarRole { input, target };
enum class LogBase { two, natural };

// Subset of variable positions, one bit per position in the variable list.
using VarSet = std::uint32_t;

inline int varset_count(VarSet s) { return __builtin_popcount(s); }

struct VariableSpec {
    std::string name;
    int cardinality = 2;
    VarRole role = VarRole::input;
};

// Raised when D_KL(p||q) is requested but p puts mass where q has none.
// For split distributions this signals IPF failure or inconsistent inputs.
struct AbsoluteContinuityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default cap on the dense state space; projection sweeps the full table.
inline constexpr std::size_t kDefaultStateCap = 10'000'000;

class JointDistribution {
public:
    // Takes a dense table (one entry per state); entries must be finite and
    // non-negative with a positive sum. The constructor renormalizes exactly
    // once, so the stored table always sums to 1.
    JointDistribution(std::vector<VariableSpec> variables, std::vector<double> table,
                      std::size_t max_states = kDefaultStateCap);

    // Builds the dense table from explicit (state, probability) pairs;
    // unlisted states get probability 0, duplicate states are an error.
    static JointDistribution from_states(std::vector<VariableSpec> variables,
                                         const std::vector<std::pair<std::vector<int>, double>>& states,
                                         std::size_t max_states = kDefaultStateCap);

    const std::vector<VariableSpec>& variables() const { return variables_; }
    const VariableSpec& variable(int i) const { return variables_.at(i); }
    int variable_count() const { return static_cast<int>(variables_.size()); }
    const std::vector<double>& table() const { return table_; }
    std::size_t state_count() const { return table_.size(); }

    double probability(std::size_t index) const { return table_[index]; }
    std::size_t rank(const std::vector<int>& state) const;
    std::vector<int> unrank(std::size_t index) const;
    int digit(std::size_t index, int var) const;

    // -1 if the name is unknown.
    int find_variable(std::string_view name) const;
    // Position of the unique target variable, -1 if none.
    int target_index() const;
    VarSet input_set() const;
    VarSet full_set() const { return static_cast<VarSet>((1u << variables_.size()) - 1u); }

    // Sums out all variables not in `keep`; variable order is preserved.
    JointDistribution marginal(VarSet keep) const;

    double entropy(LogBase base = LogBase::two) const;

private:
    std::vector<VariableSpec> variables_;
    std::vector<double> table_;
    std::vector<std::size_t> strides_;
};

// Sum over states of p(z) log(p(z)/q(z)). Requires identical variable lists.
// Entries of q below 1e-15 paired with p above 1e-12 raise
// AbsoluteContinuityError instead of poisoning the sum with infinities.
double kl_divergence(const JointDistribution& p, const JointDistribution& q,
                     LogBase base = LogBase::two);

// I(a;b) computed as D_KL(p(a,b) || p(a) p(b)); a and b must be disjoint and
// non-empty.
double mutual_information(const JointDistribution& d, VarSet a, VarSet b,
                          LogBase base = LogBase::two);

// Independent product over paired variables: both systems need the same input
// count, and either both or neither carry a target. Composite variable i has
// alphabet |X'_i| * |X''_i| with value x' * |X''_i| + x''.
JointDistribution product(const JointDistribution& d1, const JointDistribution& d2);

// Appends a target Y over the input product space with p(x, y) = p(x) * [y = x].
JointDistribution copy_target(const JointDistribution& d_inputs);

// Reorders the variable list; order[k] is the old position of new position k.
JointDistribution reorder_variables(const JointDistribution& d, const std::vector<int>& order);

// Applies a permutation to the input variables only; perm[k] is the old input
// position placed at input position k. The target keeps its place.
JointDistribution permute_inputs(const JointDistribution& d, const std::vector<int>& perm);

// Moves the (unique) target variable to the last position.
JointDistribution with_target_last(const JointDistribution& d);

}  // namespace infodecomp
