#include "infodecomp/joint_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace infodecomp {

namespace {

double log_scale(LogBase base) {
    return base == LogBase::two ? 1.0 / std::log(2.0) : 1.0;
}

}  // namespace

JointDistribution::JointDistribution(std::vector<VariableSpec> variables,
                                     std::vector<double> table, std::size_t max_states)
    : variables_(std::move(variables)), table_(std::move(table)) {
    if (variables_.empty()) throw std::invalid_argument("distribution needs at least one variable");

    std::set<std::string> names;
    int targets = 0;
    std::size_t states = 1;
    for (const auto& v : variables_) {
        if (v.cardinality < 1) throw std::invalid_argument("cardinality of " + v.name + " must be >= 1");
        if (!names.insert(v.name).second)
            throw std::invalid_argument("duplicate variable name: " + v.name);
        if (v.role == VarRole::target) ++targets;
        if (states > max_states / static_cast<std::size_t>(v.cardinality) &&
            states * static_cast<std::size_t>(v.cardinality) > max_states)
            throw std::invalid_argument("state space exceeds cap of " + std::to_string(max_states) +
                                        " states");
        states *= static_cast<std::size_t>(v.cardinality);
    }
    if (targets > 1) throw std::invalid_argument("at most one variable may be the target");
    if (variables_.size() >= 32) throw std::invalid_argument("too many variables for VarSet masks");
    if (table_.size() != states)
        throw std::invalid_argument("table length does not match the state space");

    strides_.assign(variables_.size(), 1);
    for (int i = variable_count() - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * static_cast<std::size_t>(variables_[i + 1].cardinality);

    double sum = 0.0;
    for (double p : table_) {
        if (!std::isfinite(p)) throw std::invalid_argument("non-finite probability entry");
        if (p < 0.0) throw std::invalid_argument("negative probability entry");
        sum += p;
    }
    if (sum <= 0.0) throw std::invalid_argument("probabilities sum to zero");
    // The single renormalization step; callers enforce stricter sum tolerances.
    for (double& p : table_) p /= sum;
}

JointDistribution JointDistribution::from_states(
    std::vector<VariableSpec> variables,
    const std::vector<std::pair<std::vector<int>, double>>& states, std::size_t max_states) {
    std::size_t total = 1;
    for (const auto& v : variables) {
        if (v.cardinality < 1) throw std::invalid_argument("cardinality must be >= 1");
        if (total > max_states / static_cast<std::size_t>(v.cardinality) &&
            total * static_cast<std::size_t>(v.cardinality) > max_states)
            throw std::invalid_argument("state space exceeds cap");
        total *= static_cast<std::size_t>(v.cardinality);
    }
    std::vector<double> table(total, 0.0);
    std::vector<bool> seen(total, false);
    for (const auto& [state, p] : states) {
        if (state.size() != variables.size())
            throw std::invalid_argument("state arity does not match the variable list");
        std::size_t idx = 0;
        for (std::size_t i = 0; i < state.size(); ++i) {
            if (state[i] < 0 || state[i] >= variables[i].cardinality)
                throw std::invalid_argument("state value out of alphabet bounds for " +
                                            variables[i].name);
            idx = idx * static_cast<std::size_t>(variables[i].cardinality) +
                  static_cast<std::size_t>(state[i]);
        }
        if (seen[idx]) throw std::invalid_argument("duplicate state in input");
        seen[idx] = true;
        table[idx] = p;
    }
    return JointDistribution(std::move(variables), std::move(table), max_states);
}

std::size_t JointDistribution::rank(const std::vector<int>& state) const {
    if (state.size() != variables_.size())
        throw std::invalid_argument("state arity does not match the variable list");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (state[i] < 0 || state[i] >= variables_[i].cardinality)
            throw std::invalid_argument("state value out of alphabet bounds");
        idx += static_cast<std::size_t>(state[i]) * strides_[i];
    }
    return idx;
}

std::vector<int> JointDistribution::unrank(std::size_t index) const {
    std::vector<int> state(variables_.size());
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        state[i] = static_cast<int>(index / strides_[i]) % variables_[i].cardinality;
    }
    return state;
}

int JointDistribution::digit(std::size_t index, int var) const {
    return static_cast<int>(index / strides_[var]) % variables_[var].cardinality;
}

int JointDistribution::find_variable(std::string_view name) const {
    for (int i = 0; i < variable_count(); ++i)
        if (variables_[i].name == name) return i;
    return -1;
}

int JointDistribution::target_index() const {
    for (int i = 0; i < variable_count(); ++i)
        if (variables_[i].role == VarRole::target) return i;
    return -1;
}

VarSet JointDistribution::input_set() const {
    VarSet s = 0;
    for (int i = 0; i < variable_count(); ++i)
        if (variables_[i].role == VarRole::input) s |= VarSet(1) << i;
    return s;
}

JointDistribution JointDistribution::marginal(VarSet keep) const {
    if (keep == 0) throw std::invalid_argument("marginal over the empty variable set");
    if (keep >= (VarSet(1) << variables_.size()))
        throw std::invalid_argument("variable set out of range");
    if (keep == full_set()) return *this;

    std::vector<VariableSpec> vars;
    std::vector<int> kept;
    for (int i = 0; i < variable_count(); ++i) {
        if (keep >> i & 1) {
            vars.push_back(variables_[i]);
            kept.push_back(i);
        }
    }
    std::size_t sub_states = 1;
    std::vector<std::size_t> sub_strides(kept.size());
    for (int i = static_cast<int>(kept.size()) - 1; i >= 0; --i) {
        sub_strides[i] = sub_states;
        sub_states *= static_cast<std::size_t>(vars[i].cardinality);
    }
    std::vector<double> out(sub_states, 0.0);
    for (std::size_t idx = 0; idx < table_.size(); ++idx) {
        std::size_t sub = 0;
        for (std::size_t k = 0; k < kept.size(); ++k)
            sub += static_cast<std::size_t>(digit(idx, kept[k])) * sub_strides[k];
        out[sub] += table_[idx];
    }
    return JointDistribution(std::move(vars), std::move(out));
}

double JointDistribution::entropy(LogBase base) const {
    double h = 0.0;
    for (double p : table_)
        if (p > 0.0) h -= p * std::log(p);
    return h * log_scale(base);
}

double kl_divergence(const JointDistribution& p, const JointDistribution& q, LogBase base) {
    if (p.variable_count() != q.variable_count() || p.state_count() != q.state_count())
        throw std::invalid_argument("KL divergence needs identical variable lists");
    for (int i = 0; i < p.variable_count(); ++i) {
        if (p.variable(i).name != q.variable(i).name ||
            p.variable(i).cardinality != q.variable(i).cardinality)
            throw std::invalid_argument("KL divergence needs identical variable lists");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.state_count(); ++i) {
        double pi = p.probability(i), qi = q.probability(i);
        if (pi > 1e-12 && qi < 1e-15)
            throw AbsoluteContinuityError("p has mass where q vanishes (state " +
                                          std::to_string(i) + ")");
        if (pi > 0.0 && qi > 0.0) sum += pi * std::log(pi / qi);
    }
    return std::max(0.0, sum * (base == LogBase::two ? 1.0 / std::log(2.0) : 1.0));
}

double mutual_information(const JointDistribution& d, VarSet a, VarSet b, LogBase base) {
    if (a == 0 || b == 0) throw std::invalid_argument("mutual information over empty sets");
    if (a & b) throw std::invalid_argument("mutual information needs disjoint variable sets");
    JointDistribution pab = d.marginal(a | b);
    JointDistribution pa = d.marginal(a);
    JointDistribution pb = d.marginal(b);

    // Positions of the a- and b-variables inside pab's (order-preserving) list.
    std::vector<int> a_pos, b_pos;
    int k = 0;
    for (int i = 0; i < d.variable_count(); ++i) {
        if (((a | b) >> i & 1) == 0) continue;
        if (a >> i & 1)
            a_pos.push_back(k);
        else
            b_pos.push_back(k);
        ++k;
    }
    double sum = 0.0;
    const double scale = base == LogBase::two ? 1.0 / std::log(2.0) : 1.0;
    for (std::size_t idx = 0; idx < pab.state_count(); ++idx) {
        double pj = pab.probability(idx);
        if (pj <= 0.0) continue;
        std::vector<int> full = pab.unrank(idx);
        std::vector<int> sa, sb;
        for (int pos : a_pos) sa.push_back(full[pos]);
        for (int pos : b_pos) sb.push_back(full[pos]);
        double qa = pa.probability(pa.rank(sa));
        double qb = pb.probability(pb.rank(sb));
        sum += pj * std::log(pj / (qa * qb));
    }
    return std::max(0.0, sum * scale);
}

JointDistribution product(const JointDistribution& d1, const JointDistribution& d2) {
    if (d1.variable_count() != d2.variable_count())
        throw std::invalid_argument("product needs equal variable counts");
    if ((d1.target_index() < 0) != (d2.target_index() < 0))
        throw std::invalid_argument("product needs targets in both systems or neither");
    if (d1.target_index() != d2.target_index())
        throw std::invalid_argument("product pairs variables by position; targets must align");

    std::vector<VariableSpec> vars;
    for (int i = 0; i < d1.variable_count(); ++i) {
        const auto& v1 = d1.variable(i);
        const auto& v2 = d2.variable(i);
        if (v1.role != v2.role) throw std::invalid_argument("variable roles must align by position");
        vars.push_back({v1.name, v1.cardinality * v2.cardinality, v1.role});
    }
    std::size_t n1 = d1.state_count(), n2 = d2.state_count();
    std::vector<double> table(n1 * n2, 0.0);
    for (std::size_t i = 0; i < n1; ++i) {
        double p1 = d1.probability(i);
        if (p1 == 0.0) continue;
        for (std::size_t j = 0; j < n2; ++j) {
            double pj = p1 * d2.probability(j);
            if (pj == 0.0) continue;
            std::size_t idx = 0;
            for (int v = 0; v < d1.variable_count(); ++v) {
                int composite = d1.digit(i, v) * d2.variable(v).cardinality + d2.digit(j, v);
                idx = idx * static_cast<std::size_t>(vars[v].cardinality) +
                      static_cast<std::size_t>(composite);
            }
            table[idx] = pj;
        }
    }
    return JointDistribution(std::move(vars), std::move(table));
}

JointDistribution copy_target(const JointDistribution& d_inputs) {
    if (d_inputs.target_index() >= 0)
        throw std::invalid_argument("copy_target input must not already have a target");
    std::size_t n = d_inputs.state_count();
    std::vector<VariableSpec> vars = d_inputs.variables();
    std::string target_name = "Y";
    while (std::any_of(vars.begin(), vars.end(),
                       [&](const VariableSpec& v) { return v.name == target_name; }))
        target_name += "'";
    vars.push_back({target_name, static_cast<int>(n), VarRole::target});

    std::vector<double> table(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) table[i * n + i] = d_inputs.probability(i);
    return JointDistribution(std::move(vars), std::move(table));
}

JointDistribution reorder_variables(const JointDistribution& d, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != d.variable_count())
        throw std::invalid_argument("reorder needs a full permutation");
    std::vector<bool> used(order.size(), false);
    std::vector<VariableSpec> vars;
    for (int old : order) {
        if (old < 0 || old >= d.variable_count() || used[old])
            throw std::invalid_argument("invalid permutation");
        used[old] = true;
        vars.push_back(d.variable(old));
    }
    std::vector<double> table(d.state_count(), 0.0);
    for (std::size_t idx = 0; idx < d.state_count(); ++idx) {
        std::size_t out = 0;
        for (std::size_t k = 0; k < order.size(); ++k)
            out = out * static_cast<std::size_t>(vars[k].cardinality) +
                  static_cast<std::size_t>(d.digit(idx, order[k]));
        table[out] = d.probability(idx);
    }
    return JointDistribution(std::move(vars), std::move(table));
}

JointDistribution permute_inputs(const JointDistribution& d, const std::vector<int>& perm) {
    std::vector<int> inputs;
    for (int i = 0; i < d.variable_count(); ++i)
        if (d.variable(i).role == VarRole::input) inputs.push_back(i);
    if (perm.size() != inputs.size())
        throw std::invalid_argument("permutation size does not match input count");
    std::vector<int> order;
    std::size_t next_input = 0;
    for (int i = 0; i < d.variable_count(); ++i) {
        if (d.variable(i).role == VarRole::input)
            order.push_back(inputs.at(perm.at(next_input++)));
        else
            order.push_back(i);
    }
    return reorder_variables(d, order);
}

JointDistribution with_target_last(const JointDistribution& d) {
    int t = d.target_index();
    if (t < 0) throw std::invalid_argument("distribution has no target variable");
    if (t == d.variable_count() - 1) return d;
    std::vector<int> order;
    for (int i = 0; i < d.variable_count(); ++i)
        if (i != t) order.push_back(i);
    order.push_back(t);
    return reorder_variables(d, order);
}

}  // namespace infodecomp
