#include "infodecomp/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace infodecomp {

ConstraintSet::ConstraintSet(const JointDistribution& p, const ConstraintNode& node) {
    if (node.variable_count != p.variable_count())
        throw std::invalid_argument("constraint node is over a different variable count");
    VarSet covered = 0;
    for (VarSet f : node.facets) covered |= f;
    if (covered != p.full_set())
        throw std::invalid_argument("constraint node does not cover all variables");

    state_count_ = p.state_count();
    for (VarSet f : node.facets) {
        JointDistribution m = p.marginal(f);
        std::vector<int> map(p.state_count());
        // Facet state index of each full state, in the marginal's own order.
        std::vector<int> positions;
        for (int v = 0; v < p.variable_count(); ++v)
            if (f >> v & 1) positions.push_back(v);
        for (std::size_t idx = 0; idx < p.state_count(); ++idx) {
            std::size_t sub = 0;
            for (int v : positions)
                sub = sub * static_cast<std::size_t>(p.variable(v).cardinality) +
                      static_cast<std::size_t>(p.digit(idx, v));
            map[idx] = static_cast<int>(sub);
        }
        facets_.push_back(f);
        targets_.push_back(m.table());
        index_maps_.push_back(std::move(map));
    }
}

namespace {

// States that every member of the constraint polytope assigns zero, found by
// interval propagation over the per-cell equations sum_{z in cell} q(z) = b.
// Pinning them lets IPF converge geometrically; otherwise limits on the
// boundary (a zero not forced by any single cell, as in And-type targets) are
// approached only like 1/sweeps. Certification is conservative: a state is
// declared zero only when its upper bound falls below 1e-12, so genuine
// probabilities at that scale are the documented limit of this shortcut.
std::vector<char> certified_zero_states(const ConstraintSet& cs) {
    const std::size_t n = cs.state_count();
    std::vector<double> upper(n, 1.0), lower(n, 0.0);
    for (std::size_t f = 0; f < cs.facet_count(); ++f) {
        const auto& map = cs.index_map(f);
        const auto& target = cs.target(f);
        for (std::size_t z = 0; z < n; ++z) upper[z] = std::min(upper[z], target[map[z]]);
    }
    std::vector<double> cell_upper, cell_lower;
    bool changed = true;
    for (int round = 0; changed && round < 64; ++round) {
        changed = false;
        for (std::size_t f = 0; f < cs.facet_count(); ++f) {
            const auto& map = cs.index_map(f);
            const auto& target = cs.target(f);
            cell_upper.assign(target.size(), 0.0);
            cell_lower.assign(target.size(), 0.0);
            for (std::size_t z = 0; z < n; ++z) {
                cell_upper[map[z]] += upper[z];
                cell_lower[map[z]] += lower[z];
            }
            for (std::size_t z = 0; z < n; ++z) {
                double b = target[map[z]];
                double u = b - (cell_lower[map[z]] - lower[z]);
                if (u < upper[z] - 1e-15) {
                    upper[z] = std::max(0.0, u);
                    changed = true;
                }
                double l = b - (cell_upper[map[z]] - upper[z]);
                if (l > lower[z] + 1e-15) {
                    lower[z] = l;
                    changed = true;
                }
            }
        }
    }
    std::vector<char> zero(n, 0);
    for (std::size_t z = 0; z < n; ++z) zero[z] = upper[z] <= 1e-12;
    return zero;
}

// One multiplicative scaling pass for each facet, in the given order.
void ipf_sweep(std::vector<double>& q, const ConstraintSet& cs, std::vector<double>& scratch) {
    for (std::size_t f = 0; f < cs.facet_count(); ++f) {
        const auto& target = cs.target(f);
        const auto& map = cs.index_map(f);
        scratch.assign(target.size(), 0.0);
        for (std::size_t i = 0; i < q.size(); ++i) scratch[map[i]] += q[i];
        for (std::size_t a = 0; a < target.size(); ++a)
            scratch[a] = scratch[a] > 0.0 ? target[a] / scratch[a] : 0.0;  // 0/0 := 0
        for (std::size_t i = 0; i < q.size(); ++i) q[i] *= scratch[map[i]];
    }
}

double marginal_gap(const std::vector<double>& q, const ConstraintSet& cs,
                    std::vector<double>& scratch) {
    double gap = 0.0;
    for (std::size_t f = 0; f < cs.facet_count(); ++f) {
        const auto& target = cs.target(f);
        const auto& map = cs.index_map(f);
        scratch.assign(target.size(), 0.0);
        for (std::size_t i = 0; i < q.size(); ++i) scratch[map[i]] += q[i];
        double l1 = 0.0;
        for (std::size_t a = 0; a < target.size(); ++a) l1 += std::abs(scratch[a] - target[a]);
        gap = std::max(gap, l1);
    }
    return gap;
}

}  // namespace

SplitResult split_distribution(const JointDistribution& p, const ConstraintNode& node,
                               const IpfOptions& options) {
    if (options.tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (options.max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
    ConstraintSet cs(p, node);

    // Start uniform on the certified support; forced zeros stay zero under
    // the multiplicative updates, and the max-entropy point is unchanged.
    std::vector<char> zero = certified_zero_states(cs);
    std::size_t support = 0;
    for (char z : zero)
        if (!z) ++support;
    std::vector<double> q(p.state_count());
    for (std::size_t i = 0; i < q.size(); ++i)
        q[i] = zero[i] ? 0.0 : 1.0 / static_cast<double>(support);
    std::vector<double> scratch;
    double gap = marginal_gap(q, cs, scratch);
    int sweeps = 0;
    while (gap > options.tolerance) {
        if (sweeps >= options.max_sweeps) {
            std::vector<std::string> names;
            for (const auto& v : p.variables()) names.push_back(v.name);
            std::ostringstream msg;
            msg << "IPF did not reach tolerance " << options.tolerance << " at node "
                << facet_notation(node, names) << " after " << sweeps << " sweeps (final gap "
                << gap << ")";
            throw ConvergenceError(msg.str(), gap);
        }
        ipf_sweep(q, cs, scratch);
        ++sweeps;
        gap = marginal_gap(q, cs, scratch);
    }
    return {JointDistribution(p.variables(), std::move(q)), sweeps, gap};
}

double constraint_information(const JointDistribution& p, const ConstraintNode& node,
                              const IpfOptions& options) {
    SplitResult split = split_distribution(p, node, options);
    return kl_divergence(p, split.distribution, options.base);
}

double triplewise_information(const JointDistribution& p, const IpfOptions& options) {
    if (p.variable_count() != 3)
        throw std::invalid_argument("triplewise information needs exactly 3 variables");
    ConstraintNode node = make_constraint_node(3, {0b011, 0b101, 0b110});
    return constraint_information(p, node, options);
}

SplitCache::SplitCache(const JointDistribution& p, IpfOptions options)
    : p_(with_target_last(p)), options_(options) {
    input_count_ = p_.variable_count() - 1;
    if (input_count_ < 1) throw std::invalid_argument("need at least one input variable");
    for (int i = 0; i < input_count_; ++i)
        if (p_.variable(i).role != VarRole::input)
            throw std::invalid_argument("all non-target variables must be inputs");
}

const SplitCache::Entry& SplitCache::entry(const SimplicialComplex& node) {
    if (node.empty()) throw std::invalid_argument("the empty family has no split distribution");
    std::unique_lock lock(mutex_);
    auto it = entries_.find(node.bits());
    if (it != entries_.end()) return *it->second;
    lock.unlock();

    SplitResult computed = split_distribution(p_, sigma(node, input_count_), options_);
    double divergence = 0.0;
    if (!(node == SimplicialComplex::bottom())) {
        const SplitResult& bottom = split(SimplicialComplex::bottom());
        divergence = kl_divergence(computed.distribution, bottom.distribution, options_.base);
    }
    auto fresh = std::make_unique<Entry>(Entry{std::move(computed), divergence});

    lock.lock();
    auto [pos, inserted] = entries_.try_emplace(node.bits(), std::move(fresh));
    return *pos->second;  // first writer wins; a racing duplicate is dropped
}

const SplitResult& SplitCache::split(const SimplicialComplex& node) { return entry(node).split; }

double SplitCache::divergence_from_bottom(const SimplicialComplex& node) {
    return entry(node).divergence;
}

int SplitCache::sweeps_used(const SimplicialComplex& node) { return entry(node).split.sweeps_used; }

}  // namespace infodecomp
