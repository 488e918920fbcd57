#pragma once

// Split distributions: maximum-entropy projections of a true distribution
// under per-facet marginal constraints, computed by iterative proportional
// fitting from the uniform distribution.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "infodecomp/joint_distribution.hpp"
#include "infodecomp/lattice.hpp"

namespace infodecomp {

struct IpfOptions {
    // Convergence metric: max over facets of the L1 distance between the
    // current facet marginal and its target.
    double tolerance = 1e-10;
    int max_sweeps = 100000;
    LogBase base = LogBase::two;
};

struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double gap) : std::runtime_error(what), final_gap(gap) {}
    double final_gap = 0.0;
};

struct SplitResult {
    JointDistribution distribution;
    int sweeps_used = 0;
    double final_gap = 0.0;
};

// The marginal constraints for one constraint node: per facet, the target
// marginal table of the true distribution, plus the per-state index map used
// by the IPF sweeps. Targets are mutually consistent by construction.
class ConstraintSet {
public:
    ConstraintSet(const JointDistribution& p, const ConstraintNode& node);

    std::size_t facet_count() const { return facets_.size(); }
    VarSet facet(std::size_t i) const { return facets_[i]; }
    const std::vector<double>& target(std::size_t i) const { return targets_[i]; }
    const std::vector<int>& index_map(std::size_t i) const { return index_maps_[i]; }
    std::size_t state_count() const { return state_count_; }

private:
    std::size_t state_count_;
    std::vector<VarSet> facets_;
    std::vector<std::vector<double>> targets_;    // facet marginals of p
    std::vector<std::vector<int>> index_maps_;    // full state -> facet state
};

SplitResult split_distribution(const JointDistribution& p, const ConstraintNode& node,
                               const IpfOptions& options = {});

// I_S = D_KL(p || p_S): the information in p that the constraints of `node`
// do not capture.
double constraint_information(const JointDistribution& p, const ConstraintNode& node,
                              const IpfOptions& options = {});

// Constraint information at the pairwise node (Z1Z2)(Z1Z3)(Z2Z3) of a
// three-variable system.
double triplewise_information(const JointDistribution& p, const IpfOptions& options = {});

// Split distributions and divergences for every node of the input lattice of
// one true distribution, computed on demand and cached by node bitset. The
// true distribution is stored with its target moved to the last position.
// Thread-safe; a finished entry is never recomputed.
class SplitCache {
public:
    SplitCache(const JointDistribution& p, IpfOptions options = {});

    const JointDistribution& true_distribution() const { return p_; }
    int input_count() const { return input_count_; }
    const IpfOptions& options() const { return options_; }

    const SplitResult& split(const SimplicialComplex& node);
    // D_KL(p_node || p_bottom) in the configured base; this is the value of
    // the node as a coalition.
    double divergence_from_bottom(const SimplicialComplex& node);
    int sweeps_used(const SimplicialComplex& node);

private:
    struct Entry {
        SplitResult split;
        double divergence = 0.0;
    };
    const Entry& entry(const SimplicialComplex& node);

    JointDistribution p_;
    int input_count_;
    IpfOptions options_;
    std::mutex mutex_;
    std::map<std::uint64_t, std::unique_ptr<Entry>> entries_;
};

}  // namespace infodecomp
