#include "infodecomp/decomposition.hpp"

#include <algorithm>
#include <cmath>

namespace infodecomp {

namespace {

constexpr double kClampFloor = -1e-9;

}  // namespace

DecompositionResult information_contribution(const JointDistribution& p,
                                             const IpfOptions& options) {
    SplitCache cache(p, options);
    InputLattice lat = InputLattice::enumerate(cache.input_count());
    return information_contribution(cache, lat);
}

DecompositionResult information_contribution(SplitCache& cache, const InputLattice& lat) {
    if (lat.input_count() != cache.input_count())
        throw std::invalid_argument("lattice input count does not match the distribution");
    const JointDistribution& p = cache.true_distribution();
    const int n = cache.input_count();

    DecompositionResult result;
    result.base = cache.options().base;
    for (int i = 0; i < n; ++i) result.input_names.push_back(p.variable(i).name);

    // One projection per node; edge gains are divergence differences.
    std::vector<double> d(lat.node_count());
    for (std::size_t i = 0; i < lat.node_count(); ++i) {
        d[i] = cache.divergence_from_bottom(lat.node(i));
        result.node_divergences[lat.node(i).bits()] = d[i];
        result.ipf_sweeps[lat.node(i).bits()] = cache.sweeps_used(lat.node(i));
    }

    double raw_sum = 0.0;
    for (Face a = 1; a < (Face(1) << n); ++a) {
        double value = 0.0;
        for (int e : lat.edges_adding(a)) {
            const HasseEdge& edge = lat.edges()[e];
            value += lat.edge_weight(e).get_d() * (d[edge.upper] - d[edge.lower]);
        }
        result.raw_contributions[a] = value;
        result.contributions[a] = value < 0.0 && value >= kClampFloor ? 0.0 : value;
        raw_sum += value;
    }

    VarSet target = VarSet(1) << n;
    result.total_mi = mutual_information(p, p.input_set(), target, cache.options().base);
    result.residual = result.total_mi - raw_sum;
    return result;
}

ChainDecomposition chain_decomposition(const JointDistribution& p,
                                       const std::vector<SimplicialComplex>& chain,
                                       const IpfOptions& options) {
    if (chain.size() < 2) throw std::invalid_argument("chain needs at least two nodes");
    SplitCache cache(p, options);
    const Face face_limit = Face(1) << cache.input_count();
    for (const SimplicialComplex& s : chain)
        for (Face f : s.maximal_faces())
            if (f >= face_limit) throw std::invalid_argument("chain node has out-of-range faces");
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!(chain[i - 1].subset_of(chain[i])) || chain[i - 1] == chain[i])
            throw std::invalid_argument("chain is not strictly increasing");
    }

    ChainDecomposition out;
    out.chain = chain;
    double prev = cache.divergence_from_bottom(chain.front());
    for (std::size_t i = 1; i < chain.size(); ++i) {
        double cur = cache.divergence_from_bottom(chain[i]);
        out.terms.push_back(cur - prev);
        prev = cur;
    }
    return out;
}

VerificationReport verify_result(const DecompositionResult& r) {
    VerificationReport report;
    report.residual = r.residual;
    report.min_contribution = 0.0;
    report.max_nonsingleton = 0.0;
    for (const auto& [face, value] : r.raw_contributions) {
        report.min_contribution = std::min(report.min_contribution, value);
        if (face_size(face) > 1)
            report.max_nonsingleton = std::max(report.max_nonsingleton, value);
    }
    report.nonnegativity_ok = report.min_contribution >= kClampFloor;
    report.completeness_ok = std::abs(report.residual) <= 1e-7;
    return report;
}

}  // namespace infodecomp
