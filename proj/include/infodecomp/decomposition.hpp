#pragma once

// The information-contribution decomposition: every node of the input lattice
// is projected once, per-edge KL gains follow from divergence differences
// (the Pythagorean relation), and each non-empty predictor A collects the
// gains of the edges that add A, weighted by exact chain-count rationals.

#include <map>
#include <vector>

#include "infodecomp/lattice.hpp"
#include "infodecomp/projection.hpp"

namespace infodecomp {

struct DecompositionResult {
    std::vector<std::string> input_names;  // by input position
    LogBase base = LogBase::two;

    // I_A per non-empty predictor A. Tiny negative float noise (>= -1e-9) is
    // clamped to zero here; raw_contributions keeps the unclamped values.
    std::map<Face, double> contributions;
    std::map<Face, double> raw_contributions;

    double total_mi = 0.0;
    // total_mi minus the sum of raw contributions; reported, never
    // redistributed.
    double residual = 0.0;

    std::map<std::uint64_t, double> node_divergences;  // node bits -> D_KL(p_S || p_bottom)
    std::map<std::uint64_t, int> ipf_sweeps;           // node bits -> sweeps used
};

DecompositionResult information_contribution(const JointDistribution& p,
                                             const IpfOptions& options = {});
// Shared-cache variant; `lat` must be the lattice over cache.input_count().
DecompositionResult information_contribution(SplitCache& cache, const InputLattice& lat);

struct ChainDecomposition {
    std::vector<SimplicialComplex> chain;
    std::vector<double> terms;  // terms[i] = D_KL(p_chain[i+1] || p_chain[i])
};

// KL gains along a strictly increasing chain of complexes; the chain need not
// be maximal.
ChainDecomposition chain_decomposition(const JointDistribution& p,
                                       const std::vector<SimplicialComplex>& chain,
                                       const IpfOptions& options = {});

struct VerificationReport {
    double min_contribution = 0.0;   // over raw values
    double residual = 0.0;
    double max_nonsingleton = 0.0;   // max contribution over predictors with |A| > 1
    bool nonnegativity_ok = false;   // min_contribution >= -1e-9
    bool completeness_ok = false;    // |residual| <= 1e-7
    bool ok() const { return nonnegativity_ok && completeness_ok; }
};

VerificationReport verify_result(const DecompositionResult& r);

}  // namespace infodecomp
