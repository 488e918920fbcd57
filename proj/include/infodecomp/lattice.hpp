#pragma once

// The input lattice: all simplicial complexes (downward-closed face families)
// over n input variables, ordered by inclusion, with Hasse edges, exact
// maximal-chain counts and rational edge weights.
//
// A Face is a bitmask over input positions. A SimplicialComplex stores one
// membership bit per face, so bit f of bits() says whether face mask f is a
// member. Chain counts use arbitrary-precision integers: they outgrow 64 bits
// already between n = 4 and n = 5.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "infodecomp/joint_distribution.hpp"

namespace infodecomp {

using Face = std::uint32_t;  // bitmask over input indices

inline int face_size(Face f) { return __builtin_popcount(f); }

class SimplicialComplex {
public:
    // The bottom complex {∅}.
    SimplicialComplex() : bits_(1) {}

    static SimplicialComplex bottom() { return SimplicialComplex(); }
    // The empty family; only meaningful as the game-theoretic empty coalition.
    static SimplicialComplex empty_family() { return SimplicialComplex(Raw{}, 0); }
    // The full power set over `input_count` inputs.
    static SimplicialComplex full(int input_count);
    // Downward closure of the given faces plus the empty face.
    static SimplicialComplex closure(std::span<const Face> faces, int input_count);
    static SimplicialComplex from_bits(std::uint64_t bits);

    bool empty() const { return bits_ == 0; }
    bool contains(Face f) const { return f < 64 && (bits_ >> f & 1); }
    int face_count() const { return __builtin_popcountll(bits_); }
    std::uint64_t bits() const { return bits_; }

    // Adds one face whose proper subfaces are already members.
    SimplicialComplex with_face(Face f) const;
    SimplicialComplex without_face(Face f) const;

    std::vector<Face> faces() const;
    std::vector<Face> maximal_faces() const;

    // Family inclusion; on downward-closed families this is the lattice order.
    bool subset_of(const SimplicialComplex& other) const {
        return (bits_ & ~other.bits_) == 0;
    }

    bool operator==(const SimplicialComplex&) const = default;

private:
    struct Raw {};
    SimplicialComplex(Raw, std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_;
};

// Bitmask over all proper subsets of f (f itself excluded).
std::uint64_t proper_subface_mask(Face f);

bool is_downward_closed(std::uint64_t bits);

// A simplicial-complex cover of the full variable set, stored by its facets
// (maximal faces). Facets are VarSet masks over all variables of the system.
struct ConstraintNode {
    int variable_count = 0;
    std::vector<VarSet> facets;
};

// Reduces `faces` to its maximal elements and checks that they cover all
// variables.
ConstraintNode make_constraint_node(int variable_count, std::vector<VarSet> faces);

// Order of the constraint lattice: every facet of a lies inside some facet of b.
bool constraint_leq(const ConstraintNode& a, const ConstraintNode& b);

// Maps a complex over the inputs to its constraint node over inputs plus
// target: the closure of {V} ∪ {A ∪ {Y} : A ∈ s}, with the target at the last
// position.
ConstraintNode sigma(const SimplicialComplex& s, int input_count);

std::string facet_notation(const ConstraintNode& node, std::span<const std::string> names);
ConstraintNode parse_facet_notation(const std::string& text,
                                    std::span<const std::string> names);

// Facet notation for complexes over the inputs, e.g. "[X1][X2]"; the bottom
// complex prints as "[]".
std::string complex_notation(const SimplicialComplex& s, std::span<const std::string> names);

struct HasseEdge {
    int lower = 0;
    int upper = 0;
    Face added = 0;  // the single face whose addition forms the upper node
};

class InputLattice {
public:
    static constexpr int kDefaultCap = 5;

    // Enumerates all complexes over `input_count` inputs by BFS, adding one
    // admissible face at a time. The cap guards against Dedekind-number
    // growth: node counts are 2, 5, 19, 167, 7580 for n = 1..5, and roughly
    // 7.8 million for n = 6 (the largest count this representation can hold).
    static InputLattice enumerate(int input_count, int cap = kDefaultCap);

    int input_count() const { return input_count_; }
    std::size_t node_count() const { return nodes_.size(); }
    const SimplicialComplex& node(int i) const { return nodes_[i]; }
    const std::vector<SimplicialComplex>& nodes() const { return nodes_; }
    int index_of(const SimplicialComplex& s) const;  // throws if absent

    const std::vector<HasseEdge>& edges() const { return edges_; }
    const std::vector<int>& upper_edges(int node) const { return up_edges_[node]; }
    const std::vector<int>& lower_edges(int node) const { return down_edges_[node]; }

    // Edges whose added face is `a`; every maximal chain crosses exactly one.
    std::vector<int> edges_adding(Face a) const;

    const mpz_class& chains_from_bottom(int node) const { return from_bottom_[node]; }
    const mpz_class& chains_to_top(int node) const { return to_top_[node]; }
    const mpz_class& total_chains() const { return from_bottom_[top_]; }

    // Number of maximal chains through edge e.
    mpz_class edge_chain_count(int e) const;
    // Reduced rational weight μ(S,S') = n_(S,S') / |Γ|.
    mpq_class edge_weight(int e) const;

    int bottom_index() const { return bottom_; }
    int top_index() const { return top_; }

private:
    int input_count_ = 0;
    int bottom_ = 0;
    int top_ = 0;
    std::vector<SimplicialComplex> nodes_;
    std::vector<HasseEdge> edges_;
    std::vector<std::vector<int>> up_edges_, down_edges_;
    std::vector<mpz_class> from_bottom_, to_top_;
};

// Number of linear extensions of the inclusion order on the given faces;
// duplicates are rejected, the empty list counts 1. Memoized recursion over
// down-sets of the induced poset.
mpz_class count_linear_extensions(std::span<const Face> players);

}  // namespace infodecomp
