#pragma once

// Shapley value under precedence constraints (Faigle-Kern) for games on the
// input lattice, used as an independent cross-check of the chain-sum
// decomposition. Players are the non-empty faces ordered by inclusion;
// coalitions are the lattice nodes. The empty coalition below the bottom node
// has value 0 and only exists inside this module.

#include <map>

#include <gmpxx.h>

#include "infodecomp/lattice.hpp"
#include "infodecomp/projection.hpp"

namespace infodecomp {

// Game values aligned with the node order of an InputLattice; the empty
// coalition's zero is implicit.
struct GameValueTable {
    std::vector<double> values;
};

// v(S) = D_KL(p_S || p_bottom), the information the coalition S provides.
GameValueTable information_game(SplitCache& cache, const InputLattice& lat);

// Value of one coalition; the empty family and the bottom node both score 0.
double coalition_value(SplitCache& cache, const SimplicialComplex& s);

// Phi_C(v) = (1/|R(N)|) sum over coalitions T with C maximal of
// |R(T\{C})| * |R(N\T)| * (v(T) - v(T\{C})). Linear-extension counts come
// from count_linear_extensions, not from the lattice's chain-count tables.
double faigle_kern_value(const GameValueTable& game, const InputLattice& lat, Face c);

// All players at once, sharing one memoized extension counter.
std::map<Face, double> faigle_kern_values(const GameValueTable& game, const InputLattice& lat);

// Fraction of feasible rankings in which player c tops the coalition s;
// exact rational in (0, 1].
mpq_class hierarchical_strength(const InputLattice& lat, const SimplicialComplex& s, Face c);

// The 0/1 game that pays out exactly when the tested coalition contains s.
GameValueTable inclusion_game(const InputLattice& lat, const SimplicialComplex& s);

}  // namespace infodecomp
