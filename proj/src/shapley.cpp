#include "infodecomp/shapley.hpp"

#include <stdexcept>

namespace infodecomp {

namespace {

// Memoized linear-extension counts for subsets of the face poset. A subset is
// a bitmask with bit f set when face f belongs to it (bit 0, the empty face,
// is never used: players are the non-empty faces).
class LinextCounter {
public:
    explicit LinextCounter(int input_count) : superface_(std::size_t(1) << input_count, 0) {
        const Face limit = Face(1) << input_count;
        for (Face f = 1; f < limit; ++f)
            for (Face g = 1; g < limit; ++g)
                if (f != g && (f & ~g) == 0) superface_[f] |= 1ull << g;
    }

    const mpz_class& count(std::uint64_t players) {
        auto it = memo_.find(players);
        if (it != memo_.end()) return it->second;
        mpz_class total = 0;
        if (players == 0) {
            total = 1;
        } else {
            // Peel one maximal element; the orders of the rest are counted
            // recursively.
            for (std::uint64_t rest = players; rest;) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                Face f = static_cast<Face>(__builtin_ctzll(bit));
                if (superface_[f] & players) continue;
                total += count(players ^ bit);
            }
        }
        return memo_.emplace(players, std::move(total)).first->second;
    }

private:
    std::vector<std::uint64_t> superface_;
    std::map<std::uint64_t, mpz_class> memo_;
};

std::uint64_t nonempty_faces(std::uint64_t bits) { return bits & ~1ull; }

double shapley_sum(const GameValueTable& game, const InputLattice& lat, Face c,
                   LinextCounter& counter) {
    if (c == 0) throw std::invalid_argument("players are non-empty faces");
    if (c >= (Face(1) << lat.input_count())) throw std::invalid_argument("face out of range");
    if (game.values.size() != lat.node_count())
        throw std::invalid_argument("game table does not match the lattice");

    const std::uint64_t all = nonempty_faces(SimplicialComplex::full(lat.input_count()).bits());
    const mpz_class& r_all = counter.count(all);
    const std::uint64_t c_bit = 1ull << c;

    double sum = 0.0;
    for (std::size_t t = 0; t < lat.node_count(); ++t) {
        std::uint64_t bits = lat.node(t).bits();
        if ((bits & c_bit) == 0) continue;
        std::uint64_t lower = bits & ~c_bit;
        if (!is_downward_closed(lower)) continue;  // c is not maximal in this coalition
        int lower_idx = lat.index_of(SimplicialComplex::from_bits(lower));
        mpq_class weight(counter.count(nonempty_faces(lower)) * counter.count(all & ~bits), r_all);
        weight.canonicalize();
        sum += weight.get_d() * (game.values[t] - game.values[lower_idx]);
    }
    return sum;
}

}  // namespace

GameValueTable information_game(SplitCache& cache, const InputLattice& lat) {
    if (lat.input_count() != cache.input_count())
        throw std::invalid_argument("lattice input count does not match the distribution");
    GameValueTable game;
    game.values.reserve(lat.node_count());
    for (std::size_t i = 0; i < lat.node_count(); ++i)
        game.values.push_back(cache.divergence_from_bottom(lat.node(i)));
    return game;
}

double coalition_value(SplitCache& cache, const SimplicialComplex& s) {
    if (s.empty()) return 0.0;
    return cache.divergence_from_bottom(s);
}

double faigle_kern_value(const GameValueTable& game, const InputLattice& lat, Face c) {
    LinextCounter counter(lat.input_count());
    return shapley_sum(game, lat, c, counter);
}

std::map<Face, double> faigle_kern_values(const GameValueTable& game, const InputLattice& lat) {
    LinextCounter counter(lat.input_count());
    std::map<Face, double> out;
    for (Face c = 1; c < (Face(1) << lat.input_count()); ++c)
        out[c] = shapley_sum(game, lat, c, counter);
    return out;
}

mpq_class hierarchical_strength(const InputLattice& lat, const SimplicialComplex& s, Face c) {
    if (c == 0) throw std::invalid_argument("players are non-empty faces");
    if (!s.contains(c)) throw std::invalid_argument("player is not a member of the coalition");
    lat.index_of(s);  // the coalition must be a lattice node

    LinextCounter counter(lat.input_count());
    const std::uint64_t all = nonempty_faces(SimplicialComplex::full(lat.input_count()).bits());
    const std::uint64_t c_bit = 1ull << c;
    const std::uint64_t others = s.bits() & ~c_bit & ~1ull;  // members of s ranked before c

    mpz_class rankings = 0;
    for (std::size_t t = 0; t < lat.node_count(); ++t) {
        std::uint64_t bits = lat.node(t).bits();
        if ((bits & c_bit) == 0) continue;
        std::uint64_t lower = bits & ~c_bit;
        if (!is_downward_closed(lower)) continue;
        if (others & ~lower) continue;  // some member of s comes after c
        rankings += counter.count(nonempty_faces(lower)) * counter.count(all & ~bits);
    }
    mpq_class h(rankings, counter.count(all));
    h.canonicalize();
    return h;
}

GameValueTable inclusion_game(const InputLattice& lat, const SimplicialComplex& s) {
    lat.index_of(s);
    GameValueTable game;
    game.values.reserve(lat.node_count());
    for (std::size_t i = 0; i < lat.node_count(); ++i)
        game.values.push_back(s.subset_of(lat.node(i)) ? 1.0 : 0.0);
    return game;
}

}  // namespace infodecomp
