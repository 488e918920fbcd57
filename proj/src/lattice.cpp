#include "infodecomp/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace infodecomp {

SimplicialComplex SimplicialComplex::full(int input_count) {
    if (input_count < 1 || input_count > 6)
        throw std::invalid_argument("full complex supports 1..6 inputs");
    int faces = 1 << input_count;
    std::uint64_t bits = faces == 64 ? ~0ull : (1ull << faces) - 1;
    return SimplicialComplex(Raw{}, bits);
}

SimplicialComplex SimplicialComplex::closure(std::span<const Face> faces, int input_count) {
    if (input_count < 1 || input_count > 6)
        throw std::invalid_argument("complexes support 1..6 inputs");
    std::uint64_t bits = 1;  // the empty face
    for (Face f : faces) {
        if (f >= (Face(1) << input_count)) throw std::invalid_argument("face out of range");
        bits |= 1ull << f;
        bits |= proper_subface_mask(f);
    }
    return SimplicialComplex(Raw{}, bits);
}

SimplicialComplex SimplicialComplex::from_bits(std::uint64_t bits) {
    if (bits != 0 && !is_downward_closed(bits))
        throw std::invalid_argument("face family is not downward closed");
    return SimplicialComplex(Raw{}, bits);
}

SimplicialComplex SimplicialComplex::with_face(Face f) const {
    if (f >= 64) throw std::invalid_argument("face out of range");
    if (contains(f)) throw std::logic_error("face already present");
    if ((proper_subface_mask(f) & ~bits_) != 0)
        throw std::logic_error("adding a face whose subfaces are missing");
    return SimplicialComplex(Raw{}, bits_ | (1ull << f));
}

SimplicialComplex SimplicialComplex::without_face(Face f) const {
    if (!contains(f)) throw std::logic_error("face not present");
    std::uint64_t bits = bits_ & ~(1ull << f);
    if (bits != 0 && !is_downward_closed(bits))
        throw std::logic_error("removal breaks downward closure");
    return SimplicialComplex(Raw{}, bits);
}

std::vector<Face> SimplicialComplex::faces() const {
    std::vector<Face> out;
    for (int f = 0; f < 64; ++f)
        if (bits_ >> f & 1) out.push_back(static_cast<Face>(f));
    return out;
}

std::vector<Face> SimplicialComplex::maximal_faces() const {
    std::vector<Face> out;
    for (Face f : faces()) {
        bool maximal = true;
        for (Face g : faces())
            if (g != f && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

std::uint64_t proper_subface_mask(Face f) {
    // Iterates all strict submasks of f.
    std::uint64_t mask = 1;  // the empty face
    for (Face s = (f - 1) & f; s != 0; s = (s - 1) & f) mask |= 1ull << s;
    return mask;
}

bool is_downward_closed(std::uint64_t bits) {
    if ((bits & 1) == 0) return false;  // must contain the empty face
    for (int f = 1; f < 64; ++f)
        if ((bits >> f & 1) && (proper_subface_mask(static_cast<Face>(f)) & ~bits) != 0)
            return false;
    return true;
}

ConstraintNode make_constraint_node(int variable_count, std::vector<VarSet> faces) {
    if (variable_count < 1 || variable_count >= 32)
        throw std::invalid_argument("bad variable count");
    VarSet all = (VarSet(1) << variable_count) - 1;
    VarSet covered = 0;
    std::vector<VarSet> facets;
    for (VarSet f : faces) {
        if (f & ~all) throw std::invalid_argument("facet out of range");
        covered |= f;
        bool maximal = true;
        for (VarSet g : faces)
            if (g != f && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        if (maximal && std::find(facets.begin(), facets.end(), f) == facets.end())
            facets.push_back(f);
    }
    if (covered != all) throw std::invalid_argument("facets do not cover all variables");
    std::sort(facets.begin(), facets.end());
    return ConstraintNode{variable_count, std::move(facets)};
}

bool constraint_leq(const ConstraintNode& a, const ConstraintNode& b) {
    for (VarSet f : a.facets) {
        bool dominated = false;
        for (VarSet g : b.facets)
            if ((f & ~g) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

ConstraintNode sigma(const SimplicialComplex& s, int input_count) {
    if (s.empty()) throw std::invalid_argument("sigma of the empty family");
    VarSet inputs = (VarSet(1) << input_count) - 1;
    VarSet target = VarSet(1) << input_count;
    std::vector<VarSet> faces{inputs};
    for (Face a : s.maximal_faces()) faces.push_back(static_cast<VarSet>(a) | target);
    return make_constraint_node(input_count + 1, std::move(faces));
}

namespace {

std::string face_names(VarSet f, std::span<const std::string> names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (f >> i & 1) out += names[i];
    return out;
}

}  // namespace

std::string facet_notation(const ConstraintNode& node, std::span<const std::string> names) {
    if (names.size() != static_cast<std::size_t>(node.variable_count))
        throw std::invalid_argument("name list does not match variable count");
    std::string out;
    for (VarSet f : node.facets) out += "(" + face_names(f, names) + ")";
    return out;
}

ConstraintNode parse_facet_notation(const std::string& text, std::span<const std::string> names) {
    std::vector<VarSet> faces;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected `(` in facet notation");
        ++i;
        VarSet face = 0;
        while (i < text.size() && text[i] != ')') {
            if (text[i] == ',' || text[i] == ' ') {
                ++i;
                continue;
            }
            // Longest declared name matching at this position.
            int best = -1;
            std::size_t best_len = 0;
            for (std::size_t v = 0; v < names.size(); ++v) {
                const std::string& name = names[v];
                if (name.size() > best_len && text.compare(i, name.size(), name) == 0) {
                    best = static_cast<int>(v);
                    best_len = name.size();
                }
            }
            if (best < 0)
                throw std::invalid_argument("unknown variable at `" + text.substr(i) + "`");
            face |= VarSet(1) << best;
            i += best_len;
        }
        if (i == text.size()) throw std::invalid_argument("unterminated facet");
        ++i;  // ')'
        if (face == 0) throw std::invalid_argument("empty facet");
        faces.push_back(face);
        skip_ws();
    }
    if (faces.empty()) throw std::invalid_argument("no facets given");
    return make_constraint_node(static_cast<int>(names.size()), std::move(faces));
}

std::string complex_notation(const SimplicialComplex& s, std::span<const std::string> names) {
    if (s.empty()) return "{}";
    if (s == SimplicialComplex::bottom()) return "[]";
    std::string out;
    auto maximal = s.maximal_faces();
    for (Face f : maximal) out += "[" + face_names(static_cast<VarSet>(f), names) + "]";
    return out;
}

InputLattice InputLattice::enumerate(int input_count, int cap) {
    if (input_count < 1) throw std::invalid_argument("need at least one input");
    if (input_count > cap)
        throw std::invalid_argument("input count " + std::to_string(input_count) +
                                    " exceeds the lattice cap of " + std::to_string(cap) +
                                    " (node counts grow as Dedekind numbers)");
    if (input_count > 6) throw std::invalid_argument("complex bitsets support at most 6 inputs");

    const int face_limit = 1 << input_count;
    std::vector<std::uint64_t> subface_masks(face_limit);
    for (Face f = 0; f < static_cast<Face>(face_limit); ++f)
        subface_masks[f] = proper_subface_mask(f);

    // BFS from the bottom complex, adding one admissible face per step.
    std::vector<std::uint64_t> discovered{SimplicialComplex::bottom().bits()};
    std::unordered_map<std::uint64_t, int> seen{{discovered[0], 0}};
    struct RawEdge {
        std::uint64_t lower, upper;
        Face added;
    };
    std::vector<RawEdge> raw_edges;
    for (std::size_t head = 0; head < discovered.size(); ++head) {
        std::uint64_t bits = discovered[head];
        for (Face f = 1; f < static_cast<Face>(face_limit); ++f) {
            if (bits >> f & 1) continue;
            if (subface_masks[f] & ~bits) continue;  // some subface missing
            std::uint64_t upper = bits | (1ull << f);
            if (seen.emplace(upper, static_cast<int>(discovered.size())).second)
                discovered.push_back(upper);
            raw_edges.push_back({bits, upper, f});
        }
    }

    InputLattice lat;
    lat.input_count_ = input_count;

    // Canonical node order: by (face count, bitset value).
    std::sort(discovered.begin(), discovered.end(), [](std::uint64_t a, std::uint64_t b) {
        int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
        return ca != cb ? ca < cb : a < b;
    });
    std::unordered_map<std::uint64_t, int> index;
    for (std::size_t i = 0; i < discovered.size(); ++i) {
        lat.nodes_.push_back(SimplicialComplex::from_bits(discovered[i]));
        index[discovered[i]] = static_cast<int>(i);
    }
    lat.bottom_ = index.at(SimplicialComplex::bottom().bits());
    lat.top_ = index.at(SimplicialComplex::full(input_count).bits());

    for (const RawEdge& e : raw_edges)
        lat.edges_.push_back({index.at(e.lower), index.at(e.upper), e.added});
    std::sort(lat.edges_.begin(), lat.edges_.end(), [](const HasseEdge& a, const HasseEdge& b) {
        return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
    });

    lat.up_edges_.resize(lat.nodes_.size());
    lat.down_edges_.resize(lat.nodes_.size());
    for (std::size_t e = 0; e < lat.edges_.size(); ++e) {
        lat.up_edges_[lat.edges_[e].lower].push_back(static_cast<int>(e));
        lat.down_edges_[lat.edges_[e].upper].push_back(static_cast<int>(e));
    }

    // Chain-count DP; the canonical order is already a linear extension
    // (face counts increase along edges).
    lat.from_bottom_.assign(lat.nodes_.size(), 0);
    lat.to_top_.assign(lat.nodes_.size(), 0);
    lat.from_bottom_[lat.bottom_] = 1;
    for (std::size_t i = 0; i < lat.nodes_.size(); ++i)
        for (int e : lat.up_edges_[i]) lat.from_bottom_[lat.edges_[e].upper] += lat.from_bottom_[i];
    lat.to_top_[lat.top_] = 1;
    for (std::size_t i = lat.nodes_.size(); i-- > 0;)
        for (int e : lat.down_edges_[i]) lat.to_top_[lat.edges_[e].lower] += lat.to_top_[i];
    return lat;
}

int InputLattice::index_of(const SimplicialComplex& s) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s,
                               [](const SimplicialComplex& a, const SimplicialComplex& b) {
                                   int ca = a.face_count(), cb = b.face_count();
                                   return ca != cb ? ca < cb : a.bits() < b.bits();
                               });
    if (it == nodes_.end() || !(*it == s)) throw std::invalid_argument("complex not in lattice");
    return static_cast<int>(it - nodes_.begin());
}

std::vector<int> InputLattice::edges_adding(Face a) const {
    if (a == 0) throw std::invalid_argument("edges_adding needs a non-empty face");
    if (a >= (Face(1) << input_count_)) throw std::invalid_argument("face out of range");
    std::vector<int> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].added == a) out.push_back(static_cast<int>(e));
    return out;
}

mpz_class InputLattice::edge_chain_count(int e) const {
    const HasseEdge& edge = edges_.at(e);
    return from_bottom_[edge.lower] * to_top_[edge.upper];
}

mpq_class InputLattice::edge_weight(int e) const {
    mpq_class w(edge_chain_count(e), total_chains());
    w.canonicalize();
    return w;
}

mpz_class count_linear_extensions(std::span<const Face> players) {
    const std::size_t n = players.size();
    if (n == 0) return 1;
    if (n > 63) throw std::invalid_argument("too many players");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (players[i] == players[j]) throw std::invalid_argument("duplicate player");

    // above[i]: players strictly containing player i.
    std::vector<std::uint64_t> above(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (players[i] & ~players[j]) == 0) above[i] |= 1ull << j;

    std::map<std::uint64_t, mpz_class> memo;
    auto count = [&](auto&& self, std::uint64_t mask) -> const mpz_class& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        mpz_class total = 0;
        if (mask == 0) {
            total = 1;
        } else {
            for (std::uint64_t rest = mask; rest;) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                int i = __builtin_ctzll(bit);
                if (above[i] & mask) continue;  // not maximal in this down-set
                total += self(self, mask ^ bit);
            }
        }
        return memo.emplace(mask, std::move(total)).first->second;
    };
    std::uint64_t full = n == 63 ? 0x7fffffffffffffffull : (1ull << n) - 1;
    return count(count, full);
}

}  // namespace infodecomp
