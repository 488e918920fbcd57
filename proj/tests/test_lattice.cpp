#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "infodecomp/lattice.hpp"
#include "test_support.hpp"

using namespace infodecomp;

namespace {

const std::vector<std::string> kNames2{"X1", "X2"};
const std::vector<std::string> kNames3{"X1", "X2", "X3"};

// The partial order as published: every face of a lies inside some face of b.
bool dominance_leq(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (Face f : a.faces()) {
        bool dominated = false;
        for (Face g : b.faces())
            if ((f & ~g) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("simplicial complex basics") {
    SimplicialComplex bottom = SimplicialComplex::bottom();
    CHECK(bottom.face_count() == 1);
    CHECK(bottom.contains(0));

    SimplicialComplex full2 = SimplicialComplex::full(2);
    CHECK(full2.face_count() == 4);

    std::vector<Face> faces{0b11};
    SimplicialComplex c = SimplicialComplex::closure(faces, 2);
    CHECK(c == full2);

    CHECK_THROWS_AS(bottom.with_face(0b11), std::logic_error);  // subfaces missing
    SimplicialComplex grown = bottom.with_face(0b01).with_face(0b10).with_face(0b11);
    CHECK(grown == full2);
    CHECK_THROWS_AS(SimplicialComplex::from_bits(0b1000u | 1u), std::invalid_argument);

    CHECK(complex_notation(grown, kNames2) == "[X1X2]");
    CHECK(complex_notation(bottom, kNames2) == "[]");
    std::vector<Face> pair{0b01, 0b10};
    CHECK(complex_notation(SimplicialComplex::closure(pair, 2), kNames2) == "[X1][X2]");
}

TEST_CASE("lattice enumeration matches the known shapes") {
    SUBCASE("one input") {
        InputLattice lat = InputLattice::enumerate(1);
        CHECK(lat.node_count() == 2);
        CHECK(lat.total_chains() == 1);
    }
    SUBCASE("two inputs") {
        InputLattice lat = InputLattice::enumerate(2);
        REQUIRE(lat.node_count() == 5);
        std::set<std::string> notations;
        for (const auto& node : lat.nodes()) notations.insert(complex_notation(node, kNames2));
        CHECK(notations ==
              std::set<std::string>{"[]", "[X1]", "[X2]", "[X1][X2]", "[X1X2]"});
        CHECK(lat.total_chains() == 2);
    }
    SUBCASE("three inputs: 19 nodes and 48 maximal chains") {
        InputLattice lat = InputLattice::enumerate(3);
        CHECK(lat.node_count() == 19);
        CHECK(lat.total_chains() == 48);
    }
    SUBCASE("four and five inputs hit the Dedekind counts") {
        CHECK(InputLattice::enumerate(4).node_count() == 167);
        CHECK(InputLattice::enumerate(5).node_count() == 7580);
    }
    SUBCASE("cap enforced") {
        CHECK_THROWS_AS(InputLattice::enumerate(6), std::invalid_argument);
        CHECK_THROWS_AS(InputLattice::enumerate(0), std::invalid_argument);
    }
}

TEST_CASE("chain counts agree with explicit enumeration") {
    for (int n = 1; n <= 3; ++n) {
        InputLattice lat = InputLattice::enumerate(n);
        auto chains = test::enumerate_maximal_chains(lat);
        CHECK(mpz_class(chains.size()) == lat.total_chains());
        // Per-edge traversal counts.
        std::vector<long> through(lat.edges().size(), 0);
        for (const auto& chain : chains)
            for (int e : chain) ++through[e];
        for (std::size_t e = 0; e < lat.edges().size(); ++e)
            CHECK(mpz_class(through[e]) == lat.edge_chain_count(static_cast<int>(e)));
    }
}

TEST_CASE("chain count conservation") {
    for (int n = 2; n <= 4; ++n) {
        InputLattice lat = InputLattice::enumerate(n);
        for (std::size_t i = 0; i < lat.node_count(); ++i) {
            if (static_cast<int>(i) != lat.bottom_index()) {
                mpz_class sum = 0;
                for (int e : lat.lower_edges(static_cast<int>(i)))
                    sum += lat.chains_from_bottom(lat.edges()[e].lower);
                CHECK(sum == lat.chains_from_bottom(static_cast<int>(i)));
            }
            if (static_cast<int>(i) != lat.top_index()) {
                mpz_class sum = 0;
                for (int e : lat.upper_edges(static_cast<int>(i)))
                    sum += lat.chains_to_top(lat.edges()[e].upper);
                CHECK(sum == lat.chains_to_top(static_cast<int>(i)));
            }
        }
        CHECK(lat.chains_from_bottom(lat.top_index()) == lat.chains_to_top(lat.bottom_index()));
    }
}

TEST_CASE("hasse edges add exactly one admissible face") {
    for (int n = 1; n <= 4; ++n) {
        InputLattice lat = InputLattice::enumerate(n);
        for (const HasseEdge& e : lat.edges()) {
            const SimplicialComplex& lower = lat.node(e.lower);
            const SimplicialComplex& upper = lat.node(e.upper);
            CHECK(upper.bits() == (lower.bits() | (1ull << e.added)));
            CHECK(!lower.contains(e.added));
            CHECK((proper_subface_mask(e.added) & ~lower.bits()) == 0);
        }
    }
}

TEST_CASE("edges_adding partitions the chains") {
    SUBCASE("n=2 top face has a single edge") {
        InputLattice lat = InputLattice::enumerate(2);
        auto edges = lat.edges_adding(0b11);
        REQUIRE(edges.size() == 1);
        CHECK(complex_notation(lat.node(lat.edges()[edges[0]].lower), kNames2) == "[X1][X2]");
        CHECK(complex_notation(lat.node(lat.edges()[edges[0]].upper), kNames2) == "[X1X2]");
    }
    SUBCASE("n=1 single bottom-to-top edge") {
        InputLattice lat = InputLattice::enumerate(1);
        auto edges = lat.edges_adding(0b1);
        REQUIRE(edges.size() == 1);
        CHECK(lat.edges()[edges[0]].lower == lat.bottom_index());
        CHECK(lat.edges()[edges[0]].upper == lat.top_index());
    }
    SUBCASE("every maximal chain crosses each class exactly once") {
        InputLattice lat = InputLattice::enumerate(3);
        auto chains = test::enumerate_maximal_chains(lat);
        for (Face a = 1; a < 8; ++a) {
            std::set<int> cls;
            for (int e : lat.edges_adding(a)) cls.insert(e);
            for (const auto& chain : chains) {
                int hits = 0;
                for (int e : chain) hits += cls.count(e);
                CHECK(hits == 1);
            }
        }
    }
    SUBCASE("empty face rejected") {
        InputLattice lat = InputLattice::enumerate(2);
        CHECK_THROWS_AS(lat.edges_adding(0), std::invalid_argument);
    }
}

TEST_CASE("edge weights") {
    InputLattice lat = InputLattice::enumerate(2);
    SUBCASE("bottom edge carries half the chains") {
        auto e = lat.edges_adding(0b01);
        // The edge starting at the bottom node.
        for (int idx : e)
            if (lat.edges()[idx].lower == lat.bottom_index())
                CHECK(lat.edge_weight(idx) == mpq_class(1, 2));
    }
    SUBCASE("top edge carries every chain") {
        auto e = lat.edges_adding(0b11);
        REQUIRE(e.size() == 1);
        CHECK(lat.edge_weight(e[0]) == 1);
    }
    SUBCASE("weights over each class sum to one, exactly") {
        for (int n = 1; n <= 4; ++n) {
            InputLattice big = InputLattice::enumerate(n);
            for (Face a = 1; a < (Face(1) << n); ++a) {
                mpq_class sum = 0;
                for (int e : big.edges_adding(a)) sum += big.edge_weight(e);
                CHECK(sum == 1);
            }
        }
    }
}

TEST_CASE("published order coincides with family inclusion") {
    InputLattice lat = InputLattice::enumerate(3);
    for (std::size_t i = 0; i < lat.node_count(); ++i)
        for (std::size_t j = 0; j < lat.node_count(); ++j)
            CHECK(dominance_leq(lat.node(i), lat.node(j)) ==
                  lat.node(i).subset_of(lat.node(j)));
}

TEST_CASE("sigma embedding") {
    std::vector<std::string> names{"X1", "X2", "Y"};
    SUBCASE("pair of singletons") {
        std::vector<Face> faces{0b01, 0b10};
        ConstraintNode node = sigma(SimplicialComplex::closure(faces, 2), 2);
        CHECK(facet_notation(node, names) == "(X1X2)(X1Y)(X2Y)");
    }
    SUBCASE("bottom maps to independence of inputs and target") {
        ConstraintNode node = sigma(SimplicialComplex::bottom(), 2);
        CHECK(facet_notation(node, names) == "(X1X2)(Y)");
    }
    SUBCASE("top maps to the full cover") {
        ConstraintNode node = sigma(SimplicialComplex::full(2), 2);
        CHECK(facet_notation(node, names) == "(X1X2Y)");
    }
    SUBCASE("injective and order preserving on all nodes") {
        for (int n = 2; n <= 3; ++n) {
            InputLattice lat = InputLattice::enumerate(n);
            std::vector<ConstraintNode> images;
            for (const auto& node : lat.nodes()) images.push_back(sigma(node, n));
            for (std::size_t i = 0; i < images.size(); ++i)
                for (std::size_t j = 0; j < images.size(); ++j) {
                    bool lattice_leq = lat.node(i).subset_of(lat.node(j));
                    CHECK(constraint_leq(images[i], images[j]) == lattice_leq);
                    if (i != j)
                        CHECK(!(constraint_leq(images[i], images[j]) &&
                                constraint_leq(images[j], images[i])));
                }
        }
    }
    SUBCASE("image lies above the bottom cover") {
        InputLattice lat = InputLattice::enumerate(3);
        ConstraintNode bottom = sigma(SimplicialComplex::bottom(), 3);
        for (const auto& node : lat.nodes())
            CHECK(constraint_leq(bottom, sigma(node, 3)));
    }
}

TEST_CASE("facet notation parsing") {
    std::vector<std::string> names{"X1", "X2", "Y"};
    ConstraintNode node = parse_facet_notation("(X1X2)(X1Y)(X2Y)", names);
    CHECK(node.facets.size() == 3);
    CHECK(facet_notation(node, names) == "(X1X2)(X1Y)(X2Y)");

    // Separators and non-maximal faces are tolerated.
    ConstraintNode node2 = parse_facet_notation("(X1, X2)(X1)(Y)", names);
    CHECK(facet_notation(node2, names) == "(X1X2)(Y)");

    CHECK_THROWS_AS(parse_facet_notation("(X1X2)", names), std::invalid_argument);  // no cover
    CHECK_THROWS_AS(parse_facet_notation("(X9)(Y)", names), std::invalid_argument);
    CHECK_THROWS_AS(parse_facet_notation("X1X2Y", names), std::invalid_argument);
    CHECK_THROWS_AS(parse_facet_notation("(X1X2Y", names), std::invalid_argument);
}

TEST_CASE("linear extension counting") {
    SUBCASE("stated examples") {
        std::vector<Face> chain_poset{0b01, 0b10, 0b11};
        CHECK(count_linear_extensions(chain_poset) == 2);
        CHECK(count_linear_extensions({}) == 1);

        std::vector<Face> all3;
        for (Face f = 1; f < 8; ++f) all3.push_back(f);
        CHECK(count_linear_extensions(all3) == 48);
    }
    SUBCASE("duplicates rejected") {
        std::vector<Face> dup{0b01, 0b01};
        CHECK_THROWS_AS(count_linear_extensions(dup), std::invalid_argument);
    }
    SUBCASE("agrees with permutation enumeration on random sub-posets") {
        std::mt19937 rng(31);
        std::uniform_int_distribution<int> size(1, 7);
        std::uniform_int_distribution<int> face(1, 15);
        for (int trial = 0; trial < 40; ++trial) {
            std::set<Face> chosen;
            int want = size(rng);
            while (static_cast<int>(chosen.size()) < want) chosen.insert(face(rng));
            std::vector<Face> players(chosen.begin(), chosen.end());
            CHECK(count_linear_extensions(players) ==
                  test::brute_force_linear_extensions(players));
        }
    }
    SUBCASE("total chains equal extensions of the whole face poset") {
        for (int n = 1; n <= 4; ++n) {
            std::vector<Face> all;
            for (Face f = 1; f < (Face(1) << n); ++f) all.push_back(f);
            CHECK(count_linear_extensions(all) == InputLattice::enumerate(n).total_chains());
        }
    }
}
