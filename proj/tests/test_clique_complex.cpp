#include "bei/clique_complex.hpp"
#include "bei/errors.hpp"
#include "bei/fixtures.hpp"
#include "support/catalog.hpp"

#include <doctest.h>

using namespace bei;

namespace {

bool is_clique(const Graph& g, const VertexSet& s) {
    for (auto a = s.begin(); a != s.end(); ++a) {
        for (auto b = std::next(a); b != s.end(); ++b) {
            if (!g.adjacent(*a, *b)) {
                return false;
            }
        }
    }
    return true;
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Every maximal clique, by testing all vertex subsets.
std::vector<VertexSet> brute_force_facets(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> cliques;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> members;
        for (Vertex v = 1; v <= n; ++v) {
            if (mask >> (v - 1) & 1) {
                members.push_back(v);
            }
        }
        VertexSet s(members);
        if (is_clique(g, s)) {
            cliques.push_back(s);
        }
    }
    std::vector<VertexSet> maximal;
    for (const auto& c : cliques) {
        bool dominated = false;
        for (const auto& d : cliques) {
            if (d.size() > c.size() && subset_of(c, d)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            maximal.push_back(c);
        }
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

} // namespace

TEST_CASE("maximal_cliques on small graphs") {
    CHECK(maximal_cliques(fixtures::claw()).facets ==
          std::vector<VertexSet>{{1, 2}, {1, 3}, {1, 4}});
    CHECK(maximal_cliques(complete_graph(3)).facets == std::vector<VertexSet>{{1, 2, 3}});
    CHECK(maximal_cliques(fixtures::fan()).facets ==
          std::vector<VertexSet>{{1, 2}, {5, 6}, {2, 3, 4}, {2, 4, 5}});
    CHECK(maximal_cliques(empty_graph(2)).facets == std::vector<VertexSet>{{1}, {2}});
    CHECK(maximal_cliques(empty_graph(0)).facets.empty());
}

TEST_CASE("maximal_cliques honours the facet ceiling") {
    CHECK_THROWS_AS(maximal_cliques(fixtures::claw(), 2), CapacityError);
    CHECK_NOTHROW(maximal_cliques(fixtures::claw(), 3));
}

TEST_CASE("free_vertices") {
    CHECK(free_vertices(fixtures::claw()) == VertexSet{2, 3, 4});
    CHECK(free_vertices(path_graph(3)) == VertexSet{1, 3});
    CHECK(free_vertices(complete_graph(5)) == VertexSet{1, 2, 3, 4, 5});
    CHECK(free_vertices(fixtures::fan()) == VertexSet{1, 3, 6});
}

TEST_CASE("exhaustive: facets match brute force and free-vertex routes agree") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& g : testing::all_labeled_graphs(n)) {
            auto complex = maximal_cliques(g);
            REQUIRE(complex.facets == brute_force_facets(g));
            CHECK(free_vertices(g) == free_vertices_from_facets(complex, n));
        }
    }
    for (const auto& g : testing::graphs_up_to_iso(7)) {
        auto complex = maximal_cliques(g);
        CHECK(free_vertices(g) == free_vertices_from_facets(complex, 7));
    }
}

TEST_CASE("facet invariants: cliques, antichain, cover vertices and edges") {
    for (const auto& g : testing::graphs_up_to_iso(6)) {
        const auto& facets = maximal_cliques(g).facets;
        for (std::size_t a = 0; a < facets.size(); ++a) {
            CHECK(is_clique(g, facets[a]));
            for (std::size_t b = 0; b < facets.size(); ++b) {
                if (a != b) {
                    CHECK_FALSE(subset_of(facets[a], facets[b]));
                }
            }
        }
        for (Vertex v = 1; v <= g.order(); ++v) {
            CHECK(std::any_of(facets.begin(), facets.end(),
                              [&](const VertexSet& f) { return f.contains(v); }));
        }
        for (auto [u, v] : g.edges()) {
            CHECK(std::any_of(facets.begin(), facets.end(), [&](const VertexSet& f) {
                return f.contains(u) && f.contains(v);
            }));
        }
    }
}

TEST_CASE("a free vertex is never a cut vertex of a connected graph") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& g : testing::connected_graphs_up_to_iso(n)) {
            for (Vertex v : free_vertices(g)) {
                CHECK_FALSE(is_cutvertex(g, v));
            }
        }
    }
}
