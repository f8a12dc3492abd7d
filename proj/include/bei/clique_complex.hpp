#pragma once

#include "bei/graph.hpp"

#include <cstddef>
#include <vector>

namespace bei {

// Facets (maximal cliques) of the clique complex, in canonical order.
struct CliqueComplexFacets {
    std::vector<VertexSet> facets;
};

inline constexpr std::size_t kDefaultMaxFacets = 1'000'000;

// Bron-Kerbosch with Tomita pivoting. Throws CapacityError once more than
// `max_facets` facets have been found.
CliqueComplexFacets maximal_cliques(const Graph& g, std::size_t max_facets = kDefaultMaxFacets);

// Vertices lying in exactly one facet, decided by checking whether the
// neighbourhood of each vertex is a clique.
VertexSet free_vertices(const Graph& g);

// Same set, obtained by counting facet memberships.
VertexSet free_vertices_from_facets(const CliqueComplexFacets& complex, int n);

} // namespace bei
