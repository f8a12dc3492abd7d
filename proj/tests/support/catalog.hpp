#pragma once

// Graph generators for exhaustive and randomized tests.

#include "bei/graph.hpp"

#include <random>
#include <vector>

namespace bei::testing {

// One representative per isomorphism class of graphs on exactly n vertices
// (n <= 8), built by vertex extension with a degree-refined canonical form.
std::vector<Graph> graphs_up_to_iso(int n);
std::vector<Graph> connected_graphs_up_to_iso(int n);

// Every labeled graph on n vertices (n <= 6).
std::vector<Graph> all_labeled_graphs(int n);

Graph relabel_randomly(const Graph& g, std::mt19937_64& rng);

// Random labeled tree plus each remaining pair with probability p.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

// Random labeled tree plus one extra edge (n >= 3).
Graph random_unicyclic_graph(int n, std::mt19937_64& rng);

// Cycle 1..l with a path of tails[k] extra vertices attached at vertex k + 1.
Graph cycle_with_tails(const std::vector<int>& tails);

// All cycle_with_tails graphs with 3 <= l and l + sum(tails) <= max_n.
std::vector<Graph> cycle_with_tails_catalog(int max_n);

// Component count by union-find over the edge list, with `removed` deleted.
int union_find_components(const Graph& g, const VertexSet& removed);

} // namespace bei::testing
