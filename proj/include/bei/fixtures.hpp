#pragma once

#include "bei/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bei::fixtures {

// Star K_{1,3} centred at 1.
Graph claw();

// Triangle strip 2-3-4-5 coned at 2, with pendant 1 at 2 and 6 at 5.
Graph fan();

// Unmixed, deviation 2, bipartite; 7 vertices, 8 edges.
Graph dev2();

// Unmixed, deviation 2, with induced 5-cycles; 9 vertices, 10 edges.
Graph dev2bis();

// Resolves a CLI fixture name with integer parameters ("g3 2 2 2").
// Returns nullopt for an unknown name or the wrong number of parameters.
std::optional<Graph> by_name(std::string_view name, const std::vector<int>& params);

std::vector<std::string> names();

// A recorded external result about a named fixture, used as a citation in
// classification reports. Empty when the graph is not a known fixture.
std::string known_result(const Graph& g);

} // namespace bei::fixtures
