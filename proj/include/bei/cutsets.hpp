#pragma once

#include "bei/graph.hpp"

#include <vector>

namespace bei {

// The family of vertex subsets with the cut-point property, in canonical
// order (by size, then lexicographic). The empty set is always first.
struct CutSetFamily {
    int order = 0;  // vertex count of the source graph
    std::vector<VertexSet> sets;

    bool contains(const VertexSet& t) const;
    std::size_t size() const { return sets.size(); }

    friend bool operator==(const CutSetFamily&, const CutSetFamily&) = default;
};

struct CutSetOptions {
    // Upper bound on non-free candidate vertices per connected component.
    // Values above 62 are clamped: subsets are enumerated as 64-bit masks.
    int max_candidates = 30;
    // Worker threads; 0 selects std::thread::hardware_concurrency().
    int jobs = 1;
};

// Definitional check: every i in t is a cut point of the subgraph induced on
// (V \ t) u {i}. Counts components with a union-find over induced edges,
// independent of the breadth-first counter used by compute_cutsets.
bool has_cutpoint_property(const Graph& g, const VertexSet& t);

// Pruned enumeration. For each connected component: skip free vertices,
// consider candidate subsets T with 1 <= |T| <= n - 2, discard T with
// c(T) = 1, and accept T iff c(T \ {v}) < c(T) for every v in T (first
// failure exits). Disconnected graphs combine per-component families by
// union. Output is independent of `options.jobs`.
//
// Throws CapacityError when a component has more than
// options.max_candidates non-free vertices.
CutSetFamily compute_cutsets(const Graph& g, const CutSetOptions& options = {});

inline constexpr int kNaiveCutSetMaxOrder = 20;

// Every subset of V(G) filtered by has_cutpoint_property. Single-threaded,
// no pruning. Throws CapacityError for graphs above kNaiveCutSetMaxOrder
// vertices.
CutSetFamily compute_cutsets_naive(const Graph& g);

} // namespace bei
