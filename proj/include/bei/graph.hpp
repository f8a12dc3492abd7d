#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bei {

// Vertices are labeled 1..n.
using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free set of vertex labels.
//
// Ordering is canonical for families of sets: by size first, then
// lexicographically. Every sorted list of sets in this library uses it.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

private:
    std::vector<Vertex> members_;
};

// Immutable simple undirected graph on vertices 1..n.
class Graph {
public:
    // The zero graph (n = 0).
    Graph() = default;

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    // Canonical edges (u < v), sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted neighbors of v.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    VertexSet vertices() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    friend Graph build_graph(int n, std::span<const Edge> edge_list);

    int n_ = 0;
    std::vector<Edge> edges_;
    // Index 0 is unused so that adjacency_[v] is addressed by label.
    std::vector<std::vector<Vertex>> adjacency_{1};
};

// Validates and canonicalizes an edge list. Duplicates (in either
// orientation) collapse; self-loops and labels outside 1..n throw
// ValidationError.
Graph build_graph(int n, std::span<const Edge> edge_list);
Graph build_graph(int n, std::initializer_list<Edge> edge_list);

// Connected components of the subgraph induced on V(G) \ removed.
struct ComponentPartition {
    // Ordered by smallest member.
    std::vector<VertexSet> blocks;

    std::size_t count() const { return blocks.size(); }
};

ComponentPartition components_after_deletion(const Graph& g, const VertexSet& removed);
ComponentPartition connected_components(const Graph& g);

// Counts components of G minus a deleted vertex mask by breadth-first search.
// Holds per-worker scratch space; one instance must not be shared between
// threads. The graph must outlive the counter.
class ComponentCounter {
public:
    explicit ComponentCounter(const Graph& g);

    // removed[v] != 0 marks v as deleted; removed.size() == order() + 1.
    int count(std::span<const char> removed);

private:
    const Graph* graph_;
    std::vector<int> stamp_;
    std::vector<Vertex> queue_;
    int epoch_ = 0;
};

bool is_cutvertex(const Graph& g, Vertex v);

// |E| - |V| + c.
int cycle_rank(const Graph& g);

// True iff g is a single path (a lone vertex counts).
bool is_path_graph(const Graph& g);

// A connected graph made of one cycle with disjoint paths hanging off single
// cycle vertices.
struct UnicyclicShape {
    // Cycle vertices in traversal order, starting at the smallest label and
    // continuing to its smaller cycle neighbour.
    std::vector<Vertex> cycle;
    // tails[k] is the number of off-cycle vertices on the path attached at
    // cycle[k] (0 if none).
    std::vector<int> tails;
};

std::optional<UnicyclicShape> unicyclic_structure(const Graph& g);

// Subgraph induced on `keep`, relabeled 1..|keep| in increasing label order.
// labels[k] is the original label of new vertex k + 1.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> labels;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Inserts a new vertex with label `apex` adjacent to every vertex of g.
// Existing labels >= apex shift up by one. Requires 1 <= apex <= n + 1.
Graph cone(Vertex apex, const Graph& g);

// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

} // namespace bei
