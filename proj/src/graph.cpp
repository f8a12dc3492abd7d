#include "bei/graph.hpp"

#include "bei/errors.hpp"

#include <algorithm>
#include <string>

namespace bei {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto by_size = a.size() <=> b.size(); by_size != 0) {
        return by_size;
    }
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) {
        return false;
    }
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexSet Graph::vertices() const {
    std::vector<Vertex> all(n_);
    for (int v = 1; v <= n_; ++v) {
        all[v - 1] = v;
    }
    return VertexSet(std::move(all));
}

Graph build_graph(int n, std::span<const Edge> edge_list) {
    if (n < 0) {
        throw ValidationError("vertex count must be non-negative, got " + std::to_string(n));
    }
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edge_list.size());
    for (std::size_t k = 0; k < edge_list.size(); ++k) {
        auto [u, v] = edge_list[k];
        auto where = "edge #" + std::to_string(k + 1) + " (" + std::to_string(u) + ", " +
                     std::to_string(v) + ")";
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ValidationError(where + ": vertex label outside 1.." + std::to_string(n));
        }
        if (u == v) {
            throw ValidationError(where + ": self-loop");
        }
        g.edges_.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adjacency_.assign(n + 1, {});
    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    return g;
}

Graph build_graph(int n, std::initializer_list<Edge> edge_list) {
    return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

ComponentPartition components_after_deletion(const Graph& g, const VertexSet& removed) {
    const int n = g.order();
    std::vector<char> seen(n + 1, 0);
    for (Vertex v : removed) {
        seen[v] = 1;
    }
    ComponentPartition partition;
    std::vector<Vertex> queue;
    for (Vertex start = 1; start <= n; ++start) {
        if (seen[start]) {
            continue;
        }
        queue.assign(1, start);
        seen[start] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        partition.blocks.emplace_back(std::move(queue));
        queue = {};
    }
    return partition;
}

ComponentPartition connected_components(const Graph& g) {
    return components_after_deletion(g, {});
}

ComponentCounter::ComponentCounter(const Graph& g)
    : graph_(&g), stamp_(g.order() + 1, 0) {
    queue_.reserve(g.order());
}

int ComponentCounter::count(std::span<const char> removed) {
    const int n = graph_->order();
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    int components = 0;
    for (Vertex start = 1; start <= n; ++start) {
        if (removed[start] || stamp_[start] == epoch_) {
            continue;
        }
        ++components;
        queue_.clear();
        queue_.push_back(start);
        stamp_[start] = epoch_;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            for (Vertex w : graph_->neighbors(queue_[head])) {
                if (!removed[w] && stamp_[w] != epoch_) {
                    stamp_[w] = epoch_;
                    queue_.push_back(w);
                }
            }
        }
    }
    return components;
}

bool is_cutvertex(const Graph& g, Vertex v) {
    return components_after_deletion(g, {v}).count() > connected_components(g).count();
}

int cycle_rank(const Graph& g) {
    return static_cast<int>(g.size()) - g.order() +
           static_cast<int>(connected_components(g).count());
}

bool is_path_graph(const Graph& g) {
    const int n = g.order();
    if (n == 0 || connected_components(g).count() != 1) {
        return false;
    }
    if (n == 1) {
        return true;
    }
    int leaves = 0;
    for (Vertex v = 1; v <= n; ++v) {
        const int d = g.degree(v);
        if (d == 1) {
            ++leaves;
        } else if (d != 2) {
            return false;
        }
    }
    return leaves == 2;
}

std::optional<UnicyclicShape> unicyclic_structure(const Graph& g) {
    const int n = g.order();
    if (n < 3 || connected_components(g).count() != 1 || cycle_rank(g) != 1) {
        return std::nullopt;
    }

    // Peel leaves; what survives is the unique cycle.
    std::vector<int> residual_degree(n + 1);
    std::vector<char> peeled(n + 1, 0);
    std::vector<Vertex> leaves;
    for (Vertex v = 1; v <= n; ++v) {
        residual_degree[v] = g.degree(v);
        if (residual_degree[v] == 1) {
            leaves.push_back(v);
        }
    }
    while (!leaves.empty()) {
        Vertex v = leaves.back();
        leaves.pop_back();
        peeled[v] = 1;
        for (Vertex w : g.neighbors(v)) {
            if (!peeled[w] && --residual_degree[w] == 1) {
                leaves.push_back(w);
            }
        }
    }

    for (Vertex v = 1; v <= n; ++v) {
        if (g.degree(v) > (peeled[v] ? 2 : 3)) {
            return std::nullopt;
        }
    }

    UnicyclicShape shape;
    Vertex first = 1;
    while (peeled[first]) {
        ++first;
    }
    Vertex prev = 0;
    Vertex current = first;
    do {
        shape.cycle.push_back(current);
        Vertex next = 0;
        for (Vertex w : g.neighbors(current)) {
            if (!peeled[w] && w != prev) {
                next = w;
                break;
            }
        }
        prev = current;
        current = next;
    } while (current != first);

    for (Vertex base : shape.cycle) {
        int length = 0;
        Vertex from = base;
        Vertex at = 0;
        for (Vertex w : g.neighbors(base)) {
            if (peeled[w]) {
                at = w;
            }
        }
        while (at != 0) {
            ++length;
            Vertex next = 0;
            for (Vertex w : g.neighbors(at)) {
                if (w != from) {
                    next = w;
                }
            }
            from = at;
            at = next;
        }
        shape.tails.push_back(length);
    }
    return shape;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<Vertex> relabel(g.order() + 1, 0);
    InducedSubgraph result;
    result.labels = keep.members();
    for (std::size_t k = 0; k < result.labels.size(); ++k) {
        relabel[result.labels[k]] = static_cast<Vertex>(k + 1);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (relabel[u] && relabel[v]) {
            edges.push_back({relabel[u], relabel[v]});
        }
    }
    result.graph = build_graph(static_cast<int>(result.labels.size()), edges);
    return result;
}

Graph cone(Vertex apex, const Graph& g) {
    const int n = g.order();
    if (apex < 1 || apex > n + 1) {
        throw ValidationError("cone apex label must lie in 1.." + std::to_string(n + 1));
    }
    auto shift = [apex](Vertex v) { return v >= apex ? v + 1 : v; };
    std::vector<Edge> edges;
    edges.reserve(g.size() + n);
    for (auto [u, v] : g.edges()) {
        edges.push_back({shift(u), shift(v)});
    }
    for (Vertex v = 1; v <= n; ++v) {
        edges.push_back({apex, shift(v)});
    }
    return build_graph(n + 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges(a.edges());
    const int offset = a.order();
    for (auto [u, v] : b.edges()) {
        edges.push_back({u + offset, v + offset});
    }
    return build_graph(a.order() + b.order(), edges);
}

Graph empty_graph(int n) {
    return build_graph(n, std::span<const Edge>{});
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.push_back({v, v + 1});
    }
    return build_graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw ValidationError("a cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.push_back({v, v + 1});
    }
    edges.push_back({1, n});
    return build_graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            edges.push_back({u, v});
        }
    }
    return build_graph(n, edges);
}

} // namespace bei
