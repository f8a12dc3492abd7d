#include "bei/clique_complex.hpp"

#include "bei/errors.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace bei {

namespace {

std::vector<Vertex> intersect(const std::vector<Vertex>& sorted, std::span<const Vertex> other) {
    std::vector<Vertex> out;
    std::set_intersection(sorted.begin(), sorted.end(), other.begin(), other.end(),
                          std::back_inserter(out));
    return out;
}

class BronKerbosch {
public:
    BronKerbosch(const Graph& g, std::size_t max_facets) : g_(g), max_facets_(max_facets) {}

    std::vector<VertexSet> run() {
        std::vector<Vertex> candidates;
        for (Vertex v = 1; v <= g_.order(); ++v) {
            candidates.push_back(v);
        }
        std::vector<Vertex> clique;
        expand(clique, std::move(candidates), {});
        return std::move(facets_);
    }

private:
    void expand(std::vector<Vertex>& clique, std::vector<Vertex> candidates,
                std::vector<Vertex> excluded) {
        if (candidates.empty()) {
            if (excluded.empty()) {
                if (facets_.size() >= max_facets_) {
                    throw CapacityError("clique complex has more than " +
                                        std::to_string(max_facets_) + " facets");
                }
                facets_.emplace_back(clique);
            }
            return;
        }

        // Pivot on the vertex covering the most candidates.
        Vertex pivot = 0;
        std::size_t best = 0;
        for (const auto* pool : {&candidates, &excluded}) {
            for (Vertex u : *pool) {
                auto covered = intersect(candidates, g_.neighbors(u)).size();
                if (pivot == 0 || covered > best) {
                    pivot = u;
                    best = covered;
                }
            }
        }

        std::vector<Vertex> branch;
        auto pivot_nbrs = g_.neighbors(pivot);
        std::set_difference(candidates.begin(), candidates.end(), pivot_nbrs.begin(),
                            pivot_nbrs.end(), std::back_inserter(branch));

        for (Vertex v : branch) {
            clique.push_back(v);
            expand(clique, intersect(candidates, g_.neighbors(v)),
                   intersect(excluded, g_.neighbors(v)));
            clique.pop_back();
            candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
            excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
        }
    }

    const Graph& g_;
    std::size_t max_facets_;
    std::vector<VertexSet> facets_;
};

} // namespace

CliqueComplexFacets maximal_cliques(const Graph& g, std::size_t max_facets) {
    if (g.order() == 0) {
        return {};
    }
    CliqueComplexFacets complex{BronKerbosch(g, max_facets).run()};
    std::sort(complex.facets.begin(), complex.facets.end());
    return complex;
}

VertexSet free_vertices(const Graph& g) {
    std::vector<Vertex> free;
    for (Vertex v = 1; v <= g.order(); ++v) {
        auto nbrs = g.neighbors(v);
        bool clique = true;
        for (std::size_t a = 0; clique && a < nbrs.size(); ++a) {
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                if (!g.adjacent(nbrs[a], nbrs[b])) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) {
            free.push_back(v);
        }
    }
    return VertexSet(std::move(free));
}

VertexSet free_vertices_from_facets(const CliqueComplexFacets& complex, int n) {
    std::vector<int> memberships(n + 1, 0);
    for (const auto& facet : complex.facets) {
        for (Vertex v : facet) {
            ++memberships[v];
        }
    }
    std::vector<Vertex> free;
    for (Vertex v = 1; v <= n; ++v) {
        if (memberships[v] == 1) {
            free.push_back(v);
        }
    }
    return VertexSet(std::move(free));
}

} // namespace bei
