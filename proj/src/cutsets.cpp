#include "bei/cutsets.hpp"

#include "bei/clique_complex.hpp"
#include "bei/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>

namespace bei {

bool CutSetFamily::contains(const VertexSet& t) const {
    return std::binary_search(sets.begin(), sets.end(), t);
}

namespace {

// Minimal union-find; kept local so the oracle side shares nothing with the
// breadth-first counter.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

int induced_component_count(const Graph& g, const std::vector<char>& keep) {
    DisjointSets sets(g.order());
    int components = 0;
    for (Vertex v = 1; v <= g.order(); ++v) {
        components += keep[v] ? 1 : 0;
    }
    for (auto [u, v] : g.edges()) {
        if (keep[u] && keep[v] && sets.unite(u, v)) {
            --components;
        }
    }
    return components;
}

// Algorithm over one connected graph. Returns accepted subsets as masks over
// `candidates`.
std::vector<std::uint64_t> connected_cutset_masks(const Graph& g,
                                                  const std::vector<Vertex>& candidates,
                                                  int jobs) {
    const int n = g.order();
    const int m = static_cast<int>(candidates.size());
    const int max_size = n - 2;

    // Task j covers every subset whose lowest candidate index is j.
    auto run_task = [&](int j, ComponentCounter& counter, std::vector<char>& removed,
                        std::vector<std::uint64_t>& accepted) {
        const int rest = m - j - 1;
        const std::uint64_t limit = std::uint64_t{1} << rest;
        for (std::uint64_t high = 0; high < limit; ++high) {
            const std::uint64_t mask = (high << (j + 1)) | (std::uint64_t{1} << j);
            const int size = std::popcount(mask);
            if (size > max_size) {
                continue;
            }
            for (int b = 0; b < m; ++b) {
                removed[candidates[b]] = (mask >> b) & 1;
            }
            const int c = counter.count(removed);
            if (c <= 1) {
                continue;
            }
            bool ok = true;
            for (std::uint64_t rest_bits = mask; ok && rest_bits; rest_bits &= rest_bits - 1) {
                const Vertex v = candidates[std::countr_zero(rest_bits)];
                removed[v] = 0;
                ok = counter.count(removed) < c;
                removed[v] = 1;
            }
            if (ok) {
                accepted.push_back(mask);
            }
        }
    };

    std::vector<std::uint64_t> accepted;
    if (jobs <= 1 || m < 2) {
        ComponentCounter counter(g);
        std::vector<char> removed(n + 1, 0);
        for (int j = 0; j < m; ++j) {
            run_task(j, counter, removed, accepted);
        }
        return accepted;
    }

    std::atomic<int> next{0};
    std::vector<std::vector<std::uint64_t>> per_worker(jobs);
    {
        std::vector<std::jthread> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                ComponentCounter counter(g);
                std::vector<char> removed(n + 1, 0);
                for (int j = next++; j < m; j = next++) {
                    run_task(j, counter, removed, per_worker[w]);
                }
            });
        }
    }
    for (auto& part : per_worker) {
        accepted.insert(accepted.end(), part.begin(), part.end());
    }
    return accepted;
}

std::vector<VertexSet> connected_cutsets(const Graph& g, const CutSetOptions& options) {
    std::vector<VertexSet> family{VertexSet{}};
    if (g.order() < 3) {
        return family;
    }
    const auto free = free_vertices(g);
    std::vector<Vertex> candidates;
    for (Vertex v = 1; v <= g.order(); ++v) {
        if (!free.contains(v)) {
            candidates.push_back(v);
        }
    }
    const int bound = std::min(options.max_candidates, 62);
    if (static_cast<int>(candidates.size()) > bound) {
        throw CapacityError(std::to_string(candidates.size()) +
                            " non-free candidate vertices exceed the enumeration bound of " +
                            std::to_string(bound));
    }
    int jobs = options.jobs;
    if (jobs <= 0) {
        jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    for (std::uint64_t mask : connected_cutset_masks(g, candidates, jobs)) {
        std::vector<Vertex> members;
        for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
            members.push_back(candidates[std::countr_zero(bits)]);
        }
        family.emplace_back(std::move(members));
    }
    return family;
}

} // namespace

bool has_cutpoint_property(const Graph& g, const VertexSet& t) {
    std::vector<char> keep(g.order() + 1, 1);
    keep[0] = 0;
    for (Vertex v : t) {
        keep[v] = 0;
    }
    for (Vertex i : t) {
        keep[i] = 1;
        const int with_i = induced_component_count(g, keep);
        keep[i] = 0;
        const int without_i = induced_component_count(g, keep);
        if (without_i <= with_i) {
            return false;
        }
    }
    return true;
}

CutSetFamily compute_cutsets(const Graph& g, const CutSetOptions& options) {
    std::vector<VertexSet> combined{VertexSet{}};
    for (const auto& block : connected_components(g).blocks) {
        auto sub = induced_subgraph(g, block);
        auto local = connected_cutsets(sub.graph, options);
        if (local.size() == 1) {
            continue;
        }
        std::vector<VertexSet> next;
        next.reserve(combined.size() * local.size());
        for (const auto& base : combined) {
            for (const auto& extra : local) {
                std::vector<Vertex> members = base.members();
                for (Vertex v : extra) {
                    members.push_back(sub.labels[v - 1]);
                }
                next.emplace_back(std::move(members));
            }
        }
        combined = std::move(next);
    }
    std::sort(combined.begin(), combined.end());
    return CutSetFamily{g.order(), std::move(combined)};
}

CutSetFamily compute_cutsets_naive(const Graph& g) {
    const int n = g.order();
    if (n > kNaiveCutSetMaxOrder) {
        throw CapacityError("naive cut-set enumeration is limited to " +
                            std::to_string(kNaiveCutSetMaxOrder) + " vertices, got " +
                            std::to_string(n));
    }
    CutSetFamily family{n, {}};
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<Vertex> members;
        for (Vertex v = 1; v <= n; ++v) {
            if (mask >> (v - 1) & 1) {
                members.push_back(v);
            }
        }
        VertexSet t(std::move(members));
        if (has_cutpoint_property(g, t)) {
            family.sets.push_back(std::move(t));
        }
    }
    std::sort(family.sets.begin(), family.sets.end());
    return family;
}

} // namespace bei
