#include "bei/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bei {

std::vector<BinomialGenerator> generators(const Graph& g) {
    std::vector<BinomialGenerator> out;
    out.reserve(g.size());
    for (auto [u, v] : g.edges()) {
        out.push_back({u, v});
    }
    return out;
}

PrimeComponent prime_component(const Graph& g, const VertexSet& killed) {
    auto partition = components_after_deletion(g, killed);
    PrimeComponent p;
    p.killed = killed;
    p.height = g.order() + static_cast<int>(killed.size()) - static_cast<int>(partition.count());
    p.blocks = std::move(partition.blocks);
    return p;
}

Decomposition minimal_primes(const Graph& g, const CutSetOptions& options) {
    Decomposition d;
    d.order = g.order();
    d.cutsets = compute_cutsets(g, options);
    d.components.reserve(d.cutsets.size());
    for (const auto& t : d.cutsets.sets) {
        d.components.push_back(prime_component(g, t));
    }

    auto [lo, hi] = std::minmax_element(
        d.components.begin(), d.components.end(),
        [](const PrimeComponent& a, const PrimeComponent& b) { return a.height < b.height; });
    d.min_height = lo->height;
    d.unmixed = lo->height == hi->height;
    d.krull_dimension = 2 * g.order() - d.min_height;
    d.mu = static_cast<int>(g.size());
    d.deviation = d.mu - d.min_height;

    // components[0] is P_∅.
    if (d.components.front().height == d.min_height && d.deviation != cycle_rank(g)) {
        throw std::logic_error("deviation " + std::to_string(d.deviation) +
                               " differs from cycle rank " + std::to_string(cycle_rank(g)) +
                               " although P_∅ has minimum height");
    }
    return d;
}

bool unmixed_by_cut_criterion(const Graph& g, const CutSetFamily& family) {
    return std::all_of(family.sets.begin(), family.sets.end(), [&](const VertexSet& t) {
        return components_after_deletion(g, t).count() == t.size() + 1;
    });
}

bool unmixed_by_heights(const Decomposition& d) {
    return std::all_of(d.components.begin(), d.components.end(),
                       [&](const PrimeComponent& p) { return p.height == d.min_height; });
}

bool is_unmixed(const Graph& g, const CutSetOptions& options) {
    if (connected_components(g).count() == 1) {
        return unmixed_by_cut_criterion(g, compute_cutsets(g, options));
    }
    return unmixed_by_heights(minimal_primes(g, options));
}

int deviation(const Graph& g, const CutSetOptions& options) {
    return minimal_primes(g, options).deviation;
}

} // namespace bei
