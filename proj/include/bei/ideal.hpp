#pragma once

#include "bei/cutsets.hpp"
#include "bei/graph.hpp"

#include <vector>

namespace bei {

// Symbolic generator x_i*y_j - x_j*y_i of the binomial edge ideal, i < j.
struct BinomialGenerator {
    Vertex i;
    Vertex j;

    friend auto operator<=>(const BinomialGenerator&, const BinomialGenerator&) = default;
};

// One generator per edge, in canonical edge order.
std::vector<BinomialGenerator> generators(const Graph& g);

// The prime P_T: the variables x_i, y_i for i in `killed`, plus the 2-minors
// of the complete graph on each block of G restricted to V \ killed.
struct PrimeComponent {
    VertexSet killed;
    std::vector<VertexSet> blocks;
    // n + |T| - c(T)
    int height = 0;

    friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

PrimeComponent prime_component(const Graph& g, const VertexSet& killed);

// Minimal primes of J_G and the invariants derived from them.
struct Decomposition {
    int order = 0;
    CutSetFamily cutsets;
    // components[k] is P_T for T = cutsets.sets[k].
    std::vector<PrimeComponent> components;
    int min_height = 0;
    bool unmixed = true;
    // dim S/J_G = 2n - min_height
    int krull_dimension = 0;
    // Minimal generator count of J_G, |E(G)|.
    int mu = 0;
    // mu - min_height
    int deviation = 0;
};

// Throws std::logic_error if the deviation disagrees with the cycle rank in
// a case where the minimum height is attained by P_∅.
Decomposition minimal_primes(const Graph& g, const CutSetOptions& options = {});

// Connected graphs only: c(T) = |T| + 1 for every T in the family.
bool unmixed_by_cut_criterion(const Graph& g, const CutSetFamily& family);

// Any graph: all minimal primes have the same height.
bool unmixed_by_heights(const Decomposition& d);

// Uses the cut-count criterion on connected graphs and equal heights
// otherwise.
bool is_unmixed(const Graph& g, const CutSetOptions& options = {});

int deviation(const Graph& g, const CutSetOptions& options = {});

} // namespace bei
