#include "bei/classification.hpp"

#include "bei/errors.hpp"
#include "bei/fixtures.hpp"
#include "bei/ideal.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bei {

namespace {

std::vector<Edge> path_edges(Vertex first, int length) {
    std::vector<Edge> edges;
    for (int k = 0; k + 1 < length; ++k) {
        edges.push_back({first + k, first + k + 1});
    }
    return edges;
}

} // namespace

bool is_complete_intersection(const Graph& g) {
    for (const auto& block : connected_components(g).blocks) {
        if (!is_path_graph(induced_subgraph(g, block).graph)) {
            return false;
        }
    }
    return true;
}

std::optional<G3Params> recognize_g3(const Graph& g) {
    auto shape = unicyclic_structure(g);
    if (!shape || shape->cycle.size() != 3) {
        return std::nullopt;
    }
    std::array<int, 3> p{shape->tails[0] + 1, shape->tails[1] + 1, shape->tails[2] + 1};
    std::sort(p.begin(), p.end());
    return G3Params{p[0], p[1], p[2]};
}

std::optional<G4Params> recognize_g4(const Graph& g) {
    auto shape = unicyclic_structure(g);
    if (!shape || shape->cycle.size() != 4) {
        return std::nullopt;
    }
    const auto& tails = shape->tails;
    // Two adjacent tailed cycle vertices k, k+1; the other two bare.
    for (int k = 0; k < 4; ++k) {
        const int a = tails[k];
        const int b = tails[(k + 1) % 4];
        if (a >= 1 && b >= 1 && tails[(k + 2) % 4] == 0 && tails[(k + 3) % 4] == 0) {
            return G4Params{std::min(a, b) + 2, std::max(a, b) + 2};
        }
    }
    return std::nullopt;
}

Graph build_g3(int r, int s, int t) {
    if (r < 1 || s < 1 || t < 1) {
        throw ValidationError("G3 parameters must be at least 1");
    }
    const Vertex u1 = 1;
    const Vertex v1 = r + 1;
    const Vertex w1 = r + s + 1;
    std::vector<Edge> edges = path_edges(u1, r);
    for (auto e : path_edges(v1, s)) {
        edges.push_back(e);
    }
    for (auto e : path_edges(w1, t)) {
        edges.push_back(e);
    }
    edges.insert(edges.end(), {{u1, v1}, {u1, w1}, {v1, w1}});
    return build_graph(r + s + t, edges);
}

Graph build_g4(int r, int s) {
    if (r < 2 || s < 2) {
        throw ValidationError("G4 constructor needs paths of at least 2 vertices");
    }
    const Vertex u1 = 1;
    const Vertex v1 = r + 1;
    std::vector<Edge> edges = path_edges(u1, r);
    for (auto e : path_edges(v1, s)) {
        edges.push_back(e);
    }
    edges.insert(edges.end(), {{u1, v1}, {u1 + 1, v1 + 1}});
    return build_graph(r + s, edges);
}

const char* to_string(CmStatus status) {
    switch (status) {
    case CmStatus::Yes:
        return "yes";
    case CmStatus::No:
        return "no";
    case CmStatus::Unknown:
        break;
    }
    return "unknown";
}

ClassificationReport classify(const Graph& g, const CutSetOptions& options) {
    return classify(g, minimal_primes(g, options));
}

ClassificationReport classify(const Graph& g, const Decomposition& d) {
    ClassificationReport report;
    report.deviation = d.deviation;
    report.unmixed = d.unmixed;
    report.complete_intersection = is_complete_intersection(g);

    if (report.complete_intersection != (d.deviation == 0 && d.unmixed)) {
        throw std::logic_error("path-component test disagrees with deviation 0");
    }

    if (report.complete_intersection) {
        report.cohen_macaulay = {CmStatus::Yes,
                                 "complete intersection: every component is a path"};
        report.reasons.push_back("deviation 0 holds exactly when every component is a path");
    } else if (d.deviation == 1) {
        // All components but one must be paths, the remaining one unicyclic.
        std::optional<Graph> odd_one;
        bool shaped = true;
        for (const auto& block : connected_components(g).blocks) {
            auto sub = induced_subgraph(g, block).graph;
            if (is_path_graph(sub)) {
                continue;
            }
            if (odd_one || cycle_rank(sub) != 1) {
                shaped = false;
            }
            odd_one = std::move(sub);
        }
        if (shaped && odd_one) {
            if (auto p = recognize_g3(*odd_one)) {
                report.family = *p;
            } else if (auto q = recognize_g4(*odd_one)) {
                report.family = *q;
            }
        }
        const bool in_family = !std::holds_alternative<std::monostate>(report.family);
        if (in_family != d.unmixed) {
            throw std::logic_error(
                "almost complete intersection: G3/G4 membership disagrees with unmixedness");
        }
        if (d.unmixed) {
            report.cohen_macaulay = {
                CmStatus::Yes,
                "almost complete intersection whose non-path component lies in G3 or G4"};
        } else {
            report.cohen_macaulay = {
                CmStatus::No, "not unmixed; for almost complete intersections Cohen-Macaulay, "
                              "unmixed and G3/G4 membership coincide"};
        }
        report.reasons.push_back("deviation 1: Cohen-Macaulay iff unmixed iff the non-path "
                                 "component is in G3 or G4");
    } else if (!d.unmixed) {
        report.cohen_macaulay = {CmStatus::No,
                                 "not unmixed; unmixedness is necessary for Cohen-Macaulay"};
    } else {
        report.cohen_macaulay = {CmStatus::Unknown, ""};
        report.reasons.push_back(
            "deviation >= 2 and unmixed: no combinatorial criterion applies; compare depth "
            "and dimension with the exported CAS script");
    }

    if (g.size() == 0) {
        report.reasons.push_back("no edges: J_G is the zero ideal");
    }
    if (auto note = fixtures::known_result(g); !note.empty()) {
        report.reasons.push_back(std::move(note));
    }
    return report;
}

} // namespace bei
