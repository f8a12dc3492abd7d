#include "bei/fixtures.hpp"

#include "bei/classification.hpp"

namespace bei::fixtures {

Graph claw() {
    return build_graph(4, {{1, 2}, {1, 3}, {1, 4}});
}

Graph fan() {
    return build_graph(6, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}, {5, 6}});
}

Graph dev2() {
    return build_graph(7, {{1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {3, 6}, {5, 6}, {6, 7}});
}

Graph dev2bis() {
    return build_graph(
        9, {{1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {3, 6}, {6, 8}, {5, 7}, {7, 9}, {6, 7}});
}

std::optional<Graph> by_name(std::string_view name, const std::vector<int>& params) {
    auto arity = [&](std::size_t k) { return params.size() == k; };
    if (name == "claw" && arity(0)) {
        return claw();
    }
    if (name == "fan" && arity(0)) {
        return fan();
    }
    if (name == "dev2" && arity(0)) {
        return dev2();
    }
    if (name == "dev2bis" && arity(0)) {
        return dev2bis();
    }
    if (name == "g3" && arity(3)) {
        return build_g3(params[0], params[1], params[2]);
    }
    if (name == "g4" && arity(2)) {
        return build_g4(params[0], params[1]);
    }
    return std::nullopt;
}

std::vector<std::string> names() {
    return {"claw", "fan", "g3 R S T", "g4 R S", "dev2", "dev2bis"};
}

std::string known_result(const Graph& g) {
    if (g == dev2()) {
        return "known fixture dev2: an external CAS computation gives depth 7 < dim 8, so it is "
               "not Cohen-Macaulay";
    }
    if (g == dev2bis()) {
        return "known fixture dev2bis: an external CAS computation gives depth 9 < dim 10, so "
               "it is not Cohen-Macaulay";
    }
    if (g == fan()) {
        return "known fixture fan: Cohen-Macaulay by gluing a Cohen-Macaulay cone and an edge "
               "at a free vertex";
    }
    return {};
}

} // namespace bei::fixtures
