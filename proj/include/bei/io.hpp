#pragma once

#include "bei/classification.hpp"
#include "bei/graph.hpp"
#include "bei/ideal.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bei {

enum class GraphFormat {
    // "n" on the first line, then one "u v" pair per line; '#' starts a comment.
    EdgeList,
    // {"n": 4, "edges": [[1, 2], ...], "name": "optional"}
    Structured,
};

struct GraphDocument {
    int n = 0;
    std::vector<std::array<int, 2>> edges;
    std::optional<std::string> name;
};

// Throws ParseError with a line (edge list) or byte (structured) position,
// and ValidationError for labels outside 1..n or self-loops.
GraphDocument parse_graph_document(std::istream& in, GraphFormat format);
Graph to_graph(const GraphDocument& doc);
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(std::string_view text, GraphFormat format);

std::string write_graph(const Graph& g, GraphFormat format,
                        const std::optional<std::string>& name = std::nullopt);

struct ComponentRecord {
    std::vector<int> killed;
    std::vector<std::vector<int>> blocks;
    int height = 0;

    friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

// Flat, serializable view of a Decomposition plus its ClassificationReport.
struct ReportDocument {
    std::optional<std::string> name;
    int n = 0;
    int num_edges = 0;
    std::vector<std::vector<int>> cut_sets;
    std::vector<ComponentRecord> components;
    int min_height = 0;
    bool unmixed = true;
    int krull_dimension = 0;
    int mu = 0;
    int deviation = 0;
    bool complete_intersection = false;
    // "G3", "G4" or empty for none.
    std::string family;
    std::vector<int> family_params;
    std::string cm_verdict;
    std::string cm_reason;
    std::vector<std::string> reasons;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_report(const Decomposition& d, const ClassificationReport& c,
                           const std::optional<std::string>& name = std::nullopt);

nlohmann::ordered_json to_json(const ReportDocument& report);
// Only the classification fields.
nlohmann::ordered_json classification_json(const ReportDocument& report);
ReportDocument report_from_json(const nlohmann::json& j);

// Pretty-printed, newline-terminated.
std::string dump(const nlohmann::ordered_json& j);

} // namespace bei
