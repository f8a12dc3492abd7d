#include "bei/io.hpp"

#include "bei/errors.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace bei {

namespace {

std::string at_line(int line) {
    return "line " + std::to_string(line) + ": ";
}

// Splits a comment-stripped line into integer fields.
std::vector<long long> integer_fields(std::string_view text, int line) {
    std::vector<long long> fields;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) {
            ++pos;
        }
        if (pos == text.size()) {
            break;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\r') {
            ++end;
        }
        long long value = 0;
        auto token = text.substr(pos, end - pos);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError(at_line(line) + "expected an integer, got '" + std::string(token) +
                             "'");
        }
        fields.push_back(value);
        pos = end;
    }
    return fields;
}

GraphDocument parse_edge_list(std::istream& in) {
    GraphDocument doc;
    bool have_n = false;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = raw;
        if (auto hash = text.find('#'); hash != std::string_view::npos) {
            text = text.substr(0, hash);
        }
        auto fields = integer_fields(text, line);
        if (fields.empty()) {
            continue;
        }
        if (!have_n) {
            if (fields.size() != 1) {
                throw ParseError(at_line(line) + "expected the vertex count on its own line");
            }
            if (fields[0] < 0 || fields[0] > 1'000'000'000) {
                throw ValidationError(at_line(line) + "vertex count out of range");
            }
            doc.n = static_cast<int>(fields[0]);
            have_n = true;
            continue;
        }
        if (fields.size() != 2) {
            throw ParseError(at_line(line) + "expected two vertex labels, got " +
                             std::to_string(fields.size()) + " fields");
        }
        for (auto f : fields) {
            if (f < 1 || f > doc.n) {
                throw ValidationError(at_line(line) + "vertex label " + std::to_string(f) +
                                      " outside 1.." + std::to_string(doc.n));
            }
        }
        if (fields[0] == fields[1]) {
            throw ValidationError(at_line(line) + "self-loop at vertex " +
                                  std::to_string(fields[0]));
        }
        doc.edges.push_back({static_cast<int>(fields[0]), static_cast<int>(fields[1])});
    }
    if (!have_n) {
        throw ParseError("missing vertex count");
    }
    return doc;
}

GraphDocument parse_structured(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte) + ": malformed JSON document");
    }
    if (!j.is_object()) {
        throw ParseError("graph document must be a JSON object");
    }
    GraphDocument doc;
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw ParseError("field 'n' must be an integer");
    }
    doc.n = j["n"].get<int>();
    if (j.contains("edges")) {
        const auto& edges = j["edges"];
        if (!edges.is_array()) {
            throw ParseError("field 'edges' must be an array");
        }
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const auto& e = edges[k];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer()) {
                throw ParseError("edges[" + std::to_string(k) + "] must be a pair of integers");
            }
            doc.edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
    }
    if (j.contains("name")) {
        if (!j["name"].is_string()) {
            throw ParseError("field 'name' must be a string");
        }
        doc.name = j["name"].get<std::string>();
    }
    return doc;
}

std::vector<int> to_ints(const VertexSet& s) {
    return {s.begin(), s.end()};
}

} // namespace

GraphDocument parse_graph_document(std::istream& in, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(in) : parse_structured(in);
}

Graph to_graph(const GraphDocument& doc) {
    std::vector<Edge> edges;
    edges.reserve(doc.edges.size());
    for (auto [u, v] : doc.edges) {
        edges.push_back({u, v});
    }
    return build_graph(doc.n, edges);
}

Graph parse_graph(std::istream& in, GraphFormat format) {
    return to_graph(parse_graph_document(in, format));
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    std::istringstream in{std::string(text)};
    return parse_graph(in, format);
}

std::string write_graph(const Graph& g, GraphFormat format,
                        const std::optional<std::string>& name) {
    if (format == GraphFormat::Structured) {
        nlohmann::ordered_json j;
        if (name) {
            j["name"] = *name;
        }
        j["n"] = g.order();
        j["edges"] = nlohmann::ordered_json::array();
        for (auto [u, v] : g.edges()) {
            j["edges"].push_back({u, v});
        }
        return j.dump() + "\n";
    }
    std::string out;
    if (name) {
        out += "# " + *name + "\n";
    }
    out += std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

ReportDocument make_report(const Decomposition& d, const ClassificationReport& c,
                           const std::optional<std::string>& name) {
    ReportDocument r;
    r.name = name;
    r.n = d.order;
    r.num_edges = d.mu;
    for (const auto& t : d.cutsets.sets) {
        r.cut_sets.push_back(to_ints(t));
    }
    for (const auto& p : d.components) {
        ComponentRecord rec{to_ints(p.killed), {}, p.height};
        for (const auto& b : p.blocks) {
            rec.blocks.push_back(to_ints(b));
        }
        r.components.push_back(std::move(rec));
    }
    r.min_height = d.min_height;
    r.unmixed = d.unmixed;
    r.krull_dimension = d.krull_dimension;
    r.mu = d.mu;
    r.deviation = d.deviation;
    r.complete_intersection = c.complete_intersection;
    if (auto* g3 = std::get_if<G3Params>(&c.family)) {
        r.family = "G3";
        r.family_params = {g3->r, g3->s, g3->t};
    } else if (auto* g4 = std::get_if<G4Params>(&c.family)) {
        r.family = "G4";
        r.family_params = {g4->r, g4->s};
    }
    r.cm_verdict = to_string(c.cohen_macaulay.status);
    r.cm_reason = c.cohen_macaulay.reason;
    r.reasons = c.reasons;
    return r;
}

nlohmann::ordered_json classification_json(const ReportDocument& r) {
    nlohmann::ordered_json j;
    j["deviation"] = r.deviation;
    j["unmixed"] = r.unmixed;
    j["complete_intersection"] = r.complete_intersection;
    if (r.family.empty()) {
        j["family"] = nullptr;
    } else {
        j["family"] = {{"name", r.family}, {"params", r.family_params}};
    }
    j["cohen_macaulay"] = {{"verdict", r.cm_verdict}, {"reason", r.cm_reason}};
    j["reasons"] = r.reasons;
    return j;
}

nlohmann::ordered_json to_json(const ReportDocument& r) {
    nlohmann::ordered_json j;
    if (r.name) {
        j["name"] = *r.name;
    }
    j["n"] = r.n;
    j["num_edges"] = r.num_edges;
    j["cut_sets"] = r.cut_sets;
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& c : r.components) {
        j["components"].push_back(
            {{"killed", c.killed}, {"blocks", c.blocks}, {"height", c.height}});
    }
    j["min_height"] = r.min_height;
    j["krull_dimension"] = r.krull_dimension;
    j["mu"] = r.mu;
    const auto classification = classification_json(r);
    for (const auto& item : classification.items()) {
        j[item.key()] = item.value();
    }
    return j;
}

ReportDocument report_from_json(const nlohmann::json& j) {
    try {
        ReportDocument r;
        if (j.contains("name")) {
            r.name = j.at("name").get<std::string>();
        }
        r.n = j.at("n").get<int>();
        r.num_edges = j.at("num_edges").get<int>();
        r.cut_sets = j.at("cut_sets").get<std::vector<std::vector<int>>>();
        for (const auto& c : j.at("components")) {
            r.components.push_back({c.at("killed").get<std::vector<int>>(),
                                    c.at("blocks").get<std::vector<std::vector<int>>>(),
                                    c.at("height").get<int>()});
        }
        r.min_height = j.at("min_height").get<int>();
        r.krull_dimension = j.at("krull_dimension").get<int>();
        r.mu = j.at("mu").get<int>();
        r.deviation = j.at("deviation").get<int>();
        r.unmixed = j.at("unmixed").get<bool>();
        r.complete_intersection = j.at("complete_intersection").get<bool>();
        if (const auto& f = j.at("family"); !f.is_null()) {
            r.family = f.at("name").get<std::string>();
            r.family_params = f.at("params").get<std::vector<int>>();
        }
        r.cm_verdict = j.at("cohen_macaulay").at("verdict").get<std::string>();
        r.cm_reason = j.at("cohen_macaulay").at("reason").get<std::string>();
        r.reasons = j.at("reasons").get<std::vector<std::string>>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report document: ") + e.what());
    }
}

namespace {

// Arrays of scalars, or of arrays of scalars, stay on one line.
bool flat(const nlohmann::ordered_json& j) {
    if (!j.is_array()) {
        return !j.is_object();
    }
    return std::all_of(j.begin(), j.end(), [](const auto& e) {
        return e.is_primitive() ||
               (e.is_array() && std::all_of(e.begin(), e.end(),
                                            [](const auto& x) { return x.is_primitive(); }));
    });
}

void write_json(const nlohmann::ordered_json& j, int indent, std::string& out) {
    if (flat(j)) {
        out += j.dump(-1, ' ', false);
        return;
    }
    const std::string pad(indent + 2, ' ');
    const bool object = j.is_object();
    out += object ? "{\n" : "[\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out += first ? "" : ",\n";
        first = false;
        out += pad;
        if (object) {
            out += nlohmann::ordered_json(it.key()).dump() + ": ";
        }
        write_json(*it, indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + (object ? "}" : "]");
}

} // namespace

std::string dump(const nlohmann::ordered_json& j) {
    std::string out;
    write_json(j, 0, out);
    return out + "\n";
}

} // namespace bei
