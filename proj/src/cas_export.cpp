#include "bei/cas_export.hpp"

#include "bei/ideal.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace bei {

namespace {

struct Syntax {
    CasDialect dialect;

    std::string x(Vertex v) const { return var('x', v); }
    std::string y(Vertex v) const { return var('y', v); }

    std::string var(char name, Vertex v) const {
        return dialect == CasDialect::Macaulay2
                   ? std::string(1, name) + "_" + std::to_string(v)
                   : std::string(1, name) + "[" + std::to_string(v) + "]";
    }

    std::string minor(Vertex u, Vertex v) const {
        return x(u) + "*" + y(v) + " - " + x(v) + "*" + y(u);
    }

    std::string ideal(const std::vector<std::string>& terms) const {
        if (terms.empty()) {
            return dialect == CasDialect::Macaulay2 ? "ideal(0_S)" : "ideal(zero(S))";
        }
        std::string out = "ideal(";
        for (std::size_t k = 0; k < terms.size(); ++k) {
            out += (k ? ", " : "") + terms[k];
        }
        return out + ")";
    }

    std::string comment() const { return "-- "; }
    std::string assign() const { return dialect == CasDialect::Macaulay2 ? " = " : " := "; }
};

std::string set_text(const VertexSet& t) {
    std::string out = "{";
    for (auto it = t.begin(); it != t.end(); ++it) {
        out += (it == t.begin() ? "" : ",") + std::to_string(*it);
    }
    return out + "}";
}

std::vector<std::string> prime_terms(const Syntax& syn, const PrimeComponent& p) {
    std::vector<std::string> terms;
    for (Vertex i : p.killed) {
        terms.push_back(syn.x(i));
        terms.push_back(syn.y(i));
    }
    for (const auto& block : p.blocks) {
        const auto& m = block.members();
        for (std::size_t a = 0; a < m.size(); ++a) {
            for (std::size_t b = a + 1; b < m.size(); ++b) {
                terms.push_back(syn.minor(m[a], m[b]));
            }
        }
    }
    return terms;
}

} // namespace

std::string export_cas_script(const Graph& g, const Decomposition& d, const CasOptions& options) {
    const Syntax syn{options.dialect};
    const bool m2 = options.dialect == CasDialect::Macaulay2;
    const int n = g.order();
    std::ostringstream out;

    out << syn.comment() << "binomial edge ideal of a graph on " << n << " vertices with "
        << g.size() << " edges\n";
    out << syn.comment() << "expected: " << d.components.size()
        << " minimal primes, dim S/J = " << d.krull_dimension << ", minimal generators "
        << d.mu << "\n";
    if (n == 0) {
        out << syn.comment() << "zero graph: S = K and J = (0); nothing to compute\n";
        return out.str();
    }

    std::string field;
    if (options.characteristic == 0) {
        field = "QQ";
    } else {
        field = m2 ? "ZZ/" + std::to_string(options.characteristic)
                   : "ZZ/(" + std::to_string(options.characteristic) + ")";
    }

    if (m2) {
        out << "needsPackage \"Depth\";\n";
        out << "S = " << field << "[x_1..x_" << n << ", y_1..y_" << n << "];\n";
    } else {
        out << "Use S ::= " << field << "[x[1.." << n << "], y[1.." << n << "]];\n";
    }

    std::vector<std::string> gens;
    for (auto [i, j] : generators(g)) {
        gens.push_back(syn.minor(i, j));
    }
    out << "J" << syn.assign() << syn.ideal(gens) << ";\n";

    std::string names;
    for (std::size_t k = 0; k < d.components.size(); ++k) {
        const auto& p = d.components[k];
        const auto name = "P" + std::to_string(k);
        out << syn.comment() << "T = " << set_text(p.killed) << ", height " << p.height << "\n";
        out << name << syn.assign() << syn.ideal(prime_terms(syn, p)) << ";\n";
        names += (k ? ", " : "") + name;
    }

    if (m2) {
        out << "Q = intersect{" << names << "};\n";
        out << "assert(J == Q);\n";
        out << "print(\"mingens: \" | toString numgens trim J);\n";
        out << "print(\"dim: \" | toString dim(S/J));\n";
        out << "print(\"depth: \" | toString depth(S/J));\n";
    } else {
        out << "Q := IntersectList([" << names << "]);\n";
        out << "If J <> Q Then error(\"J differs from the intersection of its minimal primes\"); "
               "EndIf;\n";
        out << "println \"mingens: \", len(MinGens(J));\n";
        out << "println \"dim: \", dim(S/J);\n";
        out << "println \"depth: \", depth(S/J);\n";
    }
    return out.str();
}

} // namespace bei
