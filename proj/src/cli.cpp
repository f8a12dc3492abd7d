#include "bei/cli.hpp"

#include "bei/cas_export.hpp"
#include "bei/classification.hpp"
#include "bei/errors.hpp"
#include "bei/fixtures.hpp"
#include "bei/ideal.hpp"
#include "bei/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace bei {

namespace {

struct Settings {
    std::string input = "-";
    std::string positional_input;
    std::string output = "-";
    GraphFormat format = GraphFormat::EdgeList;
    int max_enum = 30;
    int jobs = 1;
    CasDialect dialect = CasDialect::Macaulay2;
    int characteristic = 0;
    std::string fixture;
    std::vector<int> fixture_params;
};

struct LoadedGraph {
    Graph graph;
    std::optional<std::string> name;
};

LoadedGraph load(const Settings& s, std::istream& in) {
    const auto& path = s.positional_input.empty() ? s.input : s.positional_input;
    GraphDocument doc;
    if (path == "-") {
        doc = parse_graph_document(in, s.format);
    } else {
        std::ifstream file(path);
        if (!file) {
            throw ParseError("cannot open input file '" + path + "'");
        }
        doc = parse_graph_document(file, s.format);
    }
    return {to_graph(doc), doc.name};
}

void emit(const Settings& s, std::ostream& out, const std::string& text) {
    if (s.output == "-") {
        out << text;
        return;
    }
    std::ofstream file(s.output, std::ios::binary);
    if (!file) {
        throw ParseError("cannot open output file '" + s.output + "'");
    }
    file << text;
}

CutSetOptions cut_options(const Settings& s) {
    return {s.max_enum, s.jobs};
}

std::string describe(const CutSetFamily& f) {
    std::ostringstream out;
    for (const auto& t : f.sets) {
        out << " {";
        for (auto it = t.begin(); it != t.end(); ++it) {
            out << (it == t.begin() ? "" : ",") << *it;
        }
        out << "}";
    }
    return out.str();
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    Settings s;
    CLI::App app{"Minimal primes and Cohen-Macaulay classification of binomial edge ideals",
                 "bei"};
    app.fallthrough();
    app.require_subcommand(1);

    const std::map<std::string, GraphFormat> formats{{"edgelist", GraphFormat::EdgeList},
                                                     {"structured", GraphFormat::Structured}};
    const std::map<std::string, CasDialect> dialects{{"cocoa5", CasDialect::CoCoA5},
                                                     {"macaulay2", CasDialect::Macaulay2}};

    app.add_option("--input", s.input, "Graph file, or - for standard input");
    app.add_option("--format", s.format, "Graph format: edgelist or structured")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--output", s.output, "Output file, or - for standard output");
    app.add_option("--max-enum", s.max_enum, "Bound on non-free candidate vertices")
        ->check(CLI::Range(1, 62));
    app.add_option("--jobs", s.jobs, "Worker threads for cut-set enumeration (0 = all cores)")
        ->check(CLI::Range(0, 1024));

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", s.positional_input, "Graph file, or - for standard input");
        return sub;
    };
    auto* decompose = with_input(app.add_subcommand("decompose", "Cut sets and minimal primes"));
    auto* classify_cmd = with_input(app.add_subcommand("classify", "Classification fields only"));
    auto* unmixed = with_input(app.add_subcommand("unmixed", "Exit 0 if unmixed, 1 otherwise"));
    auto* export_cmd = with_input(app.add_subcommand("export", "Emit a CAS verification script"));
    export_cmd->add_option("--dialect", s.dialect, "cocoa5 or macaulay2")
        ->transform(CLI::CheckedTransformer(dialects, CLI::ignore_case));
    export_cmd
        ->add_option("--characteristic", s.characteristic,
                     "Field characteristic: 0 for the rationals, or a prime")
        ->check(CLI::Validator(
            [](const std::string& text) -> std::string {
                const int p = std::stoi(text);
                if (p == 0) {
                    return {};
                }
                if (p < 2) {
                    return "characteristic must be 0 or a prime";
                }
                for (int d = 2; d * d <= p; ++d) {
                    if (p % d == 0) {
                        return "characteristic must be 0 or a prime";
                    }
                }
                return {};
            },
            "0|PRIME"));
    auto* oracle =
        with_input(app.add_subcommand("oracle-check", "Compare pruned and naive cut sets"));
    auto* fixtures_cmd = app.add_subcommand("fixtures", "Emit a named graph");
    fixtures_cmd->add_option("name", s.fixture, "claw, fan, g3 R S T, g4 R S, dev2, dev2bis")
        ->required();
    fixtures_cmd->add_option("params", s.fixture_params, "Integer parameters");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "bei: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (fixtures_cmd->parsed()) {
            auto g = fixtures::by_name(s.fixture, s.fixture_params);
            if (!g) {
                err << "bei: unknown fixture or wrong parameter count; available:";
                for (const auto& name : fixtures::names()) {
                    err << " '" << name << "'";
                }
                err << "\n";
                return kExitUsage;
            }
            emit(s, out, write_graph(*g, s.format));
            return kExitOk;
        }

        const auto loaded = load(s, in);
        const auto& g = loaded.graph;

        if (decompose->parsed() || classify_cmd->parsed()) {
            const auto d = minimal_primes(g, cut_options(s));
            const auto c = classify(g, d);
            const auto report = make_report(d, c, loaded.name);
            emit(s, out, dump(decompose->parsed() ? to_json(report) : classification_json(report)));
            return kExitOk;
        }
        if (unmixed->parsed()) {
            const bool yes = is_unmixed(g, cut_options(s));
            emit(s, out, yes ? "unmixed\n" : "not unmixed\n");
            return yes ? kExitOk : kExitPropertyFalse;
        }
        if (export_cmd->parsed()) {
            const auto d = minimal_primes(g, cut_options(s));
            emit(s, out, export_cas_script(g, d, {s.dialect, s.characteristic}));
            return kExitOk;
        }
        if (oracle->parsed()) {
            const auto pruned = compute_cutsets(g, cut_options(s));
            const auto naive = compute_cutsets_naive(g);
            if (pruned == naive) {
                emit(s, out, "ok: " + std::to_string(pruned.size()) + " cut sets agree\n");
                return kExitOk;
            }
            emit(s, out, "mismatch\n  pruned:" + describe(pruned) + "\n  naive: " +
                             describe(naive) + "\n");
            return kExitPropertyFalse;
        }
    } catch (const CapacityError& e) {
        err << "bei: capacity exceeded: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ParseError& e) {
        err << "bei: parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "bei: invalid graph: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "bei: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

} // namespace bei
