#pragma once

#include "qca/examples.hpp"
#include "qca/seed_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace qca::cli {

// Exit codes: validation failures, verification failures and exceeded bounds
// are distinguishable by scripts.
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_validation = 2;
inline constexpr int exit_verification = 3;
inline constexpr int exit_bound = 4;

namespace detail {

inline bool is_builtin(const std::string& source) {
    if (source.rfind("projective(", 0) == 0) return true;
    for (const auto& n : builtin_names())
        if (n == source) return true;
    return false;
}

inline QuantumSeed load_seed(const std::string& source) {
    if (is_builtin(source)) return builtin_seed(source).seed;
    std::ifstream in(source);
    if (!in) throw validation_error("cannot open seed file '" + source + "'");
    return parse_seed_file(in).seed;
}

inline nlohmann::json matrix_json(const IntMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); i++) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); j++) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write to '" + path + "'");
    out << text;
}

inline int position_to_column(const QuantumSeed& s, int pos) {
    if (pos < 0 || pos >= s.var_count())
        throw validation_error("direction " + std::to_string(pos) + " out of range (cluster has " +
                               std::to_string(s.var_count()) + " positions)");
    const int col = s.B.column_of_row(pos);
    if (col < 0)
        throw validation_error("direction " + std::to_string(pos) + " (" + s.names[pos] +
                               ") is a frozen variable and cannot be mutated");
    return col;
}

} // namespace detail

inline int cmd_show(const std::string& source, const std::string& format, const std::string& out_path,
                    const std::string& quiver_path, std::ostream& out) {
    const QuantumSeed seed = detail::load_seed(source);
    const Quiver quiver = quiver_of(seed.B);
    std::vector<std::int64_t> diag;
    std::string incompatible;
    try {
        diag = compatibility_diagonal(seed.B, seed.L);
    } catch (const incompatibility_error& e) {
        incompatible = e.what();
    }

    if (!out_path.empty()) detail::write_file(out_path, write_seed_file(seed));
    if (!quiver_path.empty()) detail::write_file(quiver_path, quiver_dot(seed.B, seed.names));

    if (format == "machine") {
        nlohmann::json j;
        j["names"] = seed.names;
        j["mutable_rows"] = seed.B.mutable_rows;
        j["B"] = detail::matrix_json(seed.B.mat);
        j["L"] = detail::matrix_json(seed.L.mat);
        j["compatible"] = incompatible.empty();
        if (incompatible.empty()) j["diagonal"] = diag;
        else j["incompatibility"] = incompatible;
        nlohmann::json arrows = nlohmann::json::array();
        for (const auto& a : quiver.arrows)
            arrows.push_back({{"from", seed.names[a.from]}, {"to", seed.names[a.to]}, {"weight", a.weight}});
        j["quiver"] = arrows;
        out << j.dump(2) << "\n";
        return incompatible.empty() ? exit_ok : exit_validation;
    }

    out << "seed: " << source << "\n";
    out << "names:";
    for (size_t i = 0; i < seed.names.size(); i++)
        out << " " << seed.names[i] << (seed.B.is_mutable_row(static_cast<int>(i)) ? "*" : "");
    out << "   (* = mutable)\n";
    out << "B =\n" << seed.B.mat.str();
    out << "L =\n" << seed.L.mat.str();
    out << "quiver arrows:";
    if (quiver.arrows.empty()) out << " (none)";
    for (const auto& a : quiver.arrows) {
        out << " " << seed.names[a.from] << "->" << seed.names[a.to];
        if (a.weight != 1) out << "(x" << a.weight << ")";
    }
    out << "\n";
    if (!incompatible.empty()) {
        out << "B^T L diagnosis: " << incompatible << "\n";
        return exit_validation;
    }
    out << "B^T L diagonal: (";
    for (size_t i = 0; i < diag.size(); i++) out << (i ? ", " : "") << diag[i];
    out << ")\n";
    return exit_ok;
}

inline int cmd_mutate(const std::string& source, const std::vector<int>& directions,
                      const std::string& format, std::ostream& out) {
    QuantumSeed seed = with_tracking(detail::load_seed(source));
    const QuantumSeed initial = seed;
    compatibility_diagonal(seed.B, seed.L);

    nlohmann::json steps = nlohmann::json::array();
    std::ostringstream text;
    for (int pos : directions) {
        const int col = detail::position_to_column(seed, pos);
        const ExchangeRelation rel = compute_exchange_relation(seed, col);
        QuantumSeed next = mutate_seed(seed, col);
        const std::string new_name = next.names[rel.row];
        const std::string relation = rel.str(seed.names, new_name);
        const std::string expansion = next.expansions[rel.row].str(initial.names);
        if (format == "machine") {
            steps.push_back({{"position", pos},
                             {"exchanged", seed.names[rel.row]},
                             {"new_variable", new_name},
                             {"relation", relation},
                             {"expansion", expansion}});
        } else {
            text << "mu at position " << pos << " (" << seed.names[rel.row] << "):\n";
            text << "  exchange relation: " << relation << "\n";
            text << "  " << new_name << " = " << expansion << "\n";
        }
        seed = std::move(next);
    }

    if (format == "machine") {
        nlohmann::json j;
        j["steps"] = steps;
        j["names"] = seed.names;
        j["B"] = detail::matrix_json(seed.B.mat);
        j["L"] = detail::matrix_json(seed.L.mat);
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << text.str();
    out << "resulting names:";
    for (const auto& n : seed.names) out << " " << n;
    out << "\nB =\n" << seed.B.mat.str() << "L =\n" << seed.L.mat.str();
    return exit_ok;
}

inline int cmd_enumerate(const std::string& source, size_t max_vertices, const std::string& dot_path,
                         const std::string& format, std::ostream& out) {
    const QuantumSeed seed = detail::load_seed(source);
    const ExchangeGraph g = enumerate_exchange_graph(seed, max_vertices);
    const std::string type = classify_type(g);

    if (!dot_path.empty()) detail::write_file(dot_path, exchange_graph_dot(g));

    std::vector<std::pair<std::string, ExpVec>> roots;
    for (size_t i = 0; i < g.mutable_variables.size(); i++)
        roots.emplace_back(g.mutable_labels[i], denominator_vector(g.mutable_variables[i], g.initial));

    if (format == "machine") {
        nlohmann::json j;
        j["vertices"] = g.vertices.size();
        j["directed_edges"] = g.edges.size();
        j["undirected_edges"] = g.undirected_edge_count();
        j["mutable_variables"] = g.mutable_labels;
        j["frozen_variables"] = g.frozen_labels;
        j["type"] = type;
        nlohmann::json rj = nlohmann::json::array();
        for (const auto& [label, d] : roots) rj.push_back({{"variable", label}, {"denominator_vector", d}});
        j["roots"] = rj;
        nlohmann::json adj = nlohmann::json::array();
        for (const auto& e : g.edges) adj.push_back({{"from", e.from}, {"column", e.column}, {"to", e.to}});
        j["edges"] = adj;
        out << j.dump(2) << "\n";
        return exit_ok;
    }

    out << "exchange graph of " << source << ":\n";
    out << "  vertices: " << g.vertices.size() << "\n";
    out << "  mutation arrows: " << g.edges.size() << " directed / " << g.undirected_edge_count()
        << " undirected\n";
    out << "  cluster variables: " << g.mutable_variables.size() << " mutable + "
        << g.frozen_variables.size() << " frozen = "
        << g.mutable_variables.size() + g.frozen_variables.size() << " total\n";
    out << "  type: " << type << "\n";
    out << "  denominator vectors:\n";
    for (const auto& [label, d] : roots) {
        out << "    " << label << " -> (";
        for (size_t i = 0; i < d.size(); i++) out << (i ? "," : "") << d[i];
        out << ")\n";
    }
    return exit_ok;
}

inline int cmd_verify(const std::string& name, int degree_bound, size_t max_vertices,
                      const std::string& format, std::ostream& out) {
    const VerifyReport report = verify_example(name, VerifyOptions{degree_bound, max_vertices});
    if (format == "machine") {
        nlohmann::json j;
        j["example"] = report.example;
        j["ok"] = report.ok();
        j["diagonal"] = report.diagonal;
        j["vertices"] = report.vertices;
        j["directed_edges"] = report.directed_edges;
        j["adjoined_relations"] = report.adjoined_notes;
        j["bindings"] = report.bindings;
        nlohmann::json ids = nlohmann::json::array();
        for (const auto& l : report.identities)
            ids.push_back({{"description", l.description}, {"ok", l.ok}, {"residue", l.residue}});
        j["identities"] = ids;
        nlohmann::json vars = nlohmann::json::array();
        for (const auto& [label, d] : report.variables)
            vars.push_back({{"variable", label}, {"denominator_vector", d}});
        j["variables"] = vars;
        out << j.dump(2) << "\n";
    } else {
        out << report.str();
    }
    return report.ok() ? exit_ok : exit_verification;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for quantum cluster algebras of geometric type"};
    app.require_subcommand(1);

    std::string source, format = "text", out_path, dot_path, quiver_path;
    std::vector<int> directions;
    size_t max_vertices = 10000;
    int degree_bound = 8;

    auto* show = app.add_subcommand("show", "print a seed, its quiver and the B^T L diagnosis");
    show->add_option("source", source, "builtin name or seed file path")->required();
    show->add_option("--format", format, "text|machine")->check(CLI::IsMember({"text", "machine"}));
    show->add_option("--out", out_path, "write the seed in seed-file format");
    show->add_option("--dot", quiver_path, "write the quiver as DOT (frozen vertices boxed)");

    auto* mutate = app.add_subcommand("mutate", "apply mutations left to right");
    mutate->add_option("source", source, "builtin name or seed file path")->required();
    mutate->add_option("directions", directions, "0-based cluster positions of mutable variables")
        ->required();
    mutate->add_option("--format", format, "text|machine")->check(CLI::IsMember({"text", "machine"}));

    auto* enumerate = app.add_subcommand("enumerate", "breadth-first exchange-graph closure");
    enumerate->add_option("source", source, "builtin name or seed file path")->required();
    enumerate->add_option("--max", max_vertices, "vertex bound (infinite-type guard)");
    enumerate->add_option("--dot", dot_path, "write exchange graph as DOT");
    enumerate->add_option("--format", format, "text|machine")->check(CLI::IsMember({"text", "machine"}));

    auto* verify = app.add_subcommand("verify", "re-derive and check all exchange identities");
    verify->add_option("name", source, "builtin example with an algebra realization")->required();
    verify->add_option("--degree-bound", degree_bound, "rewriting degree bound");
    verify->add_option("--max", max_vertices, "vertex bound");
    verify->add_option("--format", format, "text|machine")->check(CLI::IsMember({"text", "machine"}));

    auto* exportdot = app.add_subcommand("export-dot", "write the exchange graph as DOT");
    exportdot->add_option("source", source, "builtin name or seed file path")->required();
    exportdot->add_option("output", out_path, "output DOT path")->required();
    exportdot->add_option("--max", max_vertices, "vertex bound");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_validation;
    }

    try {
        if (show->parsed()) return cmd_show(source, format, out_path, quiver_path, out);
        if (mutate->parsed()) return cmd_mutate(source, directions, format, out);
        if (enumerate->parsed()) return cmd_enumerate(source, max_vertices, dot_path, format, out);
        if (verify->parsed()) return cmd_verify(source, degree_bound, max_vertices, format, out);
        if (exportdot->parsed()) {
            const QuantumSeed seed = detail::load_seed(source);
            detail::write_file(out_path, exchange_graph_dot(enumerate_exchange_graph(seed, max_vertices)));
            out << "wrote " << out_path << "\n";
            return exit_ok;
        }
        err << "error: no subcommand\n";
        return exit_validation;
    } catch (const bound_error& e) {
        err << "bound exceeded: " << e.what() << "\n";
        return exit_bound;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_validation;
    } catch (const validation_error& e) {
        err << "validation error: " << e.what() << "\n";
        return exit_validation;
    } catch (const division_error& e) {
        err << "internal error (exact division failed): " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

} // namespace qca::cli
