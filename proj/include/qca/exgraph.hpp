#pragma once

#include "qca/seed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qca {

namespace detail {

struct ExpansionLess {
    bool operator()(const TorusElement& a, const TorusElement& b) const {
        return TorusElement::compare(a, b) < 0;
    }
};

} // namespace detail

/// Sorts the mutable slots by a fixed total order on expansions, permuting
/// names, B and L in step.  Clusters are unordered, so two seeds represent
/// the same vertex exactly when their canonical forms agree.
inline QuantumSeed canonicalize_seed(const QuantumSeed& s) {
    if (!s.tracked()) throw validation_error("canonicalize: seed has no tracked expansions");
    const int n = s.mutable_count();
    const int m = s.var_count();

    std::vector<int> positions = s.B.mutable_rows;
    std::sort(positions.begin(), positions.end());

    // Mutable variables with their current row and column.
    struct Slot {
        int row, col;
    };
    std::vector<Slot> slots;
    for (int c = 0; c < n; c++) slots.push_back({s.B.row_of_column(c), c});
    std::sort(slots.begin(), slots.end(), [&](const Slot& a, const Slot& b) {
        return TorusElement::compare(s.expansions[a.row], s.expansions[b.row]) < 0;
    });

    // Row permutation: the i-th smallest expansion moves to the i-th mutable
    // position; frozen rows stay put.
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < n; i++) perm[slots[i].row] = positions[i];

    QuantumSeed r;
    r.initial_frame = s.initial_frame;
    r.names.resize(m);
    r.expansions.resize(m);
    IntMat B(m, n), L(m, m);
    for (int i = 0; i < m; i++) {
        r.names[perm[i]] = s.names[i];
        r.expansions[perm[i]] = s.expansions[i];
        for (int j = 0; j < m; j++) L.at(perm[i], perm[j]) = s.L.at(i, j);
        for (int c = 0; c < n; c++) B.at(perm[i], c) = s.B.mat.at(i, slots[c].col);
    }
    r.B = ExchangeMatrix(std::move(B), positions);
    r.L = QuasiCommutationMatrix(std::move(L));
    r.validate();
    return r;
}

/// Exchange graph: canonicalized seeds as vertices, directed mutation arrows
/// as edges, plus the census of distinct cluster-variable expansions.
struct ExchangeGraph {
    struct Edge {
        int from;
        int column;
        int to;
    };

    QuantumSeed initial;
    std::vector<QuantumSeed> vertices;
    std::vector<Edge> edges;

    std::vector<TorusElement> mutable_variables;
    std::vector<std::string> mutable_labels;
    std::vector<TorusElement> frozen_variables;
    std::vector<std::string> frozen_labels;

    size_t undirected_edge_count() const { return edges.size() / 2; }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(vertices.size(), 0);
        for (const auto& e : edges) d[e.from]++;
        std::sort(d.begin(), d.end());
        return d;
    }
};

/// Breadth-first closure of a compatible seed under all mutable mutations.
/// Vertices are deduplicated by canonical form; exceeding max_vertices is an
/// error (the guard for infinite type).
inline ExchangeGraph enumerate_exchange_graph(QuantumSeed seed, size_t max_vertices = 10000) {
    if (!seed.tracked()) seed = with_tracking(std::move(seed));
    compatibility_diagonal(seed.B, seed.L);

    ExchangeGraph g;
    g.initial = seed;

    auto key_of = [](const QuantumSeed& s) {
        std::vector<TorusElement> key;
        for (int r : s.B.mutable_rows) key.push_back(s.expansions[r]);
        return key;
    };
    auto key_less = [](const std::vector<TorusElement>& a, const std::vector<TorusElement>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); i++)
            if (int c = TorusElement::compare(a[i], b[i])) return c < 0;
        return false;
    };
    std::map<std::vector<TorusElement>, int, decltype(key_less)> seen(key_less);

    auto add_vertex = [&](QuantumSeed s) -> std::pair<int, bool> {
        auto key = key_of(s);
        auto it = seen.find(key);
        if (it != seen.end()) {
            // The cluster determines the rest of the seed.
            const QuantumSeed& old = g.vertices[it->second];
            if (!(old.B == s.B) || !(old.L == s.L))
                throw internal_error("enumerate: equal clusters with different seed data");
            return {it->second, false};
        }
        if (g.vertices.size() >= max_vertices)
            throw bound_error("enumerate: vertex bound " + std::to_string(max_vertices) + " exceeded");
        const int id = static_cast<int>(g.vertices.size());
        g.vertices.push_back(std::move(s));
        seen.emplace(std::move(key), id);
        return {id, true};
    };

    add_vertex(canonicalize_seed(seed));
    for (size_t v = 0; v < g.vertices.size(); v++) {
        for (int k = 0; k < g.vertices[v].mutable_count(); k++) {
            const QuantumSeed next = canonicalize_seed(mutate_seed(g.vertices[v], k));
            const auto [id, fresh] = add_vertex(next);
            g.edges.push_back({static_cast<int>(v), k, id});
        }
    }

    // Variable census over the finished graph, in discovery order.
    detail::ExpansionLess less;
    std::map<TorusElement, int, detail::ExpansionLess> found(less);
    for (const auto& vert : g.vertices) {
        for (int r : vert.B.mutable_rows) {
            if (found.emplace(vert.expansions[r], 0).second) {
                g.mutable_variables.push_back(vert.expansions[r]);
                g.mutable_labels.push_back(vert.names[r]);
            }
        }
    }
    for (int r = 0; r < g.initial.var_count(); r++) {
        if (!g.initial.B.is_mutable_row(r)) {
            g.frozen_variables.push_back(g.initial.expansions[r]);
            g.frozen_labels.push_back(g.initial.names[r]);
        }
    }
    return g;
}

/// Denominator vector of an initial-frame expansion: component c is the
/// negated minimum exponent of the c-th initial mutable variable, so the
/// initial variable X_c itself yields -e_c.
inline ExpVec denominator_vector(const TorusElement& v, const QuantumSeed& initial) {
    const int n = initial.mutable_count();
    ExpVec d(n, 0);
    if (v.is_zero()) return d;
    for (int c = 0; c < n; c++) {
        const int row = initial.B.row_of_column(c);
        int mn = 0;
        bool first = true;
        for (const auto& [a, coeff] : v.terms()) {
            if (first || a[row] < mn) mn = a[row];
            first = false;
        }
        d[c] = -mn;
    }
    return d;
}

/// Reports the cluster-algebra type by matching the principal part of some
/// vertex against an orientation of an A_n diagram, n <= 4.
inline std::string classify_type(const ExchangeGraph& g) {
    const int n = g.initial.mutable_count();
    if (n == 0) return "A0";
    if (n > 4) return "unclassified";
    for (const auto& s : g.vertices) {
        std::set<std::pair<int, int>> und;
        bool small_entries = true;
        for (int c = 0; c < n && small_entries; c++)
            for (int d = 0; d < n; d++) {
                const std::int64_t b = s.B.mat.at(s.B.row_of_column(c), d);
                if (std::abs(b) > 1) {
                    small_entries = false;
                    break;
                }
                if (b != 0) und.insert({std::min(c, d), std::max(c, d)});
            }
        if (!small_entries) continue;
        if (static_cast<int>(und.size()) != n - 1) continue;
        // Path test: degrees <= 2 and connected.
        std::vector<int> deg(n, 0);
        for (auto [a, b] : und) {
            deg[a]++;
            deg[b]++;
        }
        if (std::any_of(deg.begin(), deg.end(), [](int d) { return d > 2; })) continue;
        std::vector<int> comp(n, -1);
        std::vector<int> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [a, b] : und) {
                int y = a == x ? b : (b == x ? a : -1);
                if (y >= 0 && comp[y] < 0) {
                    comp[y] = 0;
                    stack.push_back(y);
                }
            }
        }
        if (std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; }))
            return "A" + std::to_string(n);
    }
    return "unclassified";
}

/// DOT export of the exchange graph; vertices carry the mutable label set,
/// the frozen set is printed once in the graph label.
inline std::string exchange_graph_dot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "digraph exchange {\n";
    std::ostringstream frozen;
    for (size_t i = 0; i < g.frozen_labels.size(); i++)
        frozen << (i ? ", " : "") << g.frozen_labels[i];
    os << "  label=\"frozen: {" << frozen.str() << "}\";\n";
    for (size_t v = 0; v < g.vertices.size(); v++) {
        const auto& s = g.vertices[v];
        std::ostringstream lbl;
        bool first = true;
        for (int r : s.B.mutable_rows) {
            lbl << (first ? "" : ", ") << s.names[r];
            first = false;
        }
        os << "  v" << v << " [label=\"{" << lbl.str() << "}\"];\n";
    }
    for (const auto& e : g.edges) {
        const int row = g.vertices[e.from].B.row_of_column(e.column);
        os << "  v" << e.from << " -> v" << e.to << " [label=\"mu " << g.vertices[e.from].names[row]
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

/// DOT export of the quiver of B; frozen vertices are drawn as boxes.
inline std::string quiver_dot(const ExchangeMatrix& B, const std::vector<std::string>& names) {
    const Quiver q = quiver_of(B);
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int i = 0; i < B.var_count(); i++)
        os << "  n" << i << " [label=\"" << names[i] << "\", shape="
           << (q.frozen[i] ? "box" : "ellipse") << "];\n";
    for (const auto& a : q.arrows) {
        os << "  n" << a.from << " -> n" << a.to;
        if (a.weight != 1) os << " [label=\"" << a.weight << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace qca
