#include "qca/exgraph.hpp"

#include "qca/examples.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace qca;

namespace {

std::set<ExpVec> dvector_set(const ExchangeGraph& g) {
    std::set<ExpVec> s;
    for (const auto& v : g.mutable_variables) s.insert(denominator_vector(v, g.initial));
    return s;
}

} // namespace

TEST_CASE("sl2 exchange graph") {
    const ExchangeGraph g = enumerate_exchange_graph(builtin_seed("sl2").seed);
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.size() == 2);
    CHECK(g.undirected_edge_count() == 1);
    CHECK(g.mutable_variables.size() == 2);
    CHECK(g.frozen_variables.size() == 2);
    CHECK(classify_type(g) == "A1");
    CHECK(dvector_set(g) == std::set<ExpVec>{{1}, {-1}});
}

TEST_CASE("gr25 exchange graph is the pentagon") {
    const ExchangeGraph g = enumerate_exchange_graph(builtin_seed("gr25").seed);
    CHECK(g.vertices.size() == 5);
    CHECK(g.edges.size() == 10);
    CHECK(g.undirected_edge_count() == 5);
    CHECK(g.mutable_variables.size() == 5);
    CHECK(g.frozen_variables.size() == 5);
    CHECK(classify_type(g) == "A2");
    CHECK(dvector_set(g) ==
          std::set<ExpVec>{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}});
    // Every vertex has both mutation directions.
    CHECK(g.degree_sequence() == std::vector<int>(5, 2));
}

TEST_CASE("the two A2 unipotent seeds enumerate like gr25") {
    for (const char* name : {"n2minus", "uqn2minus"}) {
        const ExchangeGraph g = enumerate_exchange_graph(builtin_seed(name).seed);
        CHECK(g.vertices.size() == 5);
        CHECK(g.edges.size() == 10);
        CHECK(g.mutable_variables.size() == 5);
        CHECK(g.frozen_variables.size() == 4);
        CHECK(classify_type(g) == "A2");
    }
}

TEST_CASE("uqn12minus exchange graph is the third Stasheff associahedron") {
    const ExchangeGraph g = enumerate_exchange_graph(builtin_seed("uqn12minus").seed);
    CHECK(g.vertices.size() == 14);
    CHECK(g.edges.size() == 42);
    CHECK(g.undirected_edge_count() == 21);
    CHECK(g.degree_sequence() == std::vector<int>(14, 3));
    CHECK(g.mutable_variables.size() == 9);
    CHECK(g.frozen_variables.size() == 4);
    CHECK(classify_type(g) == "A3");
    const std::set<ExpVec> expected{{1, 0, 0},  {1, 1, 0},  {0, 1, 0},
                                    {1, 1, 1},  {0, 1, 1},  {0, 0, 1},
                                    {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    CHECK(dvector_set(g) == expected);
}

TEST_CASE("rank-0 seeds have a single cluster") {
    for (int n : {1, 3, 4}) {
        const ExchangeGraph g =
            enumerate_exchange_graph(builtin_seed("projective(" + std::to_string(n) + ")").seed);
        CHECK(g.vertices.size() == 1);
        CHECK(g.edges.empty());
        CHECK(g.mutable_variables.empty());
        CHECK(static_cast<int>(g.frozen_variables.size()) == n);
        CHECK(classify_type(g) == "A0");
    }
}

TEST_CASE("initial mutable variables have negative simple roots as d-vectors") {
    for (const char* name : {"sl2", "gr25", "uqn12minus"}) {
        const QuantumSeed seed = with_tracking(builtin_seed(name).seed);
        for (int c = 0; c < seed.mutable_count(); c++) {
            ExpVec expected(seed.mutable_count(), 0);
            expected[c] = -1;
            CHECK(denominator_vector(seed.expansions[seed.B.row_of_column(c)], seed) == expected);
        }
    }
}

TEST_CASE("frozen variables are identical across all vertices") {
    const ExchangeGraph g = enumerate_exchange_graph(builtin_seed("uqn12minus").seed);
    for (const auto& v : g.vertices)
        for (int r = 0; r < v.var_count(); r++)
            if (!v.B.is_mutable_row(r)) CHECK(v.expansions[r] == g.initial.expansions[r]);
}

TEST_CASE("compatibility diagonal is constant across the graph") {
    for (const char* name : {"gr25", "uqn12minus"}) {
        const ExchangeGraph g = enumerate_exchange_graph(builtin_seed(name).seed);
        const auto diag = compatibility_diagonal(g.initial.B, g.initial.L);
        for (const auto& v : g.vertices) CHECK(compatibility_diagonal(v.B, v.L) == diag);
    }
}

TEST_CASE("re-enumeration from any vertex yields an isomorphic graph") {
    const ExampleBundle b = builtin_seed("gr25");
    const ExchangeGraph g = enumerate_exchange_graph(b.seed);
    for (const auto& v : g.vertices) {
        QuantumSeed fresh = make_seed(v.names, v.B, v.L);
        const ExchangeGraph h = enumerate_exchange_graph(fresh);
        CHECK(h.vertices.size() == g.vertices.size());
        CHECK(h.edges.size() == g.edges.size());
        CHECK(h.degree_sequence() == g.degree_sequence());
        CHECK(h.mutable_variables.size() == g.mutable_variables.size());
    }
}

TEST_CASE("vertex bound is enforced") {
    CHECK_THROWS_AS(enumerate_exchange_graph(builtin_seed("uqn12minus").seed, 5), bound_error);
}

TEST_CASE("a principal type A4 seed enumerates to the fourth associahedron") {
    // Square B (no frozen variables) along the A4 path orientation, with
    // L = -2 B^-1 so that B^T L = 2I.
    const QuantumSeed seed = make_seed(
        {"x1", "x2", "x3", "x4"},
        ExchangeMatrix(IntMat(4, 4,
                              {0, 1, 0, 0,
                               -1, 0, 1, 0,
                               0, -1, 0, 1,
                               0, 0, -1, 0}),
                       {0, 1, 2, 3}),
        QuasiCommutationMatrix(IntMat(4, 4,
                                      {0, 2, 0, 2,
                                       -2, 0, 0, 0,
                                       0, 0, 0, 2,
                                       -2, 0, -2, 0})));
    CHECK(compatibility_diagonal(seed.B, seed.L) == std::vector<std::int64_t>(4, 2));
    const ExchangeGraph g = enumerate_exchange_graph(seed);
    CHECK(g.vertices.size() == 42);
    CHECK(g.degree_sequence() == std::vector<int>(42, 4));
    CHECK(g.mutable_variables.size() == 14);
    CHECK(g.frozen_variables.empty());
    CHECK(classify_type(g) == "A4");
    CHECK(dvector_set(g).size() == 14);
}

TEST_CASE("infinite type hits the vertex bound") {
    // The Kronecker seed (b12 = 2) has infinitely many clusters; the guard
    // must fire rather than loop.  Expansions grow fast along this graph, so
    // keep the bound small.
    const QuantumSeed kronecker =
        make_seed({"x1", "x2"}, ExchangeMatrix(IntMat(2, 2, {0, 2, -2, 0}), {0, 1}),
                  QuasiCommutationMatrix(IntMat(2, 2, {0, 1, -1, 0})));
    CHECK(compatibility_diagonal(kronecker.B, kronecker.L) == std::vector<std::int64_t>{2, 2});
    CHECK_THROWS_AS(enumerate_exchange_graph(kronecker, 8), bound_error);
}

TEST_CASE("enumeration of an incompatible seed is rejected") {
    ExampleBundle b = builtin_seed("sl2");
    IntMat L = b.seed.L.mat;
    L.at(1, 2) = 5;
    L.at(2, 1) = -5;
    const QuantumSeed bad = make_seed(b.seed.names, b.seed.B, QuasiCommutationMatrix(L));
    CHECK_THROWS_AS(enumerate_exchange_graph(bad), incompatibility_error);
}

TEST_CASE("DOT exports are deterministic and well formed") {
    const ExchangeGraph g = enumerate_exchange_graph(builtin_seed("gr25").seed);
    const std::string dot1 = exchange_graph_dot(g);
    const std::string dot2 = exchange_graph_dot(enumerate_exchange_graph(builtin_seed("gr25").seed));
    CHECK(dot1 == dot2);
    CHECK(dot1.find("digraph exchange") != std::string::npos);
    CHECK(dot1.find("frozen: {D15, D12, D23, D34, D45}") != std::string::npos);
    CHECK(dot1.find("{D13, D14}") != std::string::npos);
    CHECK(std::count(dot1.begin(), dot1.end(), '\n') > 15);

    const std::string qdot = quiver_dot(g.initial.B, g.initial.names);
    CHECK(qdot.find("shape=box") != std::string::npos);
    CHECK(qdot.find("\"D14\", shape=ellipse") != std::string::npos);
}

TEST_CASE("canonical form is stable under slot permutation") {
    // Mutating along a 5-cycle returns to the initial cluster.
    QuantumSeed s = with_tracking(builtin_seed("gr25").seed);
    const QuantumSeed start = canonicalize_seed(s);
    // mu2 mu3 mu2 mu3 mu2 walks around the pentagon (columns 0,1 alternate).
    for (int k : {0, 1, 0, 1, 0}) s = mutate_seed(s, k);
    const QuantumSeed around = canonicalize_seed(s);
    CHECK(around.B == start.B);
    CHECK(around.L == start.L);
    for (int r : start.B.mutable_rows) CHECK(around.expansions[r] == start.expansions[r]);
}
