#include "qca/examples.hpp"
#include "qca/matrices.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qca;

namespace {

ExchangeMatrix square3(std::vector<std::int64_t> e) {
    return ExchangeMatrix(IntMat(3, 3, std::move(e)), {0, 1, 2});
}

std::vector<std::int64_t> row_major(const ExchangeMatrix& B) { return B.mat.entries(); }

} // namespace

TEST_CASE("matrix mutation reproduces the displayed examples") {
    const ExchangeMatrix B = square3({0, 1, 0, -1, 0, 1, 0, -1, 0});
    CHECK(row_major(mutate_exchange_matrix(B, 0)) ==
          std::vector<std::int64_t>{0, -1, 0, 1, 0, 1, 0, -1, 0});
    CHECK(row_major(mutate_exchange_matrix(B, 1)) ==
          std::vector<std::int64_t>{0, -1, 1, 1, 0, -1, -1, 1, 0});
}

TEST_CASE("mutation direction bounds") {
    const ExchangeMatrix B = square3({0, 1, 0, -1, 0, 1, 0, -1, 0});
    CHECK_THROWS_AS(mutate_exchange_matrix(B, -1), validation_error);
    CHECK_THROWS_AS(mutate_exchange_matrix(B, 3), validation_error);
}

TEST_CASE("matrix mutation is involutive on builtin seeds and descendants") {
    std::mt19937 rng(7);
    for (const char* name : {"sl2", "gr25", "n2minus", "uqn2minus", "uqn12minus"}) {
        const ExampleBundle b = builtin_seed(name);
        ExchangeMatrix B = b.seed.B;
        QuasiCommutationMatrix L = b.seed.L;
        std::uniform_int_distribution<int> dir(0, B.mutable_count() - 1);
        for (int step = 0; step < 60; step++) {
            const int k = dir(rng);
            CHECK(mutate_exchange_matrix(mutate_exchange_matrix(B, k), k) == B);
            const auto L2 = mutate_quasi_commutation(B, L, k);
            CHECK(mutate_quasi_commutation(mutate_exchange_matrix(B, k), L2, k) == L);
            L = L2;
            B = mutate_exchange_matrix(B, k);
        }
    }
}

TEST_CASE("compatibility diagonals of the builtin seeds") {
    auto diag = [](const char* n) {
        const ExampleBundle b = builtin_seed(n);
        return compatibility_diagonal(b.seed.B, b.seed.L);
    };
    CHECK(diag("sl2") == std::vector<std::int64_t>{2});
    CHECK(diag("gr25") == std::vector<std::int64_t>{2, 2});
    CHECK(diag("n2minus") == std::vector<std::int64_t>{2, 2});
    CHECK(diag("uqn2minus") == std::vector<std::int64_t>{2, 2});
    CHECK(diag("uqn12minus") == std::vector<std::int64_t>{2, 2, 2});
}

TEST_CASE("incompatibility is reported with the offending entry") {
    const ExampleBundle b = builtin_seed("sl2");
    IntMat L = b.seed.L.mat;
    L.at(1, 2) = 5;
    L.at(2, 1) = -5;
    try {
        compatibility_diagonal(b.seed.B, QuasiCommutationMatrix(L));
        FAIL("expected incompatibility");
    } catch (const incompatibility_error& e) {
        CHECK(std::string(e.what()).find("(B^T L)") != std::string::npos);
    }
}

TEST_CASE("quasi-commutation mutation matches the worked example") {
    // Mutating the sl2 seed at a: the new variable d satisfies db = q^-1 bd
    // and dc = q^-1 cd, so the first row of L' is (0, -1, -1).
    const ExampleBundle b = builtin_seed("sl2");
    const auto L2 = mutate_quasi_commutation(b.seed.B, b.seed.L, 0);
    CHECK(L2.mat.entries() == std::vector<std::int64_t>{0, -1, -1, 1, 0, 0, 1, 0, 0});
}

TEST_CASE("quasi-commutation mutation agrees with the exchange-monomial rule") {
    // The new variable's leading exchange monomial M(v) must quasi-commute
    // with X_i by q^(v^T L e_i); that fixes row r(k) of L'.
    for (const char* name : {"sl2", "gr25", "n2minus", "uqn2minus", "uqn12minus"}) {
        const ExampleBundle bundle = builtin_seed(name);
        const ExchangeMatrix& B = bundle.seed.B;
        const QuasiCommutationMatrix& L = bundle.seed.L;
        for (int k = 0; k < B.mutable_count(); k++) {
            const auto L2 = mutate_quasi_commutation(B, L, k);
            const int rk = B.row_of_column(k);
            ExpVec v(B.var_count(), 0);
            v[rk] = -1;
            for (int i = 0; i < B.var_count(); i++)
                if (B.mat.at(i, k) > 0) v[i] = static_cast<int>(B.mat.at(i, k));
            for (int i = 0; i < B.var_count(); i++) {
                if (i == rk) continue;
                std::int64_t expected = 0;
                for (int j = 0; j < B.var_count(); j++) expected += v[j] * L.at(j, i);
                CHECK(L2.at(rk, i) == expected);
            }
        }
    }
}

TEST_CASE("compatibility is preserved with the same diagonal") {
    std::mt19937 rng(11);
    for (const char* name : {"sl2", "gr25", "uqn12minus"}) {
        const ExampleBundle bundle = builtin_seed(name);
        ExchangeMatrix B = bundle.seed.B;
        QuasiCommutationMatrix L = bundle.seed.L;
        const auto diag = compatibility_diagonal(B, L);
        std::uniform_int_distribution<int> dir(0, B.mutable_count() - 1);
        for (int step = 0; step < 40; step++) {
            const int k = dir(rng);
            L = mutate_quasi_commutation(B, L, k);
            B = mutate_exchange_matrix(B, k);
            CHECK(compatibility_diagonal(B, L) == diag);
            CHECK(L.mat.is_skew_symmetric());
        }
    }
}

TEST_CASE("quiver of the sl2 seed") {
    const ExampleBundle b = builtin_seed("sl2");
    const Quiver g = quiver_of(b.seed.B);
    CHECK(g.frozen == std::vector<bool>{false, true, true});
    REQUIRE(g.arrows.size() == 2);
    CHECK(g.arrows[0] == Quiver::Arrow{0, 1, 1});
    CHECK(g.arrows[1] == Quiver::Arrow{0, 2, 1});
}

TEST_CASE("quiver of the gr25 seed") {
    // Vertices: D15 D14 D13 D12 D23 D34 D45 (0..6).
    const ExampleBundle b = builtin_seed("gr25");
    const Quiver g = quiver_of(b.seed.B);
    std::set<std::pair<int, int>> got;
    for (const auto& a : g.arrows) {
        CHECK(a.weight == 1);
        got.insert({a.from, a.to});
    }
    const std::set<std::pair<int, int>> expected{
        {3, 2}, {2, 1}, {1, 0}, {2, 4}, {1, 5}, {5, 2}, {6, 1}};
    CHECK(got == expected);
}

TEST_CASE("rank-0 seed has no arrows") {
    const ExampleBundle b = builtin_seed("projective(4)");
    CHECK(quiver_of(b.seed.B).arrows.empty());
}

TEST_CASE("validation of malformed matrices") {
    CHECK_THROWS_AS(QuasiCommutationMatrix(IntMat(2, 2, {0, 1, 1, 0})), validation_error);
    CHECK_THROWS_AS(ExchangeMatrix(IntMat(2, 2, {0, 1, 1, 0}), {0, 1}), validation_error);
    CHECK_THROWS_AS(ExchangeMatrix(IntMat(2, 1, {0, 1}), {0, 0}), validation_error);
    CHECK_THROWS_AS(ExchangeMatrix(IntMat(2, 1, {0, 1}), {5}), validation_error);
    CHECK_THROWS_AS(IntMat(2, 2, {1, 2, 3}), validation_error);
    const ExampleBundle sl2 = builtin_seed("sl2");
    const ExampleBundle gr = builtin_seed("gr25");
    CHECK_THROWS_AS(compatibility_diagonal(sl2.seed.B, gr.seed.L), validation_error);
}
