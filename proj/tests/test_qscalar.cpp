#include "qca/qscalar.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qca;

namespace {

std::mt19937 rng(20260809);

QScalar random_scalar() {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-6, 6), coeff(-9, 9);
    QScalar s;
    const int n = nterms(rng);
    for (int i = 0; i < n; i++) s += QScalar::q_half(exp(rng), coeff(rng));
    return s;
}

} // namespace

TEST_CASE("q powers") {
    CHECK(qpow(0) == QScalar(1));
    CHECK(qpow(2) * qpow(-2) == QScalar(1));
    CHECK(qpow(1) * qpow(1) == qpow(2));
    for (int i = 0; i < 200; i++) {
        std::uniform_int_distribution<int> exp(-12, 12);
        const int h = exp(rng), k = exp(rng);
        CHECK(qpow(h) * qpow(k) == qpow(h + k));
    }
}

TEST_CASE("exact arithmetic") {
    const QScalar q = qpow(2), qi = qpow(-2);
    CHECK((q - qi) * (q + qi) == qpow(4) - qpow(-4));
    CHECK(((q - qi) - (q - qi)).is_zero());
    CHECK(q * (QScalar(1) + qi) == q + QScalar(1));
}

TEST_CASE("classical limit of scalars") {
    CHECK(eval_at_one(qpow(2) - qpow(-2)) == 0);
    CHECK(eval_at_one(QScalar(1) + qpow(2)) == 2);
    CHECK(eval_at_one(qpow(1)) == 1);
}

TEST_CASE("ring laws on random elements") {
    for (int i = 0; i < 300; i++) {
        const QScalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b));
        CHECK(eval_at_one(a + b) == eval_at_one(a) + eval_at_one(b));
    }
}

TEST_CASE("units") {
    CHECK(qpow(3).is_unit());
    CHECK((-qpow(-5)).is_unit());
    CHECK_FALSE((qpow(2) + QScalar(1)).is_unit());
    CHECK_FALSE(QScalar(2).is_unit());
    CHECK(qpow(3) * qpow(3).unit_inverse() == QScalar(1));
    CHECK((-qpow(-1)) * (-qpow(-1)).unit_inverse() == QScalar(1));
}

TEST_CASE("exact division") {
    // (1 - q^2) / (1 - q) = 1 + q
    const QScalar num = QScalar(1) - qpow(4);
    const QScalar den = QScalar(1) - qpow(2);
    auto quo = QScalar::divide_exact(num, den);
    REQUIRE(quo.has_value());
    CHECK(*quo == QScalar(1) + qpow(2));

    CHECK_FALSE(QScalar::divide_exact(QScalar(1), QScalar(1) - qpow(2)).has_value());
    CHECK_FALSE(QScalar::divide_exact(QScalar(3), QScalar(2)).has_value());

    for (int i = 0; i < 300; i++) {
        const QScalar a = random_scalar(), b = random_scalar();
        if (b.is_zero()) continue;
        auto c = QScalar::divide_exact(a * b, b);
        REQUIRE(c.has_value());
        CHECK(*c == a);
    }
}

TEST_CASE("rendering") {
    CHECK(QScalar().str() == "0");
    CHECK(QScalar(1).str() == "1");
    CHECK(QScalar(-3).str() == "-3");
    CHECK(qpow(2).str() == "q");
    CHECK(qpow(-2).str() == "q^-1");
    CHECK(qpow(4).str() == "q^2");
    CHECK(qpow(1).str() == "q^(1/2)");
    CHECK(qpow(-3).str() == "q^(-3/2)");
    CHECK((qpow(2) - qpow(-2)).str() == "q - q^-1");
    CHECK((QScalar::q_half(2, 3) + QScalar(1)).str() == "3*q + 1");
    CHECK((-qpow(2) - QScalar(2)).str() == "-q - 2");
}

TEST_CASE("parsing") {
    CHECK(parse_qscalar("0").is_zero());
    CHECK(parse_qscalar("q - q^-1") == qpow(2) - qpow(-2));
    CHECK(parse_qscalar("q^(1/2)") == qpow(1));
    CHECK(parse_qscalar("2*q^(-3/2) + 1") == QScalar::q_half(-3, 2) + QScalar(1));
    CHECK(parse_qscalar("q^2*q^-1") == qpow(2));
    CHECK(parse_qscalar("q^(-1)") == qpow(-2));
    CHECK_THROWS_AS(parse_qscalar("q +"), parse_error);
    CHECK_THROWS_AS(parse_qscalar("x"), parse_error);
    CHECK_THROWS_AS(parse_qscalar("q^(1/3)"), parse_error);

    for (int i = 0; i < 200; i++) {
        const QScalar a = random_scalar();
        CHECK(parse_qscalar(a.str()) == a);
    }
}
