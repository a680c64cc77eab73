#pragma once

#include "qca/matrices.hpp"
#include "qca/torus.hpp"

#include <string>
#include <vector>

namespace qca {

/// A quantum seed: labelled cluster, exchange matrix, quasi-commutation
/// matrix.  When expansions are present, entry i is the i-th cluster variable
/// written in the initial frame (a Laurent-phenomenon witness); all seeds in
/// one exploration share that frame.
struct QuantumSeed {
    std::vector<std::string> names;
    ExchangeMatrix B;
    QuasiCommutationMatrix L;
    std::vector<TorusElement> expansions;
    Frame initial_frame;

    int var_count() const { return B.var_count(); }
    int mutable_count() const { return B.mutable_count(); }
    bool tracked() const { return initial_frame != nullptr; }

    void validate() const {
        B.validate();
        if (L.size() != B.var_count()) throw validation_error("seed: L size does not match B rows");
        if (names.size() != static_cast<size_t>(B.var_count()))
            throw validation_error("seed: name count does not match B rows");
        if (!expansions.empty() && expansions.size() != names.size())
            throw validation_error("seed: expansion count does not match cluster size");
    }
};

inline QuantumSeed make_seed(std::vector<std::string> names, ExchangeMatrix B, QuasiCommutationMatrix L) {
    QuantumSeed s{std::move(names), std::move(B), std::move(L), {}, nullptr};
    s.validate();
    return s;
}

/// Starts Laurent tracking: each variable becomes the basis monomial M(e_i)
/// over the seed's own frame.
inline QuantumSeed with_tracking(QuantumSeed s) {
    s.initial_frame = make_frame(s.L);
    s.expansions.clear();
    for (int i = 0; i < s.var_count(); i++)
        s.expansions.push_back(frame_monomial(s.initial_frame, unit_vector(s.var_count(), i)));
    return s;
}

/// One side of a quantum exchange relation X_k X_k' = sum of two terms, each
/// a power of q times an ordered product of current cluster variables.
struct ExchangeTerm {
    QScalar coeff;
    ExpVec exponents;
};

struct ExchangeRelation {
    int column = 0;
    int row = 0;
    ExchangeTerm plus_term, minus_term;

    std::string str(const std::vector<std::string>& names, const std::string& new_name) const {
        auto side = [&](const ExchangeTerm& t) {
            std::ostringstream os;
            std::ostringstream mono;
            bool empty = true;
            for (size_t i = 0; i < t.exponents.size(); i++) {
                if (t.exponents[i] == 0) continue;
                if (!empty) mono << "*";
                empty = false;
                mono << names[i];
                if (t.exponents[i] != 1) mono << "^" << t.exponents[i];
            }
            const std::string cs = t.coeff.str();
            if (empty) os << cs;
            else if (cs == "1") os << mono.str();
            else if (cs == "-1") os << "-" << mono.str();
            else os << cs << "*" << mono.str();
            return os.str();
        };
        return names[row] + "*" + new_name + " = " + side(plus_term) + " + " + side(minus_term);
    }
};

namespace detail {

inline std::pair<ExpVec, ExpVec> exchange_vectors(const ExchangeMatrix& B, int k) {
    const int m = B.var_count();
    const int rk = B.row_of_column(k);
    ExpVec vplus(m, 0), vminus(m, 0);
    vplus[rk] = vminus[rk] = -1;
    for (int i = 0; i < m; i++) {
        const std::int64_t b = B.mat.at(i, k);
        if (b > 0) vplus[i] = static_cast<int>(b);
        if (b < 0) vminus[i] = static_cast<int>(-b);
    }
    return {vplus, vminus};
}

} // namespace detail

/// The quantum exchange relation at direction k, multiplied through by X_k so
/// that both sides are polynomial in the current cluster.  Coefficients match
/// the q-powers the exchange monomial M produces.
inline ExchangeRelation compute_exchange_relation(const QuantumSeed& seed, int k) {
    if (k < 0 || k >= seed.mutable_count())
        throw validation_error("exchange: direction " + std::to_string(k) + " out of range");
    const int rk = seed.B.row_of_column(k);
    const auto [vplus, vminus] = detail::exchange_vectors(seed.B, k);
    const ExpVec ek = unit_vector(seed.var_count(), rk);

    auto make_term = [&](const ExpVec& v) {
        ExchangeTerm t;
        t.exponents.resize(v.size());
        for (size_t i = 0; i < v.size(); i++) t.exponents[i] = ek[i] + v[i];
        const std::int64_t h =
            pairing_half(seed.L, ek, v) + ordered_prefactor_half(seed.L, t.exponents);
        t.coeff = qpow(static_cast<int>(h));
        return t;
    };

    return ExchangeRelation{k, rk, make_term(vplus), make_term(vminus)};
}

/// The mutated variable X_k' = M(v+) + M(v-) over the seed's own frame.
inline TorusElement exchange_variable(const QuantumSeed& seed, int k) {
    if (k < 0 || k >= seed.mutable_count())
        throw validation_error("exchange: direction " + std::to_string(k) + " out of range");
    const auto [vplus, vminus] = detail::exchange_vectors(seed.B, k);
    const Frame f = make_frame(seed.L);
    return frame_monomial(f, vplus) + frame_monomial(f, vminus);
}

namespace detail {

/// Initial-frame expansion of the ordered product X^w (w >= 0) of current
/// cluster variables; the prefactor converts from the current frame monomial.
inline TorusElement expand_current_monomial(const QuantumSeed& seed, const ExpVec& w) {
    TorusElement r = frame_monomial(seed.initial_frame, ExpVec(seed.var_count(), 0));
    for (int i = 0; i < seed.var_count(); i++)
        for (int e = 0; e < w[i]; e++) r = r * seed.expansions[i];
    return r;
}

} // namespace detail

/// Initial-frame expansion of the mutated variable, obtained by exact
/// division of the exchange right-hand side by the current variable.  A
/// division failure signals a Laurent-phenomenon violation.
inline TorusElement exchange_variable_expansion(const QuantumSeed& seed, int k) {
    if (!seed.tracked()) throw validation_error("exchange: seed has no tracked expansions");
    const ExchangeRelation rel = compute_exchange_relation(seed, k);
    TorusElement rhs = rel.plus_term.coeff * detail::expand_current_monomial(seed, rel.plus_term.exponents);
    rhs += rel.minus_term.coeff * detail::expand_current_monomial(seed, rel.minus_term.exponents);
    return torus_divide_exact(rhs, seed.expansions[rel.row]);
}

/// Full seed mutation: matrix mutation, quasi-commutation mutation and, when
/// tracked, replacement of the exchanged variable's expansion.
inline QuantumSeed mutate_seed(const QuantumSeed& seed, int k) {
    QuantumSeed r = seed;
    const int rk = seed.B.row_of_column(k);
    if (seed.tracked()) r.expansions[rk] = exchange_variable_expansion(seed, k);
    r.L = mutate_quasi_commutation(seed.B, seed.L, k);
    r.B = mutate_exchange_matrix(seed.B, k);
    r.names[rk] = seed.names[rk] + "'";
    return r;
}

} // namespace qca
