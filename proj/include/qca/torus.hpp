#pragma once

#include "qca/errors.hpp"
#include "qca/matrices.hpp"
#include "qca/qscalar.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace qca {

using ExpVec = std::vector<int>;

/// Degree-lexicographic order on exponent vectors: total degree first, then
/// lexicographic.  Any addition-compatible total order would do for exact
/// division; deglex keeps intermediate supports small.
struct DegLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        const long long da = std::accumulate(a.begin(), a.end(), 0LL);
        const long long db = std::accumulate(b.begin(), b.end(), 0LL);
        if (da != db) return da < db;
        return a < b;
    }
};

using Frame = std::shared_ptr<const QuasiCommutationMatrix>;

inline Frame make_frame(QuasiCommutationMatrix L) {
    return std::make_shared<const QuasiCommutationMatrix>(std::move(L));
}

/// a^T L b, in q^(1/2) units.
inline std::int64_t pairing_half(const QuasiCommutationMatrix& L, const ExpVec& a, const ExpVec& b) {
    std::int64_t s = 0;
    for (int i = 0; i < L.size(); i++) {
        if (a[i] == 0) continue;
        for (int j = 0; j < L.size(); j++) s += static_cast<std::int64_t>(a[i]) * L.at(i, j) * b[j];
    }
    return s;
}

/// Exponent (in q^(1/2) units) relating M(a) to the ordered product:
/// M(a) = q^(sum_{i<j} a_i a_j L(j,i) / 2) X_1^{a_1} ... X_m^{a_m}.
inline std::int64_t ordered_prefactor_half(const QuasiCommutationMatrix& L, const ExpVec& a) {
    std::int64_t s = 0;
    for (int i = 0; i < L.size(); i++) {
        if (a[i] == 0) continue;
        for (int j = i + 1; j < L.size(); j++) s += static_cast<std::int64_t>(a[i]) * a[j] * L.at(j, i);
    }
    return s;
}

/// Finite sum of based quantum-torus monomials coeff * M(a) over a fixed
/// frame L, where M(a) M(b) = q^((a^T L b)/2) M(a + b).  Immutable value
/// semantics; elements over distinct frames never mix.
class TorusElement {
public:
    TorusElement() = default;
    explicit TorusElement(Frame frame) : frame_(std::move(frame)) {}

    static TorusElement monomial(Frame frame, const ExpVec& a, QScalar coeff = QScalar(1)) {
        TorusElement t(std::move(frame));
        if (static_cast<int>(a.size()) != t.frame_->size())
            throw validation_error("TorusElement: exponent vector length does not match frame");
        if (!coeff.is_zero()) t.terms_.emplace(a, std::move(coeff));
        return t;
    }

    const Frame& frame() const { return frame_; }
    int rank() const { return frame_ ? frame_->size() : 0; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, QScalar, DegLexLess>& terms() const { return terms_; }

    bool same_frame(const TorusElement& o) const {
        if (frame_ == o.frame_) return true;
        return frame_ && o.frame_ && *frame_ == *o.frame_;
    }

    bool operator==(const TorusElement& o) const { return same_frame(o) && terms_ == o.terms_; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    /// Total order for canonical seed sorting.
    static int compare(const TorusElement& a, const TorusElement& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return DegLexLess{}(ia->first, ib->first) ? -1 : 1;
            if (int c = QScalar::compare(ia->second, ib->second)) return c;
        }
        if (ia != a.terms_.end()) return 1;
        if (ib != b.terms_.end()) return -1;
        return 0;
    }

    TorusElement& operator+=(const TorusElement& o) {
        require_same_frame(o);
        if (!frame_) frame_ = o.frame_;
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    TorusElement& operator-=(const TorusElement& o) {
        require_same_frame(o);
        if (!frame_) frame_ = o.frame_;
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { a += b; return a; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { a -= b; return a; }

    friend TorusElement operator*(const QScalar& c, const TorusElement& u) {
        TorusElement r(u.frame_);
        if (c.is_zero()) return r;
        for (const auto& [a, ca] : u.terms_) r.terms_.emplace(a, c * ca);
        return r;
    }

    std::int64_t pairing(const ExpVec& a, const ExpVec& b) const { return pairing_half(*frame_, a, b); }

    /// Coefficient of the ordered product X^a, i.e. the stored M-coefficient
    /// times the reordering prefactor.
    QScalar ordered_coefficient(const ExpVec& a) const {
        auto it = terms_.find(a);
        if (it == terms_.end()) return QScalar();
        return it->second * qpow(static_cast<int>(ordered_prefactor_half(*frame_, a)));
    }

    friend TorusElement operator*(const TorusElement& u, const TorusElement& v) {
        u.require_same_frame(v);
        TorusElement r(u.frame_ ? u.frame_ : v.frame_);
        for (const auto& [a, ca] : u.terms_)
            for (const auto& [b, cb] : v.terms_) {
                ExpVec s(a.size());
                for (size_t i = 0; i < a.size(); i++) s[i] = a[i] + b[i];
                r.add_term(s, ca * cb * qpow(static_cast<int>(u.pairing(a, b))));
            }
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            QScalar c = ordered_coefficient(it->first);
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            bool monomial_empty = true;
            std::ostringstream mono;
            for (size_t i = 0; i < it->first.size(); i++) {
                const int e = it->first[i];
                if (e == 0) continue;
                if (!monomial_empty) mono << "*";
                monomial_empty = false;
                mono << (i < names.size() ? names[i] : "X" + std::to_string(i + 1));
                if (e != 1) mono << "^" << e;
            }
            if (monomial_empty) {
                os << cs;
            } else {
                if (cs != "1") os << cs << "*";
                os << mono.str();
            }
        }
        return os.str();
    }

private:
    void require_same_frame(const TorusElement& o) const {
        if (frame_ && o.frame_ && !same_frame(o))
            throw validation_error("TorusElement: mixing elements over different frames");
    }
    void add_term(const ExpVec& a, QScalar c) {
        if (c.is_zero()) return;
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            terms_.emplace(a, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Frame frame_;
    std::map<ExpVec, QScalar, DegLexLess> terms_;
};

inline TorusElement frame_monomial(const Frame& frame, const ExpVec& a, QScalar coeff = QScalar(1)) {
    return TorusElement::monomial(frame, a, std::move(coeff));
}

inline ExpVec unit_vector(int m, int i) {
    ExpVec e(m, 0);
    e[i] = 1;
    return e;
}

/// Exact division in the quantum torus: returns w with den * w = num.
/// Leading-term elimination under deglex; exactness pins the quotient support
/// inside a finite box, so escape from the box means a nonzero remainder.
inline TorusElement torus_divide_exact(const TorusElement& num, const TorusElement& den) {
    if (den.is_zero()) throw division_error("torus division by zero");
    if (!num.same_frame(den)) throw validation_error("torus division: frame mismatch");
    if (num.is_zero()) return TorusElement(num.frame() ? num.frame() : den.frame());

    const int m = num.rank();
    ExpVec lo(m), hi(m);
    {
        ExpVec num_lo(m, 0), num_hi(m, 0), den_lo(m, 0), den_hi(m, 0);
        auto bounds = [m](const TorusElement& t, ExpVec& mn, ExpVec& mx) {
            bool first = true;
            for (const auto& [a, c] : t.terms()) {
                for (int i = 0; i < m; i++) {
                    if (first || a[i] < mn[i]) mn[i] = a[i];
                    if (first || a[i] > mx[i]) mx[i] = a[i];
                }
                first = false;
            }
        };
        bounds(num, num_lo, num_hi);
        bounds(den, den_lo, den_hi);
        for (int i = 0; i < m; i++) {
            lo[i] = num_lo[i] - den_lo[i];
            hi[i] = num_hi[i] - den_hi[i];
        }
    }

    const auto& dlead = *den.terms().rbegin();
    TorusElement quo(den.frame());
    TorusElement rem = num;
    while (!rem.is_zero()) {
        const auto& [ra, rc] = *rem.terms().rbegin();
        ExpVec e(m);
        for (int i = 0; i < m; i++) {
            e[i] = ra[i] - dlead.first[i];
            if (e[i] < lo[i] || e[i] > hi[i])
                throw division_error("torus division: nonzero remainder");
        }
        const QScalar factor = dlead.second * qpow(static_cast<int>(den.pairing(dlead.first, e)));
        auto c = QScalar::divide_exact(rc, factor);
        if (!c) throw division_error("torus division: coefficient not divisible");
        const TorusElement t = frame_monomial(den.frame(), e, *c);
        quo += t;
        rem -= den * t;
    }
    return quo;
}

/// Commutative Laurent polynomial with integer coefficients; the image of a
/// torus element under q^(1/2) -> 1.
class CommLaurent {
public:
    CommLaurent() = default;

    static CommLaurent monomial(const ExpVec& a, Int c = 1) {
        CommLaurent r;
        if (c != 0) r.terms_.emplace(a, std::move(c));
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, Int, DegLexLess>& terms() const { return terms_; }
    bool operator==(const CommLaurent& o) const { return terms_ == o.terms_; }

    CommLaurent& operator+=(const CommLaurent& o) {
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    friend CommLaurent operator+(CommLaurent a, const CommLaurent& b) { a += b; return a; }
    friend CommLaurent operator*(const CommLaurent& a, const CommLaurent& b) {
        CommLaurent r;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) {
                ExpVec s(u.size());
                for (size_t i = 0; i < u.size(); i++) s[i] = u[i] + v[i];
                r.add_term(s, cu * cv);
            }
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Int c = it->second;
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first = false;
            if (c < 0) c = -c;
            std::ostringstream mono;
            bool empty = true;
            for (size_t i = 0; i < it->first.size(); i++) {
                if (it->first[i] == 0) continue;
                if (!empty) mono << "*";
                empty = false;
                mono << (i < names.size() ? names[i] : "X" + std::to_string(i + 1));
                if (it->first[i] != 1) mono << "^" << it->first[i];
            }
            if (empty) os << c;
            else {
                if (c != 1) os << c << "*";
                os << mono.str();
            }
        }
        return os.str();
    }

private:
    void add_term(const ExpVec& a, Int c) {
        if (c == 0) return;
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            terms_.emplace(a, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<ExpVec, Int, DegLexLess> terms_;
};

/// Applies eval_at_one to every coefficient, forgetting the ordering data.
inline CommLaurent classical_limit(const TorusElement& u) {
    CommLaurent r;
    for (const auto& [a, c] : u.terms()) r += CommLaurent::monomial(a, c.eval_at_one());
    return r;
}

} // namespace qca
