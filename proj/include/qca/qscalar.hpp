#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qca {

using Int = boost::multiprecision::cpp_int;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of Z[q^(1/2), q^(-1/2)].  Exponents are stored as integer counts
/// of q^(1/2) units, so no rational arithmetic is ever needed.  The term map
/// never holds a zero coefficient.
class QScalar {
public:
    QScalar() = default;
    QScalar(long long n) { if (n != 0) terms_[0] = n; }
    QScalar(const Int& n) { if (n != 0) terms_[0] = n; }

    /// q^(h/2) with coefficient c.
    static QScalar q_half(int h, Int c = 1) {
        QScalar s;
        if (c != 0) s.terms_[h] = std::move(c);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    /// Units of Z[q^(±1/2)] are ±q^(h/2).
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const Int& c = terms_.begin()->second;
        return c == 1 || c == -1;
    }
    QScalar unit_inverse() const {
        if (!is_unit()) throw std::domain_error("QScalar: inverse of a non-unit");
        return q_half(-terms_.begin()->first, terms_.begin()->second);
    }

    size_t term_count() const { return terms_.size(); }
    const std::map<int, Int>& terms() const { return terms_; }

    int min_half_exp() const { return terms_.begin()->first; }
    int max_half_exp() const { return terms_.rbegin()->first; }

    /// Substitutes q^(1/2) = 1.
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [h, c] : terms_) s += c;
        return s;
    }

    QScalar& operator+=(const QScalar& o) {
        for (const auto& [h, c] : o.terms_) add_term(h, c);
        return *this;
    }
    QScalar& operator-=(const QScalar& o) {
        for (const auto& [h, c] : o.terms_) add_term(h, -c);
        return *this;
    }
    friend QScalar operator+(QScalar a, const QScalar& b) { a += b; return a; }
    friend QScalar operator-(QScalar a, const QScalar& b) { a -= b; return a; }
    friend QScalar operator-(const QScalar& a) {
        QScalar r;
        for (const auto& [h, c] : a.terms_) r.terms_[h] = -c;
        return r;
    }
    friend QScalar operator*(const QScalar& a, const QScalar& b) {
        QScalar r;
        for (const auto& [h1, c1] : a.terms_)
            for (const auto& [h2, c2] : b.terms_) r.add_term(h1 + h2, c1 * c2);
        return r;
    }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }

    bool operator==(const QScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const QScalar& o) const { return !(*this == o); }

    /// Total order used for canonical forms; compares term lists.
    static int compare(const QScalar& a, const QScalar& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        }
        if (ia != a.terms_.end()) return 1;
        if (ib != b.terms_.end()) return -1;
        return 0;
    }

    /// Greatest common divisor in Z[q^(±1/2)], normalized to lowest exponent
    /// zero and positive leading integer coefficient.
    static QScalar gcd(const QScalar& a, const QScalar& b) {
        if (a.is_zero()) return normalize_assoc(b);
        if (b.is_zero()) return normalize_assoc(a);
        QScalar pa = normalize_assoc(a), pb = normalize_assoc(b);
        const Int ic = gcd_int(int_content(pa), int_content(pb));
        pa = primitive_part(pa);
        pb = primitive_part(pb);
        while (!pb.is_zero()) {
            QScalar r = pseudo_remainder(pa, pb);
            pa = pb;
            pb = primitive_part(normalize_assoc(r));
        }
        QScalar g = QScalar(ic) * pa;
        return normalize_assoc(g);
    }

    /// Exact division in Z[q^(±1/2)]; nullopt when num is not a multiple of den.
    static std::optional<QScalar> divide_exact(const QScalar& num, const QScalar& den) {
        if (den.is_zero()) return std::nullopt;
        if (num.is_zero()) return QScalar();
        // The quotient's lowest exponent is pinned by the trailing terms.
        const int trail_bound = num.min_half_exp() - den.min_half_exp();
        QScalar quo, rem = num;
        const auto& [hd, cd] = *den.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& [hr, cr] = *rem.terms_.rbegin();
            if (hr - hd < trail_bound) return std::nullopt;
            if (cr % cd != 0) return std::nullopt;
            QScalar t = q_half(hr - hd, cr / cd);
            quo += t;
            rem -= t * den;
        }
        return quo;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Highest power first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Int c = it->second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            const int h = it->first;
            if (h == 0) {
                os << c;
            } else {
                if (c != 1) os << c << "*";
                os << power_str(h);
            }
        }
        return os.str();
    }

    /// "q^(h/2)" with the exponent printed as an integer or half-integer.
    static std::string power_str(int h) {
        if (h == 0) return "1";
        if (h == 2) return "q";
        std::ostringstream os;
        os << "q^";
        if (h % 2 == 0) os << h / 2;
        else os << "(" << h << "/2)";
        return os.str();
    }

private:
    void add_term(int h, Int c) {
        if (c == 0) return;
        auto it = terms_.find(h);
        if (it == terms_.end()) {
            terms_.emplace(h, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static Int gcd_int(Int a, Int b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Int int_content(const QScalar& a) {
        Int g = 0;
        for (const auto& [h, c] : a.terms_) g = gcd_int(g, c);
        return g;
    }

    // Shift to lowest exponent zero, make the leading integer positive.
    static QScalar normalize_assoc(const QScalar& a) {
        if (a.is_zero()) return a;
        QScalar r = a * q_half(-a.min_half_exp());
        if (r.terms_.rbegin()->second < 0) r = -r;
        return r;
    }

    static QScalar primitive_part(const QScalar& a) {
        if (a.is_zero()) return a;
        const Int c = int_content(a);
        QScalar r;
        for (const auto& [h, cc] : a.terms_) r.terms_.emplace(h, cc / c);
        return r;
    }

    // Fraction-free remainder of a by b (up to a scalar multiple), for gcd.
    // Both arguments are normalized to lowest exponent zero.
    static QScalar pseudo_remainder(QScalar a, const QScalar& b) {
        const int hb = b.max_half_exp();
        const Int cb = b.terms_.rbegin()->second;
        while (!a.is_zero() && a.max_half_exp() >= hb) {
            const int ha = a.max_half_exp();
            const Int ca = a.terms_.rbegin()->second;
            a = QScalar(cb) * a - q_half(ha - hb, ca) * b;
        }
        return a;
    }

    std::map<int, Int> terms_;
};

/// The monomial q^(h/2); h counts q^(1/2) units.
inline QScalar qpow(int h) { return QScalar::q_half(h); }

inline Int eval_at_one(const QScalar& a) { return a.eval_at_one(); }

namespace detail {

// Shared by the scalar parser and the presentation parser in ncalg.hpp.
struct ScalarLexer {
    std::string_view src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) pos++;
    }
    bool eof() { skip_ws(); return pos >= src.size(); }
    char peek() { skip_ws(); return pos < src.size() ? src[pos] : '\0'; }
    bool accept(char c) {
        if (peek() == c) { pos++; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw parse_error("expected '" + std::string(1, c) + "' at position " + std::to_string(pos) +
                              " in \"" + std::string(src) + "\"");
    }
    bool peek_digit() {
        char c = peek();
        return c >= '0' && c <= '9';
    }
    long long integer() {
        skip_ws();
        bool neg = accept('-');
        if (!peek_digit()) throw parse_error("expected integer at position " + std::to_string(pos));
        long long v = 0;
        while (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') v = v * 10 + (src[pos++] - '0');
        return neg ? -v : v;
    }
    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
                                    src[pos] == '\''))
            pos++;
        if (start == pos) throw parse_error("expected name at position " + std::to_string(pos));
        return std::string(src.substr(start, pos - start));
    }

    /// Exponent after "q^": integer, (integer), or (odd/2).
    int half_exponent() {
        if (accept('(')) {
            long long a = integer();
            if (accept('/')) {
                long long b = integer();
                if (b != 2) throw parse_error("only halves are supported in q exponents");
                expect(')');
                return static_cast<int>(a);
            }
            expect(')');
            return static_cast<int>(2 * a);
        }
        return static_cast<int>(2 * integer());
    }
};

} // namespace detail

/// Parses the rendering format of QScalar::str(): sums of c*q^(h/2) terms.
inline QScalar parse_qscalar(std::string_view text) {
    detail::ScalarLexer lx{text};
    auto parse_factor = [&]() -> QScalar {
        if (lx.peek() == 'q') {
            lx.pos++;
            if (lx.accept('^')) return qpow(lx.half_exponent());
            return qpow(2);
        }
        if (lx.peek_digit()) return QScalar(lx.integer());
        throw parse_error("unexpected character in scalar at position " + std::to_string(lx.pos));
    };
    auto parse_term = [&]() -> QScalar {
        QScalar t = parse_factor();
        while (lx.accept('*')) t *= parse_factor();
        return t;
    };
    QScalar result;
    bool neg = lx.accept('-');
    result = parse_term();
    if (neg) result = -result;
    while (!lx.eof()) {
        if (lx.accept('+')) result += parse_term();
        else if (lx.accept('-')) result -= parse_term();
        else throw parse_error("trailing input in scalar at position " + std::to_string(lx.pos));
    }
    return result;
}

} // namespace qca
