#pragma once

#include "qca/errors.hpp"
#include "qca/qscalar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qca {

/// Word in the generators of a presented algebra.
using Word = std::vector<int>;

/// Deglex: length first, then lexicographic in the generator order.
struct WordDegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Linear combination of words over Z[q^(±1/2)], canonical (no zero terms).
class NCPolynomial {
public:
    NCPolynomial() = default;

    static NCPolynomial scalar(QScalar c) {
        NCPolynomial p;
        if (!c.is_zero()) p.terms_.emplace(Word{}, std::move(c));
        return p;
    }
    static NCPolynomial generator(int index) { return monomial(Word{index}); }
    static NCPolynomial monomial(Word w, QScalar c = QScalar(1)) {
        NCPolynomial p;
        if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, QScalar, WordDegLexLess>& terms() const { return terms_; }

    /// Maximum word length (0 for scalars and for the zero polynomial).
    int degree() const { return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size()); }

    const std::pair<const Word, QScalar>& leading() const {
        if (terms_.empty()) throw internal_error("NCPolynomial: leading term of zero");
        return *terms_.rbegin();
    }

    bool operator==(const NCPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPolynomial& o) const { return !(*this == o); }

    NCPolynomial& operator+=(const NCPolynomial& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPolynomial& operator-=(const NCPolynomial& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { a += b; return a; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { a -= b; return a; }
    friend NCPolynomial operator-(const NCPolynomial& a) {
        NCPolynomial r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend NCPolynomial operator*(const QScalar& c, const NCPolynomial& p) {
        NCPolynomial r;
        if (c.is_zero()) return r;
        for (const auto& [w, cw] : p.terms_) r.terms_.emplace(w, c * cw);
        return r;
    }
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
        NCPolynomial r;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) {
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                r.add_term(w, cu * cv);
            }
        return r;
    }
    NCPolynomial& operator*=(const NCPolynomial& o) { return *this = *this * o; }

    void add_term(const Word& w, QScalar c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string cs = it->second.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            bool compound = cs.find(' ') != std::string::npos;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            if (it->first.empty()) {
                os << (compound ? "(" + cs + ")" : cs);
                continue;
            }
            if (cs != "1") os << (compound ? "(" + cs + ")" : cs) << "*";
            for (size_t i = 0; i < it->first.size(); i++)
                os << (i ? "*" : "") << names[it->first[i]];
        }
        return os.str();
    }

private:
    std::map<Word, QScalar, WordDegLexLess> terms_;
};

/// a*b - q^(s/2)*b*a; s counts q^(1/2) units, so s = 2 gives the usual
/// [a,b]_q and s = -2 gives [a,b]_{q^{-1}}.
inline NCPolynomial q_commutator(const NCPolynomial& a, const NCPolynomial& b, int s) {
    return a * b - qpow(s) * (b * a);
}

struct Relation {
    NCPolynomial poly;
    std::string note;
    bool adjoined = false;
};

/// Generators in a fixed total order plus a relation list; the order is the
/// monomial order used for straightening.
struct Presentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<Relation> relations;
    int degree_bound = 8;

    int index_of(const std::string& g) const {
        for (size_t i = 0; i < generators.size(); i++)
            if (generators[i] == g) return static_cast<int>(i);
        throw validation_error("presentation: unknown generator '" + g + "'");
    }
    NCPolynomial gen(const std::string& g) const { return NCPolynomial::generator(index_of(g)); }

    void add_relation(NCPolynomial p, std::string note, bool adjoined = false) {
        relations.push_back({std::move(p), std::move(note), adjoined});
    }
};

struct RewriteRule {
    Word lhs;
    NCPolynomial rhs;
};

struct CompletionOptions {
    int max_rules = 4000;
};

/// Rewrite system confluent on words of length <= degree_bound: every
/// overlap of combined length within the bound resolves to zero.
class RewriteSystem {
public:
    RewriteSystem(std::vector<std::string> generator_names, int degree_bound)
        : names_(std::move(generator_names)), degree_bound_(degree_bound),
          by_first_(names_.size()) {}

    const std::vector<RewriteRule>& rules() const { return rules_; }
    int degree_bound() const { return degree_bound_; }
    const std::vector<std::string>& generator_names() const { return names_; }

    /// Fully reduced canonical representative.  Rules never increase deglex,
    /// so only the input degree is checked against the bound.
    NCPolynomial normal_form(const NCPolynomial& x) const {
        if (x.degree() > degree_bound_)
            throw bound_error("normal form: degree " + std::to_string(x.degree()) +
                              " exceeds bound " + std::to_string(degree_bound_));
        NCPolynomial result;
        std::map<Word, QScalar, WordDegLexLess> work(x.terms().begin(), x.terms().end());
        while (!work.empty()) {
            auto top = *work.rbegin();
            work.erase(std::prev(work.end()));
            int pos = -1, rule = -1;
            find_redex(top.first, pos, rule);
            if (rule < 0) {
                result.add_term(top.first, top.second);
                continue;
            }
            const RewriteRule& r = rules_[rule];
            const Word prefix(top.first.begin(), top.first.begin() + pos);
            const Word suffix(top.first.begin() + pos + r.lhs.size(), top.first.end());
            for (const auto& [w, c] : r.rhs.terms()) {
                Word nw = prefix;
                nw.insert(nw.end(), w.begin(), w.end());
                nw.insert(nw.end(), suffix.begin(), suffix.end());
                QScalar nc = top.second * c;
                auto it = work.find(nw);
                if (it == work.end()) {
                    work.emplace(std::move(nw), std::move(nc));
                } else {
                    it->second += nc;
                    if (it->second.is_zero()) work.erase(it);
                }
            }
        }
        return result;
    }

    bool is_normal_word(const Word& w) const {
        int pos, rule;
        find_redex(w, pos, rule);
        return rule < 0;
    }

    /// Number of irreducible words of the given length; for a homogeneous
    /// presentation this is the graded dimension of the algebra.
    std::uint64_t count_normal_words(int length) const {
        Word w;
        w.reserve(length);
        return count_rec(w, length);
    }

    void add_rule_unchecked(RewriteRule r) {
        by_first_[r.lhs[0]].push_back(static_cast<int>(rules_.size()));
        rules_.push_back(std::move(r));
    }
    void rebuild_index() {
        for (auto& v : by_first_) v.clear();
        for (size_t i = 0; i < rules_.size(); i++) by_first_[rules_[i].lhs[0]].push_back(static_cast<int>(i));
    }
    void remove_rule(size_t idx) {
        rules_.erase(rules_.begin() + idx);
        rebuild_index();
    }

private:
    void find_redex(const Word& w, int& pos, int& rule) const {
        pos = rule = -1;
        for (size_t p = 0; p < w.size(); p++) {
            for (int ri : by_first_[w[p]]) {
                const Word& l = rules_[ri].lhs;
                if (l.size() > w.size() - p) continue;
                if (std::equal(l.begin(), l.end(), w.begin() + p)) {
                    pos = static_cast<int>(p);
                    rule = ri;
                    return;
                }
            }
        }
    }

    std::uint64_t count_rec(Word& w, int length) const {
        if (static_cast<int>(w.size()) == length) return 1;
        std::uint64_t total = 0;
        for (int g = 0; g < static_cast<int>(names_.size()); g++) {
            w.push_back(g);
            // Prefixes are already clean, so only suffix redexes can appear.
            bool ok = true;
            for (const auto& r : rules_) {
                if (r.lhs.size() > w.size()) continue;
                if (std::equal(r.lhs.begin(), r.lhs.end(), w.end() - r.lhs.size())) {
                    ok = false;
                    break;
                }
            }
            if (ok) total += count_rec(w, length);
            w.pop_back();
        }
        return total;
    }

    std::vector<std::string> names_;
    int degree_bound_;
    std::vector<RewriteRule> rules_;
    std::vector<std::vector<int>> by_first_;
};

/// Degree-bounded diamond-lemma completion.  Relations are oriented by their
/// deglex-leading term, which must carry a unit coefficient; overlap
/// ambiguities of combined length within the bound are resolved until none
/// remain, adjoining rules as needed.
inline RewriteSystem complete(const Presentation& p, CompletionOptions opts = {}) {
    for (const auto& rel : p.relations)
        if (rel.poly.degree() > p.degree_bound)
            throw bound_error("completion: relation degree exceeds the degree bound");

    RewriteSystem R(p.generators, p.degree_bound);
    std::deque<NCPolynomial> pending;
    // Consequences whose leading coefficient is not yet a unit wait here
    // until new rules make them further reducible.
    std::vector<NCPolynomial> deferred;
    for (const auto& rel : p.relations) pending.push_back(rel.poly);

    while (!pending.empty()) {
        NCPolynomial poly = R.normal_form(pending.front());
        pending.pop_front();
        if (poly.is_zero()) continue;

        // Coefficients live in Z[q^(±1/2)] but the algebras are defined over
        // a field with q generic, so a common scalar factor of a consequence
        // carries no information; divide it out.
        {
            QScalar content;
            for (const auto& [w, c] : poly.terms()) {
                content = QScalar::gcd(content, c);
                if (content.is_unit()) break;
            }
            if (!content.is_unit() && !content.is_zero()) {
                NCPolynomial reduced;
                for (const auto& [w, c] : poly.terms()) {
                    auto d = QScalar::divide_exact(c, content);
                    if (!d) throw internal_error("completion: content division failed");
                    reduced.add_term(w, *d);
                }
                poly = std::move(reduced);
            }
        }

        const auto& [lead, coeff] = poly.leading();
        if (lead.empty())
            throw validation_error("completion: inconsistent presentation (nonzero scalar relation)");
        if (!coeff.is_unit()) {
            deferred.push_back(std::move(poly));
            continue;
        }
        RewriteRule rule;
        rule.lhs = lead;
        NCPolynomial rest = poly - NCPolynomial::monomial(lead, coeff);
        rule.rhs = (-coeff.unit_inverse()) * rest;

        // Existing rules whose left side contains the new one go back to the
        // queue; this keeps the rule set inclusion-free.
        for (size_t i = R.rules().size(); i-- > 0;) {
            const Word& l = R.rules()[i].lhs;
            if (l.size() < rule.lhs.size()) continue;
            bool contains = false;
            for (size_t pos = 0; pos + rule.lhs.size() <= l.size() && !contains; pos++)
                contains = std::equal(rule.lhs.begin(), rule.lhs.end(), l.begin() + pos);
            if (contains) {
                pending.push_back(NCPolynomial::monomial(l) - R.rules()[i].rhs);
                R.remove_rule(i);
            }
        }

        R.add_rule_unchecked(rule);
        if (static_cast<int>(R.rules().size()) > opts.max_rules)
            throw bound_error("completion: rule budget of " + std::to_string(opts.max_rules) +
                              " exceeded");
        for (auto& d : deferred) pending.push_back(std::move(d));
        deferred.clear();

        // Overlap ambiguities with every rule, in both orders.
        const size_t new_idx = R.rules().size() - 1;
        for (size_t i = 0; i < R.rules().size(); i++) {
            for (auto [a, b] : {std::make_pair(new_idx, i), std::make_pair(i, new_idx)}) {
                const Word& w1 = R.rules()[a].lhs;
                const Word& w2 = R.rules()[b].lhs;
                const size_t max_t = std::min(w1.size(), w2.size()) - 1;
                for (size_t t = 1; t <= max_t; t++) {
                    if (w1.size() + w2.size() - t > static_cast<size_t>(p.degree_bound)) continue;
                    if (!std::equal(w2.begin(), w2.begin() + t, w1.end() - t)) continue;
                    const Word u(w1.begin(), w1.end() - t);
                    const Word s(w2.begin() + t, w2.end());
                    NCPolynomial spoly = R.rules()[a].rhs * NCPolynomial::monomial(s) -
                                         NCPolynomial::monomial(u) * R.rules()[b].rhs;
                    if (!spoly.is_zero()) pending.push_back(std::move(spoly));
                }
                if (a == b) break;
            }
        }
    }
    if (!deferred.empty())
        throw validation_error("completion: leading coefficient " +
                               deferred.front().leading().second.str() +
                               " of a derived relation is not a unit");
    return R;
}

struct IdentityCheck {
    bool ok = false;
    NCPolynomial residue;
};

/// True iff lhs - rhs reduces to zero; the residue is returned either way.
inline IdentityCheck verify_identity(const NCPolynomial& lhs, const NCPolynomial& rhs,
                                     const RewriteSystem& R) {
    IdentityCheck c;
    c.residue = R.normal_form(lhs - rhs);
    c.ok = c.residue.is_zero();
    return c;
}

/// 2x2 quantum minor on columns i < j of a 2-row matrix of algebra elements:
/// m_1i m_2j - q^(sign/2) m_1j m_2i.  sign = 2 gives the q-minor, -2 the
/// q^{-1}-minor.
inline NCPolynomial quantum_minor(const std::vector<std::vector<NCPolynomial>>& m, int i, int j,
                                  int sign = 2) {
    if (m.size() != 2) throw validation_error("quantum minor: need a 2-row matrix");
    if (i >= j || i < 0 || j >= static_cast<int>(m[0].size()) || m[1].size() != m[0].size())
        throw validation_error("quantum minor: bad column indices");
    return m[0][i] * m[1][j] - qpow(sign) * (m[0][j] * m[1][i]);
}

/// Parses one polynomial in the presentation expression syntax: sums of
/// products of integers, q-powers, generator names, parenthesised
/// subexpressions and qcomm(a, b, s).
inline NCPolynomial parse_ncpolynomial(std::string_view text, const Presentation& p) {
    detail::ScalarLexer lx{text};

    auto parse_expr = [&](auto&& self_expr) -> NCPolynomial {
        auto parse_factor = [&]() -> NCPolynomial {
            if (lx.accept('(')) {
                NCPolynomial e = self_expr(self_expr);
                lx.expect(')');
                return e;
            }
            if (lx.peek_digit()) return NCPolynomial::scalar(QScalar(lx.integer()));
            std::string n = lx.name();
            if (n == "q") {
                if (lx.accept('^')) return NCPolynomial::scalar(qpow(lx.half_exponent()));
                return NCPolynomial::scalar(qpow(2));
            }
            if (n == "qcomm") {
                lx.expect('(');
                NCPolynomial a = self_expr(self_expr);
                lx.expect(',');
                NCPolynomial b = self_expr(self_expr);
                lx.expect(',');
                const long long s = lx.integer();
                lx.expect(')');
                return q_commutator(a, b, static_cast<int>(s));
            }
            return p.gen(n);
        };
        auto parse_term = [&]() -> NCPolynomial {
            NCPolynomial t = parse_factor();
            while (lx.accept('*')) t *= parse_factor();
            return t;
        };
        bool neg = lx.accept('-');
        NCPolynomial result = parse_term();
        if (neg) result = -result;
        while (true) {
            if (lx.accept('+')) result += parse_term();
            else if (lx.accept('-')) result -= parse_term();
            else break;
        }
        return result;
    };

    NCPolynomial r = parse_expr(parse_expr);
    if (!lx.eof()) throw parse_error("trailing input at position " + std::to_string(lx.pos));
    return r;
}

/// Loads a presentation from the declarative text format:
///   name: <string>            (optional)
///   generators: g1 g2 ...     (in monomial order)
///   degree_bound: D           (optional, default 8)
///   rel: <expression>         (repeatable; set to zero)
inline Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_gens = false;
    while (std::getline(in, line)) {
        lineno++;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto notspace = line.find_first_not_of(" \t\r");
        if (notspace == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("presentation line " + std::to_string(lineno) + ": expected 'key: value'");
        const std::string key = line.substr(notspace, line.find_last_not_of(" \t", colon - 1) + 1 - notspace);
        std::string value = line.substr(colon + 1);
        if (key == "name") {
            std::istringstream vs(value);
            vs >> p.name;
        } else if (key == "generators") {
            std::istringstream vs(value);
            std::string g;
            while (vs >> g) {
                if (g == "q" || g == "qcomm")
                    throw parse_error("presentation line " + std::to_string(lineno) + ": '" + g +
                                      "' is a reserved name");
                p.generators.push_back(g);
            }
            have_gens = true;
        } else if (key == "degree_bound") {
            p.degree_bound = static_cast<int>(std::stol(value));
        } else if (key == "rel") {
            if (!have_gens)
                throw parse_error("presentation line " + std::to_string(lineno) +
                                  ": relations must follow the generator list");
            try {
                p.add_relation(parse_ncpolynomial(value, p), "line " + std::to_string(lineno));
            } catch (const parse_error& e) {
                throw parse_error("presentation line " + std::to_string(lineno) + ": " + e.what());
            }
        } else {
            throw parse_error("presentation line " + std::to_string(lineno) + ": unknown key '" + key +
                              "'");
        }
    }
    if (!have_gens) throw parse_error("presentation: missing generator list");
    return p;
}

} // namespace qca
