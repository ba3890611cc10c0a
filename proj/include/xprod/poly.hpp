#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "xprod/scalar.hpp"
#include "xprod/word.hpp"

namespace xprod {

/// Noncommutative polynomial: finite Scalar combination of words.
/// Canonical form invariant: the term map never stores a zero coefficient,
/// so structural equality is algebra equality. Iteration order is the
/// canonical length-lex word order, which makes printing deterministic.
class NCPoly {
public:
    using TermMap = std::map<Word, Scalar>;

    NCPoly() = default;
    explicit NCPoly(Word w) { terms_.emplace(std::move(w), Scalar::one()); }
    NCPoly(Word w, Scalar c) {
        if (!c.is_zero()) terms_.emplace(std::move(w), std::move(c));
    }

    static NCPoly zero() { return NCPoly(); }
    static NCPoly unit() { return NCPoly(Word::unit()); }
    static NCPoly scalar(Scalar c) { return NCPoly(Word::unit(), std::move(c)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar::zero() : it->second;
    }

    /// Largest word length present.
    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [w, c] : terms_) d = std::max(d, w.size());
        return d;
    }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NCPoly& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
    friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
    friend NCPoly operator-(NCPoly a) {
        for (auto& [w, v] : a.terms_) v = -v;
        return a;
    }

    /// Free-algebra product: bilinear extension of word concatenation.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
        return r;
    }

    friend bool operator==(const NCPoly&, const NCPoly&) = default;

    /// True when the canonical-form invariant holds (used by tests).
    bool canonical() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return !t.second.is_zero(); });
    }

private:
    TermMap terms_;
};

inline NCPoly word_mul(const Word& a, const Word& b) { return NCPoly(a * b); }

/// The antilinear anti-involution: reverses words, swaps the alphabets at
/// equal index, conjugates coefficients. star(star(p)) == p.
inline Letter star(const Letter& l) {
    return Letter{l.tag == Alphabet::A ? Alphabet::B : Alphabet::A, l.index};
}

inline Word star(const Word& w) {
    Word r;
    r.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(star(*it));
    return r;
}

inline NCPoly star(const NCPoly& p) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) r.add_term(star(w), c.conj());
    return r;
}

inline std::string to_string(const NCPoly& p, const NameTable& names = {}) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        std::string cs = to_string(c);
        bool negated = false;
        if (!first && cs.front() == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
            negated = true;  // print "a - b" instead of "a + -b"
            cs.erase(cs.begin());
        }
        if (!first) s += negated ? " - " : " + ";
        bool needs_parens = cs.find_first_of("+-", 1) != std::string::npos;
        if (w.empty()) {
            s += needs_parens ? "(" + cs + ")" : cs;
        } else {
            if (cs == "1") {
                s += to_string(w, names);
            } else if (cs == "-1") {
                s += "-" + to_string(w, names);
            } else {
                s += (needs_parens ? "(" + cs + ")" : cs) + " " + to_string(w, names);
            }
        }
        first = false;
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const NCPoly& p) {
    return os << to_string(p);
}

}  // namespace xprod
