#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace xprod {

/// Two generator alphabets. In the star/Wick setting the B alphabet plays
/// the role of the conjugated generators (x*).
enum class Alphabet : std::uint8_t { A = 0, B = 1 };

/// One generator occurrence. Indices are 1-based and must stay within the
/// declared dimension of their alphabet (validated at the API boundaries,
/// not per letter).
struct Letter {
    Alphabet tag;
    int index;

    friend bool operator==(const Letter&, const Letter&) = default;

    // Canonical letter order: by index, A before B at equal index.
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        if (a.index != b.index) return a.index <=> b.index;
        return static_cast<int>(a.tag) <=> static_cast<int>(b.tag);
    }
};

inline Letter a_letter(int i) { return Letter{Alphabet::A, i}; }
inline Letter b_letter(int i) { return Letter{Alphabet::B, i}; }

/// A monomial: finite sequence of letters. The empty word is the unit of
/// every algebra in this library.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> ls) : letters(ls) {}
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    static Word unit() { return Word{}; }

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    const Letter& operator[](std::size_t i) const { return letters[i]; }

    bool pure(Alphabet t) const {
        for (const Letter& l : letters)
            if (l.tag != t) return false;
        return true;
    }

    /// All A-letters left of all B-letters.
    bool wick_ordered() const {
        bool seen_b = false;
        for (const Letter& l : letters) {
            if (l.tag == Alphabet::B) seen_b = true;
            else if (seen_b) return false;
        }
        return true;
    }

    /// Number of (B,A) pairs in the wrong order; 0 iff wick_ordered().
    std::size_t inversions() const {
        std::size_t b_seen = 0, inv = 0;
        for (const Letter& l : letters) {
            if (l.tag == Alphabet::B) ++b_seen;
            else inv += b_seen;
        }
        return inv;
    }

    std::size_t degree(Alphabet t) const {
        std::size_t d = 0;
        for (const Letter& l : letters) d += (l.tag == t);
        return d;
    }

    Word subword(std::size_t pos, std::size_t len) const {
        return Word(std::vector<Letter>(letters.begin() + pos, letters.begin() + pos + len));
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word r = a;
        r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
        return r;
    }

    friend bool operator==(const Word&, const Word&) = default;

    // Length-lexicographic order over the canonical letter order.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (auto c = a.letters[i] <=> b.letters[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

/// Display names for the two alphabets; defaults fit the Wick setting.
struct NameTable {
    std::vector<std::string> a_names;
    std::vector<std::string> b_names;

    std::string name(const Letter& l) const {
        const auto& v = l.tag == Alphabet::A ? a_names : b_names;
        std::size_t i = static_cast<std::size_t>(l.index) - 1;
        if (i < v.size()) return v[i];
        std::string n = "x" + std::to_string(l.index);
        return l.tag == Alphabet::A ? n : n + "*";
    }
};

inline std::string to_string(const Word& w, const NameTable& names = {}) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += names.name(w[i]);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << to_string(w);
}

/// All words of exactly the given length over one alphabet, in canonical
/// order. Every enumeration in this library takes an explicit degree bound.
inline std::vector<Word> all_words(Alphabet tag, int dim, std::size_t len) {
    std::vector<Word> out;
    Word w;
    w.letters.assign(len, Letter{tag, 1});
    for (;;) {
        out.push_back(w);
        std::size_t p = len;
        while (p > 0 && w.letters[p - 1].index == dim) w.letters[--p].index = 1;
        if (p == 0) break;
        ++w.letters[p - 1].index;
    }
    return out;
}

/// All words of exactly the given length over both alphabets.
inline std::vector<Word> all_mixed_words(int dim_a, int dim_b, std::size_t len) {
    std::vector<Letter> letters;
    for (int i = 1; i <= dim_a; ++i) letters.push_back(a_letter(i));
    for (int i = 1; i <= dim_b; ++i) letters.push_back(b_letter(i));
    std::vector<Word> out;
    std::vector<std::size_t> idx(len, 0);
    for (;;) {
        Word w;
        w.letters.reserve(len);
        for (std::size_t i : idx) w.letters.push_back(letters[i]);
        out.push_back(std::move(w));
        std::size_t p = len;
        while (p > 0 && idx[p - 1] + 1 == letters.size()) idx[--p] = 0;
        if (p == 0) break;
        ++idx[p - 1];
    }
    return out;
}

}  // namespace xprod
