#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xprod {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Complex number with exact rational real and imaginary parts.
/// cpp_rational keeps fractions reduced with positive denominators, so
/// structural equality coincides with numeric equality.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() = default;
    Scalar(Rational r) : re(std::move(r)) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Scalar(long n) : re(n) {}
    Scalar(long num, long den) : re(Rational(num, den)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        Rational n2 = b.re * b.re + b.im * b.im;
        return Scalar((a.re * b.re + a.im * b.im) / n2,
                      (a.im * b.re - a.re * b.im) / n2);
    }

    Scalar inverse() const { return Scalar(1) / *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Canonical form: "0", "3", "-1/2", "2i", "1/2+1/3i", "1-2i".
inline std::string to_string(const Scalar& s) {
    if (s.im == 0) return to_string(s.re);
    std::string imag =
        (s.im == 1 ? "" : s.im == -1 ? "-" : to_string(s.im)) + "i";
    if (s.re == 0) return imag;
    if (s.im > 0) return to_string(s.re) + "+" + imag;
    return to_string(s.re) + imag;  // imag already carries the minus sign
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << to_string(s);
}

namespace detail {

inline Rational parse_rational_part(std::string_view text, std::string_view whole) {
    if (text.empty()) throw std::invalid_argument("empty rational in '" + std::string(whole) + "'");
    if (text.find('.') != std::string_view::npos)
        throw std::invalid_argument("decimal literals are not accepted, write an exact fraction: '" +
                                    std::string(whole) + "'");
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
}

}  // namespace detail

/// Parses "a/b", "a/b+c/d i", "-3", "i", "2-i", ... with optional spaces.
/// Decimal literals are rejected so that every input stays exact.
inline Scalar parse_scalar(std::string_view input) {
    std::string t;
    t.reserve(input.size());
    for (char c : input)
        if (c != ' ' && c != '\t') t += c;
    if (t.empty()) throw std::invalid_argument("empty scalar literal");

    bool imaginary = false;
    if (t.back() == 'i') {
        imaginary = true;
        t.pop_back();
    }
    if (!imaginary) return Scalar(detail::parse_rational_part(t, input));

    // Split "re±im" at the last top-level sign (not the leading one, not an
    // exponent: plain integers only, so any sign past position 0 splits).
    std::size_t split = std::string::npos;
    for (std::size_t p = t.size(); p-- > 1;) {
        if (t[p] == '+' || t[p] == '-') {
            split = p;
            break;
        }
    }
    auto unit = [&](std::string_view part) -> Rational {
        if (part.empty()) return Rational(1);
        if (part == "-") return Rational(-1);
        if (part == "+") return Rational(1);
        return detail::parse_rational_part(part, input);
    };
    if (split == std::string::npos) return Scalar(Rational(0), unit(t));
    Rational re = detail::parse_rational_part(std::string_view(t).substr(0, split), input);
    std::string_view imtok = std::string_view(t).substr(split);
    Rational im = (imtok == "+" || imtok == "-") ? (imtok == "-" ? Rational(-1) : Rational(1))
                                                 : detail::parse_rational_part(imtok, input);
    return Scalar(std::move(re), std::move(im));
}

}  // namespace xprod
