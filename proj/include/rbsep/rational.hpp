#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace rbsep {

/// Exact rational scalar used for every coordinate and predicate in the
/// library. GMP keeps values reduced with a positive denominator, so
/// comparisons agree with the real order and equal values compare equal.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

/// Serializes as "num/den" with den > 0, e.g. "3/1", "-7/2". Integers keep
/// the explicit denominator so round-trips stay unambiguous.
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace detail {

inline bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace detail

/// Parses "p", "p/q" or a decimal literal like "-1.25" exactly.
/// Returns nullopt on malformed input or a zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    const std::size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!detail::is_integer_text(num) || !detail::is_integer_text(den)) return std::nullopt;
        mpz_class n{std::string(num)};
        mpz_class d{std::string(den)};
        if (d == 0) return std::nullopt;
        return make_rational(n, d);
    }

    const std::size_t dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ipart = text.substr(0, dot);
        std::string_view fpart = text.substr(dot + 1);
        bool negative = !ipart.empty() && ipart[0] == '-';
        if (ipart.empty() || ipart == "-" || ipart == "+") ipart = negative ? "-0" : "0";
        if (!detail::is_integer_text(ipart)) return std::nullopt;
        if (fpart.empty()) fpart = "0";
        for (char c : fpart)
            if (c < '0' || c > '9') return std::nullopt;
        mpz_class scale = 1;
        for (std::size_t i = 0; i < fpart.size(); ++i) scale *= 10;
        mpz_class whole{std::string(ipart)};
        mpz_class frac{std::string(fpart)};
        mpz_class num = whole * scale + (negative ? mpz_class(-frac) : frac);
        return make_rational(num, scale);
    }

    if (!detail::is_integer_text(text)) return std::nullopt;
    return make_rational(mpz_class(std::string(text)), mpz_class(1));
}

/// Rational extended with -inf / +inf markers; used for unbounded interval
/// and rectangle ends in the ply engine.
struct ExtRational {
    enum class Kind { NegInf, Finite, PosInf };

    Kind kind = Kind::Finite;
    Rational value;  // meaningful only when kind == Finite

    ExtRational() = default;
    ExtRational(Rational v) : kind(Kind::Finite), value(std::move(v)) {}

    static ExtRational neg_inf() {
        ExtRational e;
        e.kind = Kind::NegInf;
        return e;
    }
    static ExtRational pos_inf() {
        ExtRational e;
        e.kind = Kind::PosInf;
        return e;
    }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_neg_inf() const { return kind == Kind::NegInf; }
    bool is_pos_inf() const { return kind == Kind::PosInf; }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.kind != b.kind) return false;
        return a.kind != Kind::Finite || a.value == b.value;
    }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.kind == Kind::NegInf) return b.kind != Kind::NegInf;
        if (a.kind == Kind::PosInf) return false;
        if (b.kind == Kind::PosInf) return true;
        if (b.kind == Kind::NegInf) return false;
        return a.value < b.value;
    }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }
};

inline std::ostream& operator<<(std::ostream& os, const ExtRational& e) {
    switch (e.kind) {
        case ExtRational::Kind::NegInf: return os << "-inf";
        case ExtRational::Kind::PosInf: return os << "+inf";
        default: return os << e.value;
    }
}

/// Midpoint-style representative of the open interval (lo, hi); unbounded
/// sides clamp to the nearest finite end +/- 1, and a doubly unbounded
/// interval maps to 0.
inline Rational interval_representative(const ExtRational& lo, const ExtRational& hi) {
    if (lo.is_finite() && hi.is_finite()) return Rational(lo.value + hi.value) / 2;
    if (lo.is_finite()) return lo.value + 1;
    if (hi.is_finite()) return hi.value - 1;
    return Rational(0);
}

}  // namespace rbsep
