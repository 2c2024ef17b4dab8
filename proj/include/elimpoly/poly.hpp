/*
 * poly.hpp
 * --------
 * Sparse polynomials in the three variables x, y, z with arbitrary-precision
 * integer coefficients.
 *
 * A Poly is a map from Monomial to a nonzero cpp_int coefficient. Terms are
 * kept in canonical order: monomials are compared as the words x..xy..yz..z
 * (x^a y^b z^c spelled out), lexicographically with x < y < z and a proper
 * prefix first. This gives e.g.
 *
 *   x^2 + 2*x*y + x*y^2 + y*z + 2*z
 *
 * Exponents are capped at kMaxExponent; any operation that would exceed the
 * cap throws exponent_overflow instead of wrapping.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace elimpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Var : std::uint8_t { x = 0, y = 1, z = 2 };

class exponent_overflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Largest exponent any single variable may carry (2^21 - 1).
inline constexpr std::uint32_t kMaxExponent = (1u << 21) - 1;

struct Monomial {
    std::uint32_t a = 0;  // exponent of x
    std::uint32_t b = 0;  // exponent of y
    std::uint32_t c = 0;  // exponent of z

    constexpr Monomial() = default;
    Monomial(std::uint32_t ax, std::uint32_t by, std::uint32_t cz) : a(ax), b(by), c(cz) {
        if (a > kMaxExponent || b > kMaxExponent || c > kMaxExponent)
            throw exponent_overflow("monomial exponent exceeds cap");
    }

    [[nodiscard]] std::uint64_t degree() const { return std::uint64_t{a} + b + c; }
    [[nodiscard]] bool is_one() const { return a == 0 && b == 0 && c == 0; }

    [[nodiscard]] std::uint32_t exponent(Var v) const {
        switch (v) {
        case Var::x: return a;
        case Var::y: return b;
        default: return c;
        }
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend Monomial operator*(const Monomial& l, const Monomial& r) {
        auto add = [](std::uint32_t p, std::uint32_t q) {
            std::uint64_t s = std::uint64_t{p} + q;
            if (s > kMaxExponent) throw exponent_overflow("monomial product exceeds exponent cap");
            return static_cast<std::uint32_t>(s);
        };
        Monomial m;
        m.a = add(l.a, r.a);
        m.b = add(l.b, r.b);
        m.c = add(l.c, r.c);
        return m;
    }
};

/// Word order on monomials: x^a y^b z^c is read as the string x..xy..yz..z.
struct MonomialOrder {
    bool operator()(const Monomial& l, const Monomial& r) const {
        if (l.a != r.a) {
            // The word with fewer x's sees either its end or a 'y'/'z' where
            // the other still has an 'x'.
            return l.a < r.a ? (l.b + l.c == 0) : (r.b + r.c != 0);
        }
        if (l.b != r.b) return l.b < r.b ? (l.c == 0) : (r.c != 0);
        return l.c < r.c;
    }
};

class Poly {
public:
    using Terms = std::map<Monomial, Integer, MonomialOrder>;

    Poly() = default;
    Poly(long long constant) { add_term(Monomial{}, Integer(constant)); }  // NOLINT(implicit)
    Poly(const Integer& constant) { add_term(Monomial{}, constant); }     // NOLINT(implicit)
    Poly(const Monomial& m, const Integer& coeff) { add_term(m, coeff); }

    static Poly variable(Var v) {
        Monomial m;
        switch (v) {
        case Var::x: m.a = 1; break;
        case Var::y: m.b = 1; break;
        case Var::z: m.c = 1; break;
        }
        return Poly(m, Integer(1));
    }
    static Poly x() { return variable(Var::x); }
    static Poly y() { return variable(Var::y); }
    static Poly z() { return variable(Var::z); }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    [[nodiscard]] Integer constant_term() const { return coefficient(Monomial{}); }

    [[nodiscard]] bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    [[nodiscard]] std::uint32_t max_exponent(Var v) const {
        std::uint32_t e = 0;
        for (const auto& [m, _] : terms_) e = std::max(e, m.exponent(v));
        return e;
    }

    /// Adds coeff * m in place; drops the term if it cancels.
    void add_term(const Monomial& m, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly l, const Poly& r) { return l += r; }
    friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
    friend Poly operator-(Poly p) {
        for (auto& [_, c] : p.terms_) c = -c;
        return p;
    }

    friend Poly operator*(const Poly& l, const Poly& r) {
        Poly out;
        for (const auto& [ml, cl] : l.terms_)
            for (const auto& [mr, cr] : r.terms_) out.add_term(ml * mr, cl * cr);
        return out;
    }

    [[nodiscard]] Poly scaled(const Integer& k) const {
        if (k == 0) return {};
        Poly out = *this;
        for (auto& [_, c] : out.terms_) c *= k;
        return out;
    }

    [[nodiscard]] Poly pow(unsigned e) const {
        Poly result(1);
        Poly base = *this;
        while (e != 0) {
            if (e & 1u) result *= base;
            e >>= 1;
            if (e != 0) base *= base;
        }
        return result;
    }

    friend bool operator==(const Poly& l, const Poly& r) { return l.terms_ == r.terms_; }

private:
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Evaluation and substitution

struct RationalPoint {
    Rational x, y, z;
};

struct FloatPoint {
    double x = 0, y = 0, z = 0;
};

namespace detail {

/// Lazily filled table of base^0, base^1, ... for repeated evaluation.
template <class T>
class PowerTable {
public:
    explicit PowerTable(T base) : base_(std::move(base)) { powers_.emplace_back(T(1)); }
    const T& operator[](std::uint32_t e) {
        while (powers_.size() <= e) powers_.push_back(powers_.back() * base_);
        return powers_[e];
    }

private:
    T base_;
    std::vector<T> powers_;
};

}  // namespace detail

inline Rational eval_exact(const Poly& p, const RationalPoint& pt) {
    detail::PowerTable<Rational> px(pt.x), py(pt.y), pz(pt.z);
    Rational sum = 0;
    for (const auto& [m, c] : p.terms()) sum += Rational(c) * px[m.a] * py[m.b] * pz[m.c];
    return sum;
}

inline double eval_float(const Poly& p, const FloatPoint& pt) {
    detail::PowerTable<double> px(pt.x), py(pt.y), pz(pt.z);
    double sum = 0;
    for (const auto& [m, c] : p.terms()) sum += c.convert_to<double>() * px[m.a] * py[m.b] * pz[m.c];
    return sum;
}

/// Images of x, y, z under a ring homomorphism Z[x,y,z] -> Z[x,y,z].
struct Substitution {
    Poly x = Poly::x();
    Poly y = Poly::y();
    Poly z = Poly::z();
};

inline Poly substitute(const Poly& p, const Substitution& sigma) {
    detail::PowerTable<Poly> px(sigma.x), py(sigma.y), pz(sigma.z);
    Poly out;
    for (const auto& [m, c] : p.terms()) out += (px[m.a] * py[m.b] * pz[m.c]).scaled(c);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical text form

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;

        std::vector<std::string> factors;
        if (mag != 1 || m.is_one()) factors.push_back(mag.str());
        auto push_var = [&](char name, std::uint32_t e) {
            if (e == 0) return;
            std::string f(1, name);
            if (e > 1) f += "^" + std::to_string(e);
            factors.push_back(std::move(f));
        };
        push_var('x', m.a);
        push_var('y', m.b);
        push_var('z', m.c);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += '*';
            out += factors[i];
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

class poly_parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// Optional sign, then decimal digits. cpp_int's own string constructor would
// read "010" as octal and accept hex, so it only ever sees stripped digits.
inline std::optional<Integer> parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) return std::nullopt;
    const auto first = s.find_first_not_of('0');
    if (first == std::string_view::npos) return Integer(0);
    Integer v(std::string(s.substr(first)));
    return negative ? Integer(-v) : v;
}

}  // namespace detail

/// Parses sums of terms like `-3*x^2*y + z - 7`. Accepts the canonical text
/// form and any reordering of it; factors within a term may repeat.
inline Poly parse_poly(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw poly_parse_error("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    };
    auto read_uint = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (start == pos) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    };

    Poly result;
    skip_ws();
    if (pos == text.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;

        Integer coeff(sign);
        std::uint32_t e[3] = {0, 0, 0};
        bool need_factor = true;
        while (need_factor) {
            skip_ws();
            if (pos == text.size()) fail("expected factor");
            char ch = text[pos];
            if (ch >= '0' && ch <= '9') {
                coeff *= *detail::parse_decimal(read_uint());
            } else if (ch == 'x' || ch == 'y' || ch == 'z') {
                ++pos;
                std::uint64_t k = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    std::string digits = read_uint();
                    if (digits.size() > 9) throw exponent_overflow("exponent too large");
                    k = std::stoull(digits);
                }
                std::uint64_t total = e[ch - 'x'] + k;
                if (total > kMaxExponent) throw exponent_overflow("exponent exceeds cap");
                e[ch - 'x'] = static_cast<std::uint32_t>(total);
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            skip_ws();
            need_factor = pos < text.size() && text[pos] == '*';
            if (need_factor) ++pos;
        }
        result.add_term(Monomial(e[0], e[1], e[2]), coeff);
    }
    return result;
}

}  // namespace elimpoly
