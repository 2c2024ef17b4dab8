#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "elimpoly/poly.hpp"

namespace elimpoly {

/// Truncated formal power series sum_{n=0}^{N} c_n t^n with Poly coefficients.
class Series {
public:
    /// The zero series of truncation order N.
    explicit Series(std::size_t order) : coeffs_(order + 1) {}

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const std::vector<Poly>& coefficients() const { return coeffs_; }
    [[nodiscard]] const Poly& operator[](std::size_t n) const { return coeffs_.at(n); }
    Poly& operator[](std::size_t n) { return coeffs_.at(n); }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Poly> coeffs_;
};

/// Pads with zeros or truncates `coeffs` to exactly N+1 entries.
inline Series series_from_coeffs(std::vector<Poly> coeffs, std::size_t order) {
    Series s(order);
    for (std::size_t n = 0; n < std::min(coeffs.size(), order + 1); ++n) s[n] = std::move(coeffs[n]);
    return s;
}

inline Series series_add(const Series& l, const Series& r) {
    Series out(std::min(l.order(), r.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out[n] = l[n] + r[n];
    return out;
}

/// Cauchy product truncated at the smaller of the two orders.
inline Series series_mul(const Series& l, const Series& r) {
    Series out(std::min(l.order(), r.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) {
        Poly acc;
        for (std::size_t k = 0; k <= n; ++k) {
            if (l[k].is_zero() || r[n - k].is_zero()) continue;
            acc += l[k] * r[n - k];
        }
        out[n] = std::move(acc);
    }
    return out;
}

/// Reciprocal of a series whose constant coefficient is the polynomial 1.
/// inv_0 = 1, inv_n = -sum_{k=1}^{n} s_k inv_{n-k}.
inline Series series_inverse(const Series& s) {
    if (!(s[0] == Poly(1)))
        throw std::domain_error("series_inverse: constant coefficient must be 1, got " + to_string(s[0]));
    Series inv(s.order());
    inv[0] = Poly(1);
    for (std::size_t n = 1; n <= s.order(); ++n) {
        Poly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (s[k].is_zero()) continue;
            acc += s[k] * inv[n - k];
        }
        inv[n] = -acc;
    }
    return inv;
}

}  // namespace elimpoly
