// Generating functions of xi over paths and cycles, expanded as truncated
// power series in t:
//
//   sum xi(P_n) t^n = (1 - y t) / (1 - (x+y) t - z t^2)
//   sum xi(C_n) t^n = (1 + z t^2) / (1 - (x+y) t - z t^2) + (xy - y + z) t / (1 - y t)
#pragma once

#include <cstddef>

#include "elimpoly/poly.hpp"
#include "elimpoly/series.hpp"

namespace elimpoly {

/// 1 - (x+y) t - z t^2, truncated at order N.
inline Series path_denominator(std::size_t order) {
    return series_from_coeffs({Poly(1), -(Poly::x() + Poly::y()), -Poly::z()}, order);
}

inline Series path_series(std::size_t order) {
    const Series numerator = series_from_coeffs({Poly(1), -Poly::y()}, order);
    return series_mul(numerator, series_inverse(path_denominator(order)));
}

inline Series cycle_series(std::size_t order) {
    const Poly x = Poly::x(), y = Poly::y(), z = Poly::z();
    const Series inv_den = series_inverse(path_denominator(order));
    const Series first = series_mul(series_from_coeffs({Poly(1), Poly(0), z}, order), inv_den);
    const Series tail_inverse = series_inverse(series_from_coeffs({Poly(1), -y}, order));
    const Series second = series_mul(series_from_coeffs({Poly(0), x * y - y + z}, order), tail_inverse);
    return series_add(first, second);
}

}  // namespace elimpoly
