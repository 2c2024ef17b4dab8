/*
 * families.hpp
 * ------------
 * xi for paths P_n and cycles C_n: exact polynomials from the linear
 * recurrences, and double-precision closed forms from the roots of the
 * characteristic equation r^2 - (x+y) r - z = 0.
 *
 * Path recurrence (remove an end edge):
 *   xi(P_n) = (x+y) xi(P_{n-1}) + z xi(P_{n-2}),   xi(P_0) = 1, xi(P_1) = x.
 * Cycle recurrence (remove any edge):
 *   xi(C_n) = xi(P_n) + y xi(C_{n-1}) + z xi(P_{n-2}),   n >= 3.
 *
 * With D = (x+y)^2 + 4z the closed forms split three ways: two real roots
 * (D > 0), a complex-conjugate pair written in polar form with angle phi
 * (D < 0), and a repeated root (D = 0).
 */
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "elimpoly/poly.hpp"

namespace elimpoly {

// ---------------------------------------------------------------------------
// Exact polynomials

inline Poly xi_path_poly(unsigned n) {
    if (n == 0) return Poly(1);
    const Poly step = Poly::x() + Poly::y();
    Poly prev(1);
    Poly cur = Poly::x();
    for (unsigned k = 2; k <= n; ++k) {
        Poly next = step * cur + Poly::z() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// xi(P_0), ..., xi(P_n).
inline std::vector<Poly> xi_path_polys(unsigned n) {
    std::vector<Poly> out{Poly(1)};
    if (n == 0) return out;
    out.push_back(Poly::x());
    const Poly step = Poly::x() + Poly::y();
    for (unsigned k = 2; k <= n; ++k) out.push_back(step * out[k - 1] + Poly::z() * out[k - 2]);
    return out;
}

inline Poly xi_cycle1_poly() { return Poly::x() + Poly::x() * Poly::y() + Poly::z(); }

inline Poly xi_cycle2_poly() {
    const Poly x = Poly::x(), y = Poly::y(), z = Poly::z();
    return x * x + (x * y).scaled(2) + z.scaled(2) + x * y * y + y * z;
}

/// n = 0 gives 1 (C_0 is the empty graph).
inline Poly xi_cycle_poly(unsigned n) {
    if (n == 0) return Poly(1);
    if (n == 1) return xi_cycle1_poly();
    if (n == 2) return xi_cycle2_poly();
    const auto paths = xi_path_polys(n);
    Poly cycle = xi_cycle2_poly();
    for (unsigned k = 3; k <= n; ++k) cycle = paths[k] + Poly::y() * cycle + Poly::z() * paths[k - 2];
    return cycle;
}

/// The cycle recurrence iterated down to C_1, for n >= 3:
///   xi(C_n) = xi(P_n) + y xi(P_{n-1}) + (y^2+z) sum_{j=0}^{n-4} y^j xi(P_{n-j-2})
///             + y^{n-3} (xz + yz + xy^2 + xy^3 + y^2 z).
inline Poly xi_cycle_poly_unrolled(unsigned n) {
    if (n < 3) throw std::invalid_argument("xi_cycle_poly_unrolled requires n >= 3");
    const Poly x = Poly::x(), y = Poly::y(), z = Poly::z();
    const auto paths = xi_path_polys(n);
    Poly sum;
    for (unsigned j = 0; j + 4 <= n; ++j) sum += y.pow(j) * paths[n - j - 2];
    const Poly tail = x * z + y * z + x * y * y + x * y.pow(3) + y * y * z;
    return paths[n] + y * paths[n - 1] + (y * y + z) * sum + y.pow(n - 3) * tail;
}

// ---------------------------------------------------------------------------
// Closed forms

enum class RootCase { PositiveDiscriminant, NegativeDiscriminant, RepeatedRoot };

struct ClosedFormCase {
    RootCase kind = RootCase::RepeatedRoot;
    double discriminant = 0;
    double phi = 0;  // only meaningful for NegativeDiscriminant
};

/// Relative threshold under which D is treated as zero.
inline constexpr double kDiscriminantEpsilon = 1e-12;

inline double discriminant(const FloatPoint& pt) {
    return pt.x * pt.x + 2 * pt.x * pt.y + pt.y * pt.y + 4 * pt.z;
}

/// Argument of the root (x+y)/2 + i sqrt(-D)/2; lies in (0, pi).
inline double phase_phi(const FloatPoint& pt) {
    const double d = discriminant(pt);
    if (!(d < 0)) throw std::domain_error("phase_phi requires a negative discriminant");
    const double s = pt.x + pt.y;
    const double root = std::sqrt(-d);
    if (s > 0) return std::atan(root / s);
    if (s == 0) return std::numbers::pi / 2;
    return std::numbers::pi + std::atan(root / s);
}

inline ClosedFormCase classify(const FloatPoint& pt) {
    ClosedFormCase c;
    c.discriminant = discriminant(pt);
    const double s = pt.x + pt.y;
    const double scale = std::max({1.0, s * s, 4 * std::abs(pt.z)});
    if (std::abs(c.discriminant) <= kDiscriminantEpsilon * scale) {
        c.kind = RootCase::RepeatedRoot;
    } else if (c.discriminant > 0) {
        c.kind = RootCase::PositiveDiscriminant;
    } else {
        c.kind = RootCase::NegativeDiscriminant;
        c.phi = phase_phi(pt);
    }
    return c;
}

namespace detail {

/// base^n by squaring; 0^0 = 1.
inline double ipow(double base, unsigned n) {
    double result = 1;
    while (n != 0) {
        if (n & 1u) result *= base;
        n >>= 1;
        if (n != 0) base *= base;
    }
    return result;
}

struct RealRoots {
    double small, large, sqrt_d;  // small = (x+y-sqrt D)/2, large = (x+y+sqrt D)/2
};

/// Roots for D > 0. The root sharing the sign of x+y is formed by addition
/// and the other from the product r1 r2 = -z, avoiding cancellation.
inline RealRoots real_roots(const FloatPoint& pt, double d) {
    const double s = pt.x + pt.y;
    const double sq = std::sqrt(d);
    RealRoots r{0, 0, sq};
    if (s >= 0) {
        r.large = (s + sq) / 2;
        r.small = -pt.z / r.large;
    } else {
        r.small = (s - sq) / 2;
        r.large = -pt.z / r.small;
    }
    return r;
}

/// (-z)^{n/2} for z < 0.
inline double modulus_power(double z, unsigned n) { return std::exp(0.5 * n * std::log(-z)); }

}  // namespace detail

/// Two real roots: c1 r1^n + c2 r2^n with c1 = (sqrt D - x + y)/(2 sqrt D),
/// c2 = (sqrt D + x - y)/(2 sqrt D). Requires D > 0.
inline double xi_path_real_roots(unsigned n, const FloatPoint& pt) {
    const double d = discriminant(pt);
    if (!(d > 0)) throw std::domain_error("xi_path_real_roots requires a positive discriminant");
    const auto r = detail::real_roots(pt, d);
    const double c1 = (r.sqrt_d - pt.x + pt.y) / (2 * r.sqrt_d);
    const double c2 = (r.sqrt_d + pt.x - pt.y) / (2 * r.sqrt_d);
    return c1 * detail::ipow(r.small, n) + c2 * detail::ipow(r.large, n);
}

/// Complex roots: (-z)^{n/2} (cos(n phi) + (x-y)/sqrt(-D) sin(n phi)).
/// Requires D < 0, which forces z < 0.
inline double xi_path_complex_roots(unsigned n, const FloatPoint& pt) {
    const double d = discriminant(pt);
    if (!(d < 0)) throw std::domain_error("xi_path_complex_roots requires a negative discriminant");
    const double phi = phase_phi(pt);
    const double nphi = n * phi;
    return detail::modulus_power(pt.z, n) * (std::cos(nphi) + (pt.x - pt.y) / std::sqrt(-d) * std::sin(nphi));
}

/// Repeated root: ((n+1)x - (n-1)y)/2 * ((x+y)/2)^{n-1}. Exact when D = 0.
inline double xi_path_repeated_root(unsigned n, const FloatPoint& pt) {
    if (n == 0) return 1;
    const double nn = n;
    return ((nn + 1) * pt.x - (nn - 1) * pt.y) / 2 * detail::ipow((pt.x + pt.y) / 2, n - 1);
}

inline double xi_path_closed(unsigned n, const FloatPoint& pt) {
    if (n == 0) return 1;
    switch (classify(pt).kind) {
    case RootCase::PositiveDiscriminant: return xi_path_real_roots(n, pt);
    case RootCase::NegativeDiscriminant: return xi_path_complex_roots(n, pt);
    case RootCase::RepeatedRoot: break;
    }
    return xi_path_repeated_root(n, pt);
}

namespace detail {

inline double cycle_tail(unsigned n, const FloatPoint& pt) {
    return ipow(pt.y, n - 1) * (pt.x * pt.y - pt.y + pt.z);
}

}  // namespace detail

/// r1^n + r2^n + y^{n-1}(xy - y + z). Valid for D >= 0 (sqrt D = 0 allowed).
inline double xi_cycle_real_roots(unsigned n, const FloatPoint& pt) {
    if (n == 0) return 1;
    double d = discriminant(pt);
    if (d < 0) {
        if (classify(pt).kind != RootCase::RepeatedRoot)
            throw std::domain_error("xi_cycle_real_roots requires a nonnegative discriminant");
        d = 0;
    }
    const auto r = d == 0 ? detail::RealRoots{(pt.x + pt.y) / 2, (pt.x + pt.y) / 2, 0} : detail::real_roots(pt, d);
    return detail::ipow(r.small, n) + detail::ipow(r.large, n) + detail::cycle_tail(n, pt);
}

/// 2 (-z)^{n/2} cos(n phi) + y^{n-1}(xy - y + z). Valid for D <= 0; at
/// D = 0 phi is 0, pi/2 or pi according to the sign of x+y.
inline double xi_cycle_complex_roots(unsigned n, const FloatPoint& pt) {
    if (n == 0) return 1;
    double d = discriminant(pt);
    if (d > 0) {
        if (classify(pt).kind != RootCase::RepeatedRoot)
            throw std::domain_error("xi_cycle_complex_roots requires a nonpositive discriminant");
        d = 0;
    }
    double phi;
    const double s = pt.x + pt.y;
    if (d < 0) {
        phi = phase_phi(pt);
    } else {
        phi = s > 0 ? 0.0 : (s == 0 ? std::numbers::pi / 2 : std::numbers::pi);
    }
    // At D = 0 the modulus is |x+y|/2 exactly; -z may be slightly off.
    const double modulus_n = d < 0 ? detail::modulus_power(pt.z, n) : detail::ipow(std::abs(s) / 2, n);
    return 2 * modulus_n * std::cos(n * phi) + detail::cycle_tail(n, pt);
}

/// Repeated root: 2((x+y)/2)^n - ((x^2 - 2xy + y^2 + 4y)/4) y^{n-1}.
inline double xi_cycle_repeated_root(unsigned n, const FloatPoint& pt) {
    if (n == 0) return 1;
    const double s = pt.x + pt.y;
    const double lead = (pt.x * pt.x - 2 * pt.x * pt.y + pt.y * pt.y + 4 * pt.y) / 4;
    return 2 * detail::ipow(s / 2, n) - lead * detail::ipow(pt.y, n - 1);
}

/// n = 0 gives 1 (C_0 is the empty graph).
inline double xi_cycle_closed(unsigned n, const FloatPoint& pt) {
    if (n == 0) return 1;
    switch (classify(pt).kind) {
    case RootCase::PositiveDiscriminant: return xi_cycle_real_roots(n, pt);
    case RootCase::NegativeDiscriminant: return xi_cycle_complex_roots(n, pt);
    case RootCase::RepeatedRoot: break;
    }
    return xi_cycle_repeated_root(n, pt);
}

}  // namespace elimpoly
