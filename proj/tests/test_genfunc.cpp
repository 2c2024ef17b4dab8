#include <gtest/gtest.h>

#include "elimpoly/families.hpp"
#include "elimpoly/genfunc.hpp"

namespace elimpoly {
namespace {

const Poly X = Poly::x(), Y = Poly::y(), Z = Poly::z();

TEST(PathSeries, LeadingCoefficients) {
    const Series s = path_series(4);
    EXPECT_EQ(s.order(), 4u);
    EXPECT_EQ(s[0], Poly(1));
    EXPECT_EQ(s[1], X);
    EXPECT_EQ(s[2], X * X + X * Y + Z);
}

TEST(CycleSeries, LeadingCoefficients) {
    const Series s = cycle_series(3);
    EXPECT_EQ(s[0], Poly(1));
    EXPECT_EQ(s[1], X + X * Y + Z);
    EXPECT_EQ(s[2], parse_poly("x^2 + 2*x*y + 2*z + x*y^2 + y*z"));
}

TEST(Series, OrderZero) {
    EXPECT_EQ(path_series(0).coefficients(), std::vector<Poly>{Poly(1)});
    EXPECT_EQ(cycle_series(0).coefficients(), std::vector<Poly>{Poly(1)});
}

TEST(PathSeries, DenominatorTimesSeriesIsNumerator) {
    const Series prod = series_mul(path_denominator(15), path_series(15));
    EXPECT_EQ(prod, series_from_coeffs({Poly(1), -Y}, 15));
}

TEST(Series, CoefficientsMatchRecurrences) {
    const Series paths = path_series(15);
    const Series cycles = cycle_series(15);
    for (unsigned n = 0; n <= 15; ++n) EXPECT_EQ(paths[n], xi_path_poly(n)) << n;
    for (unsigned n = 1; n <= 15; ++n) EXPECT_EQ(cycles[n], xi_cycle_poly(n)) << n;
    EXPECT_EQ(cycles[0], Poly(1));
}

}  // namespace
}  // namespace elimpoly
