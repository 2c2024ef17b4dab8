#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "elimpoly/families.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace elimpoly {
namespace {

using testing::closed_form_corpus;
using testing::Region;

const Poly X = Poly::x(), Y = Poly::y(), Z = Poly::z();

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

TEST(PathPoly, SmallCases) {
    EXPECT_EQ(xi_path_poly(0), Poly(1));
    EXPECT_EQ(xi_path_poly(1), X);
    EXPECT_EQ(xi_path_poly(2), X * X + X * Y + Z);
    EXPECT_EQ(xi_path_poly(3), parse_poly("x^3 + 2*x^2*y + x*y^2 + 2*x*z + y*z"));
    EXPECT_EQ(xi_path_polys(5).back(), xi_path_poly(5));
}

TEST(CyclePoly, SmallCases) {
    EXPECT_EQ(xi_cycle_poly(0), Poly(1));
    EXPECT_EQ(xi_cycle_poly(1), parse_poly("x + x*y + z"));
    EXPECT_EQ(xi_cycle_poly(2), parse_poly("x^2 + 2*x*y + 2*z + x*y^2 + y*z"));
    EXPECT_EQ(xi_cycle_poly(3), parse_poly("x^3 + 3*x^2*y + 3*x*y^2 + x*y^3 + 3*x*z + 3*y*z + y^2*z"));
}

TEST(CyclePoly, UnrolledRecurrenceAgrees) {
    for (unsigned n = 3; n <= 20; ++n) EXPECT_EQ(xi_cycle_poly_unrolled(n), xi_cycle_poly(n)) << n;
    EXPECT_THROW(xi_cycle_poly_unrolled(2), std::invalid_argument);
}

TEST(CyclePoly, RecurrenceAlsoHoldsAtTwo) {
    // xi(C_2) = xi(P_2) + y xi(C_1) + z xi(P_0)
    EXPECT_EQ(xi_cycle_poly(2), xi_path_poly(2) + Y * xi_cycle_poly(1) + Z);
}

TEST(Discriminant, Examples) {
    EXPECT_DOUBLE_EQ(discriminant({2, 1, 1}), 13.0);
    EXPECT_DOUBLE_EQ(discriminant({0, 0, -1}), -4.0);
    EXPECT_DOUBLE_EQ(discriminant({1, 1, -1}), 0.0);
}

TEST(Classify, UsesRelativeTolerance) {
    EXPECT_EQ(classify({2, 1, 1}).kind, RootCase::PositiveDiscriminant);
    EXPECT_EQ(classify({0, 0, -1}).kind, RootCase::NegativeDiscriminant);
    EXPECT_EQ(classify({1, 1, -1}).kind, RootCase::RepeatedRoot);
    EXPECT_EQ(classify({1, 1, -1 + 1e-14}).kind, RootCase::RepeatedRoot);
    EXPECT_EQ(classify({1, 1, -1 + 1e-9}).kind, RootCase::PositiveDiscriminant);
    EXPECT_EQ(classify({1, 1, -1 - 1e-9}).kind, RootCase::NegativeDiscriminant);
    EXPECT_NEAR(classify({0, 0, -1}).phi, std::numbers::pi / 2, 1e-15);
}

TEST(PhasePhi, Branches) {
    EXPECT_DOUBLE_EQ(phase_phi({0.5, -0.5, -1}), std::numbers::pi / 2);
    const double pos = phase_phi({1, 0.5, -3});
    EXPECT_GT(pos, 0);
    EXPECT_LT(pos, std::numbers::pi / 2);
    const double neg = phase_phi({-1, -0.5, -3});
    EXPECT_GT(neg, std::numbers::pi / 2);
    EXPECT_LT(neg, std::numbers::pi);
    EXPECT_NEAR(pos + neg, std::numbers::pi, 1e-15);
    EXPECT_THROW(phase_phi({2, 1, 1}), std::domain_error);
    EXPECT_THROW(phase_phi({1, 1, -1}), std::domain_error);
}

TEST(PathClosed, Examples) {
    EXPECT_NEAR(xi_path_closed(2, {2, 1, 1}), 7.0, 1e-12);
    EXPECT_NEAR(xi_path_closed(4, {0, 0, -1}), 1.0, 1e-12);
    EXPECT_NEAR(xi_path_closed(5, {1, 1, -1}), 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(xi_path_closed(0, {3, -2, 5}), 1.0);
}

TEST(PathClosed, RepeatedRootWithZeroSum) {
    // x + y = 0 and z = 0: D = 0 and xi(P_n) = 0 for n >= 2.
    for (unsigned n = 2; n <= 10; ++n) EXPECT_EQ(xi_path_closed(n, {1.5, -1.5, 0}), 0.0) << n;
    EXPECT_DOUBLE_EQ(xi_path_closed(1, {1.5, -1.5, 0}), 1.5);
    EXPECT_EQ(eval_float(xi_path_poly(6), {1.5, -1.5, 0}), 0.0);
}

TEST(PathClosed, BranchFunctionsRejectWrongRegion) {
    EXPECT_THROW(xi_path_real_roots(3, {0, 0, -1}), std::domain_error);
    EXPECT_THROW(xi_path_complex_roots(3, {2, 1, 1}), std::domain_error);
}

TEST(CycleClosed, Examples) {
    EXPECT_NEAR(xi_cycle_closed(1, {2, 1, 1}), 5.0, 1e-12);
    EXPECT_NEAR(xi_cycle_closed(3, {2, 1, 1}), 38.0, 1e-12);
    EXPECT_NEAR(xi_cycle_closed(2, {1, 1, -1}), 1.0, 1e-12);
}

TEST(CycleClosed, BranchesCoincideOnBoundary) {
    for (const FloatPoint pt : {FloatPoint{1, 1, -1}, FloatPoint{-0.75, 0.25, -0.0625}, FloatPoint{0.5, -0.5, 0},
                                FloatPoint{-1.5, -0.5, -1}}) {
        for (unsigned n = 1; n <= 20; ++n) {
            const double remark = xi_cycle_repeated_root(n, pt);
            EXPECT_LE(rel_err(xi_cycle_real_roots(n, pt), remark), 1e-12) << n;
            EXPECT_LE(rel_err(xi_cycle_complex_roots(n, pt), remark), 1e-12) << n;
        }
    }
}

TEST(ClosedForm, RepeatedRootContinuity) {
    for (const auto& [x, y] : {std::pair{1.0, 1.0}, std::pair{0.75, -0.25}, std::pair{-1.25, 0.5}, std::pair{2.0, -0.5}}) {
        const double boundary = -((x + y) / 2) * ((x + y) / 2);
        for (unsigned n = 1; n <= 30; ++n) {
            const double at = xi_path_closed(n, {x, y, boundary});
            for (double dz : {1e-9, -1e-9}) {
                const FloatPoint near{x, y, boundary + dz};
                ASSERT_NE(classify(near).kind, RootCase::RepeatedRoot);
                EXPECT_LE(rel_err(xi_path_closed(n, near), at), 1e-6) << n << " dz=" << dz;
                EXPECT_LE(rel_err(xi_cycle_closed(n, near), xi_cycle_closed(n, {x, y, boundary})), 1e-6) << n;
            }
        }
    }
}

TEST(ClosedForm, AgreesWithExactValuesOnCorpus) {
    const auto corpus = closed_form_corpus();
    ASSERT_GE(corpus.size(), 200u);
    for (const auto& p : corpus) {
        const auto paths = testing::path_values(30, p.q);
        const auto cycles = testing::cycle_values(30, p.q);
        const double tol = p.region == Region::Band ? 1e-6 : 1e-9;
        for (unsigned n = 0; n <= 30; ++n) {
            EXPECT_LE(rel_err(xi_path_closed(n, p.f), paths[n].convert_to<double>()), tol)
                << "P_" << n << " at " << testing::describe(p);
            if (n >= 1) {
                EXPECT_LE(rel_err(xi_cycle_closed(n, p.f), cycles[n].convert_to<double>()), tol)
                    << "C_" << n << " at " << testing::describe(p);
            }
        }
    }
}

TEST(ClosedForm, EvalFloatOfPolynomialAgrees) {
    // The float evaluation of the exact polynomial is a second, cruder route.
    const auto polys = xi_path_polys(12);
    for (const auto& p : closed_form_corpus()) {
        for (unsigned n = 0; n <= 12; ++n) {
            const double want = eval_float(polys[n], p.f);
            EXPECT_LE(rel_err(xi_path_closed(n, p.f), want), 1e-8) << n << " " << testing::describe(p);
        }
    }
}

}  // namespace
}  // namespace elimpoly
