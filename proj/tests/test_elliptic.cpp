#include "quasinv/elliptic.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace quasinv;

namespace {

ZQSeries wq(int w, int q, long c, int N) { return ZQSeries::monomial(w, q, Rational(c), N); }

ZQSeries theta2_minus(const ZQSeries& th) { return (th * th).negate_z(); }

} // namespace

TEST(Theta, QZeroParts)
{
    for (auto form : {ThetaForm::Sum, ThetaForm::Product}) {
        auto t = theta(form, -4, 4, 6).series;
        EXPECT_EQ(t.coeff(0, 0), Rational(1));
        EXPECT_EQ(t.coeff(2, 0), Rational(-1));
        for (int w = -8; w <= 8; w += 2)
            if (w != 0 && w != 2)
                EXPECT_EQ(t.coeff(w, 0), Rational(0)) << w;
    }
    auto j = jacobi_theta(-4, 4, 6).series;
    EXPECT_EQ(j.coeff(1, 0), Rational(1));
    EXPECT_EQ(j.coeff(-1, 0), Rational(-1));
}

TEST(Theta, TripleProduct)
{
    for (int N : {1, 4, 8, 13, 16}) {
        auto s = theta(ThetaForm::Sum, -8, 8, N), p = theta(ThetaForm::Product, -8, 8, N);
        EXPECT_TRUE(s.series.agrees_with(p.series)) << N;
        EXPECT_TRUE(theta_series(ThetaForm::Sum, N).agrees_with(theta_series(ThetaForm::Product, N))) << N;
    }
}

TEST(Theta, WindowRejected)
{
    EXPECT_THROW(theta(ThetaForm::Sum, -1, 4, 6), DomainError);
    EXPECT_THROW(theta(ThetaForm::Product, -4, 1, 6), DomainError);
    EXPECT_THROW(parse_theta_form("neither"), ParseError);
    EXPECT_EQ(parse_theta_form("sum"), ThetaForm::Sum);
}

TEST(Theta, Identities)
{
    const int N = 12;
    auto T = theta_series(ThetaForm::Product, N);
    auto th = jacobi_theta_series(N);
    EXPECT_TRUE((th + wq(-1, 0, 1, N) * T).is_zero());
    EXPECT_TRUE((T.reflect() + wq(-2, 0, 1, N) * T).is_zero());
    EXPECT_TRUE((th.reflect() + th).is_zero());
}

TEST(FunctionalEquation, Examples)
{
    const int N = 12;
    EXPECT_EQ(check_functional_equation(ZQSeries::constant(Rational(5), N), 0).verdict, Verdict::True);
    auto th = jacobi_theta_series(N);
    EXPECT_EQ(check_functional_equation(th * th, 1).verdict, Verdict::True);
    auto T = theta_series(ThetaForm::Product, N);
    EXPECT_EQ(check_functional_equation(T, 1).verdict, Verdict::False);
    EXPECT_EQ(check_recurrence(T, -1, 0, 2).verdict, Verdict::True);
    EXPECT_EQ(check_recurrence(th, -1, 1, 2).verdict, Verdict::True);
    auto cert = check_functional_equation(th * th, 1);
    EXPECT_EQ(cert.q_order, N);
    EXPECT_FALSE(cert.relation.empty());
}

TEST(FunctionalEquation, PartialWindow)
{
    auto th2 = jacobi_theta(-6, 6, 10).series.pow(2);
    auto c = check_functional_equation(th2, 1);
    EXPECT_NE(c.verdict, Verdict::False);
    auto tiny = th2.restrict(0, 0);
    ASSERT_FALSE(tiny.complete());
    EXPECT_EQ(check_functional_equation(tiny, 1).verdict, Verdict::Inconclusive);
}

TEST(Sections, Dimensions)
{
    for (int n = 1; n <= 6; ++n) {
        auto sp = section_basis(n, 12);
        EXPECT_EQ(sp.dimension(), 2 * n);
        for (const auto& b : sp.basis) {
            EXPECT_EQ(check_functional_equation(b.series, n).verdict, Verdict::True) << n;
            EXPECT_EQ(b.degree, n);
        }
    }
    EXPECT_THROW(section_basis(0, 12), DomainError);
}

TEST(Sections, GeneratorsInSpan)
{
    const int N = 12;
    auto th = jacobi_theta_series(N);
    auto sp1 = section_basis(1, N);
    auto a = section_coordinates(sp1, th * th);
    auto b = section_coordinates(sp1, theta2_minus(th));
    ASSERT_TRUE(a && b);
    EXPECT_EQ(qseries_rank({*a, *b}, N), 2);
    auto sp2 = section_basis(2, N);
    auto c = section_coordinates(sp2, th.square_z());
    ASSERT_TRUE(c);
    EXPECT_TRUE((th.square_z().reflect() + th.square_z()).is_zero());
    // Theta itself is not a section of L^1
    EXPECT_FALSE(section_coordinates(sp1, theta_series(ThetaForm::Product, N)));
}

TEST(Sections, InvariantMonomialsIndependent)
{
    const int N = 12;
    auto th2 = jacobi_theta_series(N).pow(2);
    auto th2m = theta2_minus(jacobi_theta_series(N));
    for (int n = 1; n <= 5; ++n) {
        auto sp = section_basis(n, N);
        std::vector<std::vector<QSeries>> rows;
        for (int i = 0; i <= n; ++i) {
            auto c = section_coordinates(sp, th2.pow(i) * th2m.pow(n - i));
            ASSERT_TRUE(c) << n << " " << i;
            rows.push_back(*c);
        }
        EXPECT_EQ(qseries_rank(rows, N), n + 1) << n;
    }
}

TEST(Divisibility, Examples)
{
    const int N = 12;
    auto th = jacobi_theta_series(N);
    for (int m = 0; m <= 2; ++m) {
        auto d = theta_divisibility(th.pow(2 * m + 2), 2 * m + 1);
        EXPECT_EQ(d.verdict, Verdict::True) << m;
        EXPECT_EQ(d.symmetry, "invariant");
    }
    auto minus = theta_divisibility(theta2_minus(th), 1);
    EXPECT_EQ(minus.verdict, Verdict::False);
    EXPECT_EQ(minus.order, 0);
    auto sq = theta_divisibility(th.square_z(), 1);
    EXPECT_EQ(sq.verdict, Verdict::True);
    EXPECT_EQ(sq.order, 1);
    EXPECT_EQ(sq.symmetry, "anti-invariant");
    EXPECT_EQ(theta_divisibility(th.square_z(), 2).verdict, Verdict::False);
}

TEST(GradedDimension, FormulaAndVerification)
{
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 5; ++n) {
            auto g = ell_graded_dimension(m, n, 12);
            int expect = n == 0 ? 1 : (n + 1) + std::max(0, n - m - 1);
            EXPECT_EQ(g.formula, expect) << m << " " << n;
            EXPECT_TRUE(g.verified) << m << " " << n;
            EXPECT_EQ(g.invariant_dim + g.anti_dim, g.formula);
            EXPECT_EQ(g.invariant_lower, g.invariant_upper);
            EXPECT_EQ(g.anti_lower, g.anti_upper);
        }
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(ell_graded_dimension(0, n, 12).formula, 2 * n);
    EXPECT_EQ(ell_graded_dimension(1, 1, 12).formula, 2);
    EXPECT_EQ(ell_graded_dimension(2, 3, 12).formula, 4);
    EXPECT_THROW(ell_graded_dimension(0, kMaxEllDegree + 1, 12), DomainError);
}

TEST(SheafDims, Values)
{
    for (int m = 0; m <= 6; ++m) {
        auto d = ell_sheaf_dims(m);
        EXPECT_EQ(d.h0, 1);
        EXPECT_EQ(d.h1, 2 * m + 2);
        EXPECT_EQ(d.h1_invariant, m + 1);
        EXPECT_EQ(d.h1_anti, m + 1);
        EXPECT_TRUE(d.euler_consistent);
        EXPECT_EQ(d.h0 - d.h1, -(2 * m + 1));
    }
    EXPECT_THROW(ell_sheaf_dims(-1), DomainError);
}

TEST(GGenerator, Properties)
{
    for (int m = 0; m <= 3; ++m) {
        auto g = ell_g_generator(m, -12, 12, 12);
        EXPECT_TRUE(g.simplification_holds) << m;
        EXPECT_TRUE(g.anti_invariant) << m;
        EXPECT_EQ(g.theta_order, 2 * m + 1) << m;
        EXPECT_EQ(g.divisible, Verdict::True) << m;
        EXPECT_EQ(g.not_divisible, Verdict::True) << m;
    }
    EXPECT_THROW(ell_g_generator(2, -4, 4, 12), DomainError);
}

TEST(Defaults, QOrderOverride)
{
    unsetenv("QUASINV_DEFAULT_QORDER");
    EXPECT_EQ(default_q_order(), kDefaultQOrder);
    setenv("QUASINV_DEFAULT_QORDER", "7", 1);
    EXPECT_EQ(default_q_order(), 7);
    setenv("QUASINV_DEFAULT_QORDER", "junk", 1);
    EXPECT_EQ(default_q_order(), kDefaultQOrder);
    unsetenv("QUASINV_DEFAULT_QORDER");
}
