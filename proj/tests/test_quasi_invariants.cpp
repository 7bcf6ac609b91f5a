#include "oracles.hpp"

#include "quasinv/errors.hpp"
#include "quasinv/groups.hpp"
#include "quasinv/quasi_invariants.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quasinv;

namespace {

Multiplicity mult(const ReflectionGroup& g, const std::string& text) { return parse_multiplicity(g, text); }

std::vector<long> to_long(const std::vector<Integer>& v)
{
    std::vector<long> r;
    for (const auto& x : v)
        r.push_back(x.get_si());
    return r;
}

bool in_span(const std::vector<Polynomial>& layer, const Polynomial& p, int nvars, int d)
{
    SpanBuilder s(oracle::monomial_count(nvars, d));
    for (const auto& b : layer)
        s.add(coefficient_vector(b, nvars, d));
    return s.contains(coefficient_vector(p, nvars, d));
}

} // namespace

TEST(IsQuasiInvariant, RankOneExamples)
{
    auto g = parse_group("A1");
    auto x = g.variable(0);
    auto m2 = constant_multiplicity(g, Rational(2));
    EXPECT_TRUE(is_quasi_invariant(g, m2, x.pow(4)));
    EXPECT_FALSE(is_quasi_invariant(g, m2, x.pow(3)));
    EXPECT_TRUE(is_quasi_invariant(g, m2, x.pow(5)));
}

TEST(IsQuasiInvariant, InvariantsAlwaysPass)
{
    for (const char* spec : {"A1", "A1^2", "I2(3)", "I2(4)", "Z/3"}) {
        auto g = parse_group(spec);
        auto m = constant_multiplicity(g, Rational(2));
        for (const auto& f : fundamental_invariants(g))
            EXPECT_TRUE(is_quasi_invariant(g, m, f)) << spec;
    }
}

TEST(IsQuasiInvariant, CyclicThreeMatchesOracle)
{
    auto g = parse_group("Z/3");
    auto m = mult(g, "0:1|1");
    auto x = g.variable(0);
    for (int j = 0; j <= 12; ++j)
        EXPECT_EQ(is_quasi_invariant(g, m, x.pow(j)), oracle::cyclic_member(3, {1, 1}, j)) << j;
}

TEST(IsQuasiInvariant, HalfIntegerRoutedElsewhere)
{
    auto g = parse_group("A1");
    EXPECT_THROW(is_quasi_invariant(g, constant_multiplicity(g, Rational(1, 2)), g.one()), DomainError);
}

TEST(QuasiBasis, RankOneMultiplicityOne)
{
    auto g = parse_group("A1");
    auto b = quasi_basis(g, constant_multiplicity(g, Rational(1)), 5);
    EXPECT_EQ(b.dims(), (std::vector<long>{1, 0, 1, 1, 1, 1}));
    auto x = g.variable(0);
    for (int d : {0, 2, 3, 4, 5})
        EXPECT_TRUE(in_span(b.layers[d], x.pow(d), 1, d)) << d;
}

TEST(QuasiBasis, MultiplicityZeroIsEverything)
{
    auto g = parse_group("A1");
    auto b = quasi_basis(g, constant_multiplicity(g, Rational(0)), 3);
    EXPECT_EQ(b.dims(), (std::vector<long>{1, 1, 1, 1}));
    auto g2 = parse_group("I2(3)");
    auto b2 = quasi_basis(g2, constant_multiplicity(g2, Rational(0)), 6);
    for (int d = 0; d <= 6; ++d)
        EXPECT_EQ(b2.dims()[d], d + 1);
}

TEST(QuasiBasis, OracleRankOneProducts)
{
    for (int a = 0; a <= 2; ++a)
        for (int c = 0; c <= 2; ++c) {
            auto g = parse_group("A1 x A1");
            auto m = mult(g, "0:" + std::to_string(a) + ",1:" + std::to_string(c));
            EXPECT_EQ(quasi_basis(g, m, 10).dims(), oracle::a1n_dims({a, c}, 10)) << a << "," << c;
        }
    for (int a = 0; a <= 2; ++a) {
        auto g = parse_group("A1");
        EXPECT_EQ(quasi_basis(g, constant_multiplicity(g, Rational(a)), 10).dims(), oracle::a1n_dims({a}, 10));
    }
}

TEST(QuasiBasis, OracleCyclic)
{
    for (int l = 2; l <= 4; ++l) {
        auto g = parse_group("Z/" + std::to_string(l));
        std::vector<std::vector<int>> choices;
        if (l == 2)
            choices = {{0}, {1}, {2}};
        else if (l == 3)
            choices = {{1, 0}, {0, 2}, {1, 2}, {2, 2}};
        else
            choices = {{1, 0, 2}, {2, 1, 0}, {1, 1, 1}};
        for (const auto& c : choices) {
            std::string text = "0:";
            for (std::size_t i = 0; i < c.size(); ++i)
                text += (i ? "|" : "") + std::to_string(c[i]);
            EXPECT_EQ(quasi_basis(g, mult(g, text), 10).dims(), oracle::cyclic_dims(l, c, 10)) << l << " " << text;
        }
    }
}

TEST(QuasiBasis, OracleDihedral)
{
    for (int k = 3; k <= 5; ++k) {
        auto g = parse_group("I2(" + std::to_string(k) + ")");
        for (int m = 0; m <= 2; ++m)
            EXPECT_EQ(quasi_basis(g, constant_multiplicity(g, Rational(m)), 10).dims(),
                      oracle::dihedral_dims(k, m, m, 10))
                << k << " " << m;
    }
    auto g = parse_group("I2(4)");
    for (auto [a, c] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {2, 1}, {1, 2}})
        EXPECT_EQ(quasi_basis(g, mult(g, "0:" + std::to_string(a) + ",1:" + std::to_string(c)), 10).dims(),
                  oracle::dihedral_dims(4, a, c, 10))
            << a << "," << c;
}

TEST(QuasiBasis, ClosureAndStability)
{
    std::mt19937 rng(7);
    for (const char* spec : {"A1^2", "I2(3)", "I2(4)"}) {
        auto g = parse_group(spec);
        auto m = constant_multiplicity(g, Rational(1));
        const int D = 8;
        auto b = quasi_basis(g, m, D);
        EXPECT_TRUE(b.closure_checked) << spec;
        EXPECT_TRUE(b.closed_under_product) << spec;
        for (int d = 0; d <= D; ++d)
            for (const auto& p : b.layers[d]) {
                EXPECT_TRUE(is_quasi_invariant(g, m, p)) << spec;
                for (int w = 0; w < g.order(); ++w)
                    EXPECT_TRUE(in_span(b.layers[d], g.act(w, p), g.rank(), d)) << spec << " deg " << d;
            }
        // random products of span elements
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int trial = 0; trial < 20; ++trial) {
            int d1 = std::uniform_int_distribution<int>(0, D / 2)(rng);
            int d2 = std::uniform_int_distribution<int>(0, D - d1)(rng);
            auto pick = [&](int d) {
                Polynomial p = g.zero();
                for (const auto& e : b.layers[d])
                    p += e * Cyclotomic(coef(rng));
                return p;
            };
            EXPECT_TRUE(is_quasi_invariant(g, m, pick(d1) * pick(d2))) << spec;
        }
    }
}

TEST(QuasiBasis, CyclicProductsReported)
{
    auto g = parse_group("Z/3");
    auto b = quasi_basis(g, mult(g, "0:1|1"), 9);
    EXPECT_TRUE(b.closure_checked);
}

TEST(Hilbert, RankOne)
{
    auto g = parse_group("A1");
    for (int m = 0; m <= 4; ++m) {
        auto h = hilbert(g, constant_multiplicity(g, Rational(m)), 4 * 2 + 4 * m);
        std::vector<Integer> expect(2 * m + 2, 0);
        expect[0] = 1;
        expect[2 * m + 1] += 1;
        EXPECT_EQ(h.numerator, expect) << m;
        EXPECT_EQ(h.denominator_string(), "(1-t^2)");
    }
}

TEST(Hilbert, ProductSquares)
{
    auto g = parse_group("A1 x A1");
    auto h = hilbert(g, mult(g, "0:1,1:1"), 16);
    EXPECT_EQ(to_long(h.numerator), (std::vector<long>{1, 0, 0, 2, 0, 0, 1}));
}

TEST(Hilbert, DihedralThree)
{
    auto g = parse_group("I2(3)");
    auto h = hilbert(g, constant_multiplicity(g, Rational(1)), 20);
    EXPECT_EQ(h.numerator_at_one(), Integer(6));
    EXPECT_TRUE(h.palindromic());
    EXPECT_EQ(to_long(h.expand(20)), oracle::dihedral_dims(3, 1, 1, 20));
}

TEST(Hilbert, TooSmallBound)
{
    auto g = parse_group("I2(3)");
    EXPECT_THROW(hilbert(g, constant_multiplicity(g, Rational(2)), 6), Inconclusive);
}

TEST(Freeness, RankOneGenerators)
{
    auto g = parse_group("A1");
    for (int m = 0; m <= 3; ++m) {
        auto c = freeness_certificate(g, constant_multiplicity(g, Rational(m)), 8 + 4 * m);
        EXPECT_EQ(c.status, "free");
        EXPECT_EQ(c.generator_degrees, (std::vector<int>{0, 2 * m + 1}));
        ASSERT_EQ(c.generators.size(), 2u);
        EXPECT_TRUE(is_quasi_invariant(g, constant_multiplicity(g, Rational(m)), c.generators[1]));
    }
}

TEST(Freeness, PropertiesOfFreeCertificates)
{
    struct Case {
        const char* spec;
        const char* m;
        int D;
    };
    for (const auto& cs : std::vector<Case>{{"A1", "1", 12},
                                            {"A1 x A1", "0:1,1:2", 24},
                                            {"I2(3)", "1", 24},
                                            {"I2(4)", "0:1,1:0", 28},
                                            {"I2(5)", "1", 32}}) {
        auto g = parse_group(cs.spec);
        auto m = mult(g, cs.m);
        auto c = freeness_certificate(g, m, cs.D);
        ASSERT_EQ(c.status, "free") << cs.spec << " " << c.reason;
        EXPECT_EQ(static_cast<int>(c.generator_degrees.size()), g.order());
        EXPECT_TRUE(c.hilbert_matches);
        auto h = hilbert(g, m, cs.D);
        EXPECT_EQ(h.numerator_at_one(), Integer(g.order())) << cs.spec;
        for (const auto& a : h.numerator)
            EXPECT_GE(sgn(a), 0);
        auto gs = gorenstein_shift(g, m, cs.D);
        EXPECT_TRUE(gs.palindromic) << cs.spec;
        EXPECT_TRUE(gs.matches) << cs.spec << " " << gs.shift << " vs " << gs.expected;
        int expected = g.rank() - 2 * static_cast<int>(multiplicity_sum(g, m).num().get_si());
        EXPECT_EQ(gs.shift, expected) << cs.spec;
    }
}

TEST(Freeness, DihedralThreeRankSix)
{
    auto g = parse_group("I2(3)");
    auto c = freeness_certificate(g, constant_multiplicity(g, Rational(1)), 24);
    EXPECT_EQ(c.status, "free");
    EXPECT_EQ(c.generator_degrees.size(), 6u);
}

TEST(Gorenstein, RankOneShift)
{
    auto g = parse_group("A1");
    for (int m = 0; m <= 4; ++m)
        EXPECT_EQ(gorenstein_shift(g, constant_multiplicity(g, Rational(m)), 8 + 4 * m).shift, 1 - 2 * m);
}

TEST(Gorenstein, PolynomialRingShift)
{
    HilbertSeries h;
    h.numerator = {1};
    h.degrees = {1, 1};
    EXPECT_EQ(h.functional_equation_shift(), 2);
}

TEST(Gorenstein, DihedralThree)
{
    auto g = parse_group("I2(3)");
    EXPECT_EQ(gorenstein_shift(g, constant_multiplicity(g, Rational(1)), 24).shift, -4);
}

TEST(Gorenstein, RejectsComplexGroups)
{
    auto g = parse_group("Z/3");
    EXPECT_THROW(gorenstein_shift(g, mult(g, "0:1|1"), 12), DomainError);
}

TEST(Filtration, RankOne)
{
    auto g = parse_group("A1");
    auto r = filtration_check(g, constant_multiplicity(g, Rational(1)), constant_multiplicity(g, Rational(2)), 8);
    EXPECT_TRUE(r.contained);
    EXPECT_TRUE(r.zero_is_full);
    auto x3 = g.variable(0).pow(3);
    EXPECT_TRUE(is_quasi_invariant(g, constant_multiplicity(g, Rational(1)), x3));
    EXPECT_FALSE(is_quasi_invariant(g, constant_multiplicity(g, Rational(2)), x3));
}

TEST(Filtration, EqualMultiplicities)
{
    auto g = parse_group("I2(4)");
    auto m = mult(g, "0:1,1:2");
    auto r = filtration_check(g, m, m, 8);
    EXPECT_TRUE(r.contained);
    EXPECT_EQ(r.dims_lower, r.dims_upper);
}

TEST(Filtration, DihedralStrict)
{
    auto g = parse_group("I2(3)");
    auto r = filtration_check(g, constant_multiplicity(g, Rational(0)), constant_multiplicity(g, Rational(1)), 6);
    EXPECT_TRUE(r.contained);
    EXPECT_EQ(r.dims_upper, oracle::dihedral_dims(3, 1, 1, 6));
    long codim = 0;
    for (int d = 0; d <= 6; ++d) {
        EXPECT_EQ(r.dims_lower[d], d + 1);
        codim += r.dims_lower[d] - r.dims_upper[d];
    }
    EXPECT_GT(codim, 0);
}

TEST(Filtration, RejectsUnordered)
{
    auto g = parse_group("A1");
    EXPECT_THROW(
        filtration_check(g, constant_multiplicity(g, Rational(2)), constant_multiplicity(g, Rational(1)), 4),
        DomainError);
}

TEST(Filtration, IntersectionIsInvariants)
{
    // For m large against D every quasi-invariant of degree <= D is invariant.
    for (const char* spec : {"A1", "A1^2", "I2(3)"}) {
        auto g = parse_group(spec);
        const int D = 8;
        auto b = quasi_basis(g, constant_multiplicity(g, Rational(D)), D);
        EXPECT_EQ(b.dims(), oracle::molien_free(g.invariant_degrees(), D)) << spec;
    }
}

TEST(CWValued, HalfAndZero)
{
    auto half = cw_valued_basis(Rational(1, 2), 5);
    EXPECT_EQ(half.dims(), (std::vector<long>{1, 2, 2, 2, 2, 2}));
    auto zero = cw_valued_basis(Rational(0), 3);
    EXPECT_EQ(zero.dims(), (std::vector<long>{2, 2, 2, 2}));
    EXPECT_THROW(cw_valued_basis(Rational(1, 3), 3), DomainError);
}

TEST(CWValued, EvenPartMatchesQm)
{
    // e_0 component of Q_{m+1/2}: the parts p with x^(2m+1) | (odd part) recover Q_m via
    // p(x) = even(p) + odd(p), so dims of {p e0 + q e1} restricted to q = 0 or deg >= 2m+1.
    for (int m = 0; m <= 3; ++m) {
        auto b = cw_valued_basis(Rational(2 * m + 1, 2), 12);
        auto g = parse_group("A1");
        auto q = quasi_basis(g, constant_multiplicity(g, Rational(m)), 12);
        for (int d = 0; d <= 12; ++d) {
            long e1 = static_cast<long>(b.layers[d].size()) - 1;
            // Q_m in degree d is 1 if d even, else 1 iff x^d e1 lies in the module.
            long expect = d % 2 == 0 ? 1 : e1;
            EXPECT_EQ(q.dims()[d], expect) << m << " " << d;
        }
    }
}

TEST(CWValued, ModuleUnderActions)
{
    for (Rational k : {Rational(0), Rational(1, 2), Rational(1), Rational(5, 2)}) {
        auto b = cw_valued_basis(k, 8);
        for (const auto& layer : b.layers)
            for (const auto& f : layer) {
                EXPECT_TRUE(cw_member(k, f));
                EXPECT_TRUE(cw_member(k, cw_act_x(f)));
                EXPECT_TRUE(cw_member(k, cw_act_s(f)));
            }
    }
    std::vector<std::string> v{"x"};
    CWElement bad{Polynomial(v), Polynomial::variable(v, 0)};
    EXPECT_FALSE(cw_member(Rational(1), bad));
    EXPECT_TRUE(cw_member(Rational(1, 2), bad));
}

TEST(DefaultDegree, FourTimesSum)
{
    EXPECT_EQ(default_max_degree(parse_group("A1")), 8);
    EXPECT_EQ(default_max_degree(parse_group("I2(3)")), 20);
    EXPECT_EQ(default_max_degree(parse_group("A1 x A1")), 16);
}
