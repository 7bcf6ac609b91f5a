#include "quasinv/demazure.hpp"
#include "quasinv/fake_k.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace quasinv;

namespace {

IntSeries S(const std::string& s) { return IntSeries::parse(s); }

// t^2 coefficient n, followed by the given tail.
IntSeries generator_series(long n, const std::vector<long>& tail, int order)
{
    IntSeries p{std::vector<Integer>(order, 0)};
    p.coeffs[2] = n;
    for (std::size_t i = 0; i < tail.size() && 3 + i < static_cast<std::size_t>(order); ++i)
        p.coeffs[3 + i] = tail[i];
    return p;
}

IntSeries monomial(int k, long c, int order)
{
    IntSeries f{std::vector<Integer>(order, 0)};
    if (k < order)
        f.coeffs[k] = c;
    return f;
}

} // namespace

TEST(Legendre, Examples)
{
    EXPECT_EQ(legendre(2, 7), 1);
    EXPECT_EQ(legendre(3, 5), -1);
    EXPECT_EQ(legendre(17, 2), 1);
    EXPECT_EQ(legendre(5, 2), -1);
    EXPECT_EQ(legendre(7, 2), 1);
    EXPECT_EQ(legendre(3, 2), -1);
    EXPECT_THROW(legendre(10, 5), DomainError);
}

TEST(Legendre, MatchesSquaresAndIsMultiplicative)
{
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        std::set<long> squares;
        for (long a = 1; a < p; ++a)
            squares.insert(a * a % p);
        for (long k = 1; k < 3 * p; ++k) {
            if (k % p == 0)
                continue;
            EXPECT_EQ(legendre(k, p), squares.count(k % p) ? 1 : -1) << k << " mod " << p;
            EXPECT_EQ(legendre(-k, p), squares.count((p - k % p) % p) ? 1 : -1);
            for (long j = 1; j < p; ++j)
                EXPECT_EQ(legendre(k * j, p), legendre(k, p) * legendre(j, p));
        }
    }
}

TEST(NB, Examples)
{
    EXPECT_EQ(n_b({}).nb, Integer(1));
    auto r = n_b(parse_assignments("3:2,5:3"));
    EXPECT_EQ(r.nb, Integer(6));
    EXPECT_EQ(r.rector.at(3), -1);
    EXPECT_EQ(r.rector.at(5), -1);
    auto two = n_b(parse_assignments("2:5"));
    EXPECT_EQ(two.nb, Integer(5));
    EXPECT_EQ(two.rector.at(2), -1);
    EXPECT_EQ(n_b(parse_assignments("3:4,5:6")).nb, Integer(12));
}

TEST(NB, Rejections)
{
    EXPECT_THROW(n_b(parse_assignments("4:3")), DomainError);
    EXPECT_THROW(n_b(parse_assignments("3:6")), DomainError);
    EXPECT_THROW(n_b(parse_assignments("3:0")), DomainError);
    EXPECT_THROW(n_b(parse_assignments("2:3")), DomainError);
    EXPECT_THROW(parse_assignments("3=2"), ParseError);
}

TEST(IntSeriesOps, Arithmetic)
{
    auto a = S("1,1,0,0"), b = S("1,-1,0,0");
    EXPECT_EQ(a * b, S("1,0,-1,0"));
    // precision is the smaller of the two orders
    EXPECT_EQ(S("1,1") * S("1,-1,0"), S("1,0"));
    EXPECT_EQ(S("0,0,1,0,0").pow(2), S("0,0,0,0,1"));
    EXPECT_EQ((a + b), S("2,0,0,0"));
    EXPECT_THROW(S("1,x"), ParseError);
}

TEST(Qmb, Examples)
{
    const int D = 8;
    auto P = S("0,0,3,1,0,0,0,0");
    auto r0 = qmb(P, 0, D);
    EXPECT_EQ(r0.member(S("5,7,1,2,0,0,0,0")), Verdict::True);

    auto r1 = qmb(P.truncated(3), 1, 3);
    EXPECT_EQ(r1.member(S("0,0,3")), Verdict::True);
    EXPECT_EQ(r1.member(S("0,0,1")), Verdict::False);
    // with more precision 3t^2 alone is P minus t^3, and t^3 is not in P Z[[t]] + Z.
    EXPECT_EQ(qmb(P, 1, D).member(monomial(2, 3, D)), Verdict::False);
    EXPECT_EQ(qmb(P, 1, D).member(P), Verdict::True);
    EXPECT_EQ(qmb(P, 1, D).member(monomial(2, 1, D)), Verdict::False);

    for (int m = 0; m <= 3; ++m) {
        const int order = 2 * m + 6;
        auto Q = generator_series(3, {1, -2, 5}, order);
        auto f = (Q.pow(m) * monomial(1, 1, order)).truncated(order);
        EXPECT_EQ(qmb(Q, m, order).member(f), Verdict::True) << m;
    }
}

TEST(Qmb, Preconditions)
{
    EXPECT_THROW(qmb(S("0,1,3,0"), 1, 4), DomainError);
    EXPECT_THROW(qmb(S("0,0,0,1"), 1, 4), DomainError);
    EXPECT_THROW(qmb(S("1,0,2,1"), 1, 4), DomainError);
}

TEST(Qmb, InconclusiveWhenShort)
{
    // each division by P costs two digits, so depth two needs order >= 5
    auto P = S("0,0,1,0");
    EXPECT_EQ(qmb(P, 2, 4).member(S("1,0,1,0")), Verdict::Inconclusive);
    EXPECT_EQ(qmb(S("0,0,1,0,0,0"), 2, 6).member(S("1,0,1,0,0,0")), Verdict::True);
}

TEST(Qmb, Monotone)
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> c(-3, 3);
    const int D = 12;
    auto P = generator_series(2, {1, 0, -1}, D);
    for (int trial = 0; trial < 60; ++trial) {
        // random element of Q_1: a + b P + P^k g
        IntSeries g{std::vector<Integer>(D, 0)};
        for (int i = 0; i < D; ++i)
            g.coeffs[i] = c(rng);
        int k = trial % 4;
        auto f = (monomial(0, c(rng), D) + P * monomial(0, c(rng), D) + P.pow(k) * g).truncated(D);
        for (int m = 0; m + 1 <= 3; ++m) {
            auto hi = qmb(P, m + 1, D).member(f);
            auto lo = qmb(P, m, D).member(f);
            if (hi == Verdict::True)
                EXPECT_EQ(lo, Verdict::True) << f.to_string() << " m=" << m;
        }
    }
}

TEST(Distinguish, Examples)
{
    auto P = generator_series(3, {1}, 10);
    for (int m = 1; m <= 3; ++m) {
        auto d = distinguishing_invariant(qmb(P, m, 10), 5);
        EXPECT_EQ(d.rank, 2);
        EXPECT_EQ(d.generator_coeff, 3);
        EXPECT_EQ(d.generator, "3t^2");
        EXPECT_TRUE(d.square_zero);
        EXPECT_EQ(distinguishing_invariant(qmb(P, m, 10), 3).rank, 1);
    }
    auto bg = bg_series(10);
    for (long p : {2L, 3L, 5L, 7L}) {
        auto d = distinguishing_invariant(qmb(bg, 2, 10), p);
        EXPECT_EQ(d.rank, 2);
        EXPECT_EQ(d.generator, "t^2");
    }
    EXPECT_EQ(distinguishing_invariant(qmb(P, 0, 10), 5).rank, 3);
    EXPECT_THROW(distinguishing_invariant(qmb(P, 1, 10), 4), DomainError);
}

TEST(Distinguish, IndependentOfTails)
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> c(-20, 20);
    for (long nb : {1L, 2L, 3L, 6L, 7L})
        for (long p : {2L, 3L, 5L, 7L})
            for (int m = 1; m <= 3; ++m) {
                auto base = distinguishing_invariant(qmb(generator_series(nb, {}, 10), m, 10), p);
                for (int trial = 0; trial < 5; ++trial) {
                    auto P = generator_series(nb, {c(rng), c(rng), c(rng), c(rng)}, 10);
                    auto d = distinguishing_invariant(qmb(P, m, 10), p);
                    EXPECT_EQ(d.rank, base.rank);
                    EXPECT_EQ(d.basis, base.basis);
                    EXPECT_EQ(d.generator_coeff, base.generator_coeff);
                }
                EXPECT_EQ(base.rank, nb % p == 0 ? 1 : 2);
            }
}

TEST(BG, Series)
{
    auto b = bg_series(8);
    EXPECT_EQ(b, S("0,0,1,-1,1,-1,1,-1"));
    EXPECT_EQ(laurent_to_series(laurent_delta(), 8), b);
    EXPECT_EQ(laurent_to_series(LaurentElement::parse("z^-1"), 5), S("1,-1,1,-1,1"));
    EXPECT_THROW(laurent_to_series(LaurentElement::parse("z^(1/2)"), 5), DomainError);
}

TEST(BG, ExpBasisImagesAreMembers)
{
    const int D = 14;
    auto ring_series = bg_series(D);
    for (int m = 0; m <= 3; ++m) {
        auto ring = qmb(ring_series, m, D);
        for (const auto& e : exp_basis(m, -2, 2).elements)
            EXPECT_EQ(ring.member(laurent_to_series(e, D)), Verdict::True) << m << " " << e.to_string();
        if (m >= 1)
            EXPECT_EQ(ring.member(laurent_to_series(LaurentElement::parse("z"), D)), Verdict::False) << m;
    }
}
