#include "quasinv/json_io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quasinv;

TEST(JsonRational, RoundTrip)
{
    for (auto r : {Rational(0), Rational(7), Rational(-3, 4), Rational(1, 360)}) {
        Json j = to_json(r);
        ASSERT_TRUE(j.is_string());
        EXPECT_EQ(rational_from_json(Json::parse(j.dump())), r);
    }
    EXPECT_EQ(to_json(Rational(-3, 4)).get<std::string>(), "-3/4");
    EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
    EXPECT_THROW(rational_from_json(Json(1.5)), ParseError);
}

TEST(JsonCyclotomic, RoundTrip)
{
    std::vector<Cyclotomic> values{Cyclotomic(Rational(2, 3)), Cyclotomic::zeta(3, 1),
                                   Cyclotomic::zeta(8, 3) * Cyclotomic(Rational(-5)) + Cyclotomic(1)};
    for (const auto& c : values) {
        Json j = to_json(c);
        EXPECT_TRUE(j.contains("zeta_order"));
        EXPECT_TRUE(j.contains("coords"));
        EXPECT_EQ(cyclotomic_from_json(Json::parse(j.dump())), c);
    }
    EXPECT_THROW(cyclotomic_from_json(Json::object()), ParseError);
}

TEST(JsonPolynomial, RandomRoundTrip)
{
    std::mt19937 rng(2);
    std::vector<std::string> vars{"z1", "z2"};
    std::uniform_int_distribution<int> c(-5, 5), e(0, 4), z(0, 5);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p(vars);
        for (int k = 0; k < 5; ++k)
            p.add_term({e(rng), e(rng)}, Cyclotomic::zeta(6, z(rng)) * Cyclotomic(Rational(c(rng), 1 + z(rng))));
        Json j = to_json(p);
        for (const auto& t : j["terms"])
            EXPECT_TRUE(t["coeff"].is_object());
        EXPECT_EQ(polynomial_from_json(Json::parse(j.dump())), p);
    }
    EXPECT_THROW(polynomial_from_json(Json::parse("{\"vars\":[\"x\"]}")), ParseError);
}

TEST(JsonSeries, TripleFormat)
{
    auto th = jacobi_theta_series(3);
    Json j = to_json(th);
    EXPECT_EQ(j["q_order"], 3);
    EXPECT_TRUE(j["complete"].get<bool>());
    ASSERT_FALSE(j["terms"].empty());
    for (const auto& t : j["terms"]) {
        ASSERT_EQ(t.size(), 3u);
        EXPECT_TRUE(t[0].is_string());
        EXPECT_TRUE(t[1].is_number_integer());
        EXPECT_TRUE(t[2].is_string());
    }
    EXPECT_EQ(j["terms"][0][0], "-3/2");
    Json partial = to_json(th.restrict(-1, 1));
    EXPECT_FALSE(partial["complete"].get<bool>());
    EXPECT_EQ(partial["z_window"], Json::array({"-1/2", "1/2"}));
}

TEST(JsonResults, ProvenanceAndStability)
{
    auto g = parse_group("I2(3)");
    auto b = quasi_basis(g, constant_multiplicity(g, Rational(1)), 6);
    Json j = to_json(b);
    EXPECT_EQ(j["group"], "I2(3)");
    EXPECT_EQ(j["max_degree"], 6);
    EXPECT_EQ(j["dims"].size(), 7u);
    // insertion order is stable, so two dumps agree byte for byte
    EXPECT_EQ(to_json(quasi_basis(g, constant_multiplicity(g, Rational(1)), 6)).dump(), j.dump());
    EXPECT_EQ(to_json(Verdict::Inconclusive), "inconclusive");
    auto h = to_json(hilbert(parse_group("A1"), constant_multiplicity(parse_group("A1"), Rational(2)), 12));
    EXPECT_EQ(h["numerator"], "1 + t^5");
    EXPECT_EQ(h["denominator"], "(1-t^2)");
}

TEST(JsonResults, DimsHelper)
{
    EXPECT_EQ(dims_json(std::vector<long>{1, 0, 2}).dump(), "[1,0,2]");
    EXPECT_EQ(dims_json(std::vector<Integer>{Integer(3)}).dump(), "[3]");
}
