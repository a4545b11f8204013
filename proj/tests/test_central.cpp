#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "riordan/central.hpp"
#include "test_util.hpp"

using namespace riordan;
using namespace testutil;

namespace {

Series geo(const Rat& r, int order) {
    return div(Series::one(order), Series::poly({Rat(1), -r}, order));
}

CentralPair random_central(std::mt19937_64& g, int order, bool monic_g = false) {
    Series gg = random_unit(g, order);
    if (monic_g) {
        std::vector<Rat> c = gg.coeffs();
        c[0] = Rat(1);
        gg = Series(order, std::move(c));
    }
    return CentralPair(gg, random_unit(g, order));
}

mpz_class fact(int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Rat binom(int n, int k) { return Rat(fact(n), fact(k) * fact(n - k)); }

}  // namespace

TEST_CASE("central membership conditions") {
    CHECK_THROWS_AS(CentralPair(Series::x(4), Series::one(4)), InvariantError);
    CHECK_THROWS_AS(CentralPair(Series::one(4), Series::x(4)), InvariantError);
    CentralPair c(Series::one(6), Series::constant(Rat(2), 4));
    CHECK(c.order() == 4);
}

TEST_CASE("Pascal from its central description") {
    CentralPair c(Series::one(6), Series::poly({Rat(1), Rat(1)}, 6));
    CHECK(central_triangle(c, 7) ==
          triangle_of({{"1"},
                       {"1", "1"},
                       {"1", "2", "1"},
                       {"1", "3", "3", "1"},
                       {"1", "4", "6", "4", "1"},
                       {"1", "5", "10", "10", "5", "1"},
                       {"1", "6", "15", "20", "15", "6", "1"}}));
    for (int n = 0; n < 7; ++n)
        for (int k = 0; k <= n; ++k) CHECK(central_entry(c, n, k) == binom(n, k));
    CHECK(central_entry(c, 2, 5) == Rat(0));
    CHECK_THROWS_AS(central_entry(c, 9, 0), OutOfOrderError);
    CHECK_THROWS_AS(central_entry(c, -1, 0), OutOfOrderError);
}

TEST_CASE("identity description") {
    CentralPair id(Series::one(5), Series::one(5));
    CHECK(central_triangle(id, 6) == Triangle::identity(6));
}

TEST_CASE("column zero is the moment sequence") {
    CentralPair c(Series::one(8), Series::poly({Rat(1), Rat(1)}, 8));
    Series col = central_column0(c, 8);
    Triangle t = central_triangle(c, 9);
    for (int n = 0; n <= 8; ++n) CHECK(col.coeff(n) == t.at(n, 0));
}

TEST_CASE("conversion of a Fibonacci-type pair to central form") {
    int n = 13;
    RiordanPair p(div(Series::one(n), Series::poly({Rat(1), Rat(-1), Rat(-1)}, n)),
                  div(Series::x(n), Series::poly({Rat(1), Rat(-2)}, n)));
    CentralPair c = from_standard(p);
    CHECK(c.f() == Series::poly({Rat(1), Rat(2)}, 12));
    CHECK(c.g() == div(Series::poly({Rat(1), Rat(2)}, 12),
                       Series::poly({Rat(1), Rat(3), Rat(1)}, 12)));
}

TEST_CASE("conversions invert each other") {
    auto g = rng(301);
    for (int trial = 0; trial < 5; ++trial) {
        CentralPair c = random_central(g, 10);
        CentralPair back = from_standard(to_standard(c));
        CHECK(eq_to_order(back.g(), c.g(), 8));
        CHECK(eq_to_order(back.f(), c.f(), 8));

        RiordanPair p(random_unit(g, 10), random_val1(g, 10));
        RiordanPair forth = to_standard(from_standard(p));
        CHECK(eq_to_order(forth.u(), p.u(), 8));
        CHECK(eq_to_order(forth.v(), p.v(), 8));
    }
}

TEST_CASE("both descriptions build the same triangle") {
    auto g = rng(302);
    for (int trial = 0; trial < 5; ++trial) {
        CentralPair c = random_central(g, 10);
        CHECK(central_triangle(c, 10) == triangle(to_standard(c), 10));
    }
}

TEST_CASE("product in central form") {
    int n = 13;
    CentralPair a(Series::one(n), geo(Rat(1), n));
    CentralPair b(Series::one(n), Series::poly({Rat(1), Rat(2)}, n));
    CentralPair prod = central_mul(a, b);
    CHECK(eq_to_order(prod.g(), Series::one(12), 12));
    Series expect = div(mul(Series::poly({Rat(1), Rat(2)}, n),
                            Series::poly({Rat(1), Rat(2)}, n)).truncated(n),
                        Series::poly({Rat(1), Rat(1)}, n));
    CHECK(eq_to_order(prod.f(), expect, 12));
}

TEST_CASE("central product agrees with the group product") {
    auto g = rng(303);
    for (int trial = 0; trial < 5; ++trial) {
        CentralPair a = random_central(g, 12);
        CentralPair b = random_central(g, 12);
        RiordanPair lhs = to_standard(central_mul(a, b));
        RiordanPair rhs = group_mul(to_standard(a), to_standard(b));
        CHECK(eq_to_order(lhs.u(), rhs.u(), 10));
        CHECK(eq_to_order(lhs.v(), rhs.v(), 10));
    }
}

TEST_CASE("inverse in central form") {
    int n = 14;
    CentralPair c(Series::poly({Rat(1), Rat(1), Rat(1)}, n), geo(Rat(1), n));
    CentralPair inv = central_inv(c);

    Series root = pow_rat(Series::poly({Rat(1), Rat(-4)}, n), 1, 2);
    Series denom = sub(Series::poly({Rat(2), Rat(-1)}, n), root);
    CHECK(eq_to_order(inv.g(), reciprocal(denom), 13));
    CHECK(eq_to_order(inv.f(), reciprocal(catalan_series(n)), 13));

    auto g = rng(304);
    for (int trial = 0; trial < 5; ++trial) {
        CentralPair a = random_central(g, 10);
        CentralPair prod = central_mul(a, central_inv(a));
        CHECK(eq_to_order(prod.g(), Series::one(8), 8));
        CHECK(eq_to_order(prod.f(), Series::one(8), 8));
    }
}

TEST_CASE("inverse pair read directly from central form") {
    auto g = rng(305);
    for (int trial = 0; trial < 4; ++trial) {
        CentralPair c = random_central(g, 10);
        CHECK(triangle(standard_inverse_pair(c), 10) ==
              triangle_invert(central_triangle(c, 10)));
    }
}

TEST_CASE("A/Z sequences straight from the central description") {
    auto g = rng(306);
    for (int trial = 0; trial < 5; ++trial) {
        CentralPair c = random_central(g, 11, true);
        AZPair mine = az_from_central(c);
        AZPair classical = az_sequences(to_standard(c));
        CHECK(eq_to_order(mine.a(), classical.a(), 9));
        CHECK(eq_to_order(mine.z(), classical.z(), 9));
    }
    CHECK_THROWS_AS(az_from_central(CentralPair(Series::constant(Rat(2), 6),
                                                Series::poly({Rat(1), Rat(1)}, 6))),
                    InconsistencyError);
}

TEST_CASE("central description recovered from A and Z") {
    auto g = rng(307);
    for (int trial = 0; trial < 5; ++trial) {
        CentralPair c = random_central(g, 11, true);
        CentralPair back = central_from_az(az_from_central(c));
        CHECK(eq_to_order(back.g(), c.g(), 10));
        CHECK(eq_to_order(back.f(), c.f(), 10));
    }
}

TEST_CASE("hitting-time criterion in both descriptions") {
    auto g = rng(308);
    CHECK(central_is_hitting_time(CentralPair(Series::one(8), random_unit(g, 8))));
    CHECK(!central_is_hitting_time(
        CentralPair(Series::poly({Rat(1), Rat(1)}, 8), random_unit(g, 8))));
    for (int trial = 0; trial < 4; ++trial) {
        CentralPair c = random_central(g, 10);
        CHECK(central_is_hitting_time(c) == is_hitting_time(to_standard(c)));
        CentralPair h(Series::one(10), random_unit(g, 10));
        CHECK(is_hitting_time(to_standard(h)));
    }
}

TEST_CASE("vertical antecedent of the Pascal description") {
    CentralPair c(Series::one(9), Series::poly({Rat(1), Rat(1)}, 9));
    RiordanPair a = vertical_antecedent(c);
    CHECK(a.u() == Series::one(8));
    CHECK(a.v() == Series::poly({Rat(0), Rat(1), Rat(-1)}, 8));
    CHECK(triangle(RiordanPair(Series::one(7), Series::poly({Rat(0), Rat(1), Rat(-1)}, 7)), 8) ==
          triangle_of({{"1"},
                       {"0", "1"},
                       {"0", "-1", "1"},
                       {"0", "0", "-2", "1"},
                       {"0", "0", "1", "-3", "1"},
                       {"0", "0", "0", "3", "-4", "1"},
                       {"0", "0", "0", "-1", "6", "-5", "1"},
                       {"0", "0", "0", "0", "-4", "10", "-6", "1"}}));
}

TEST_CASE("vertical half of the antecedent inverts the triangle") {
    auto g = rng(309);
    for (int trial = 0; trial < 4; ++trial) {
        CentralPair c = random_central(g, 11);
        Triangle half = vertical_half(triangle(vertical_antecedent(c), 11), 6);
        CHECK(half == triangle_invert(central_triangle(c, 6)));
    }
}

TEST_CASE("lifted pair whose vertical half is the central triangle") {
    auto g = rng(310);
    for (int trial = 0; trial < 4; ++trial) {
        CentralPair c = random_central(g, 10);
        Triangle half = vertical_half(triangle(half_of_lifted(c), 11), 6);
        CHECK(half == central_triangle(c, 6));
    }
}

TEST_CASE("square-root pair, its inverse, and its antecedent") {
    int n = 14;
    Series root = pow_rat(Series::poly({Rat(1), Rat(-4)}, n), 1, 2);
    CentralPair c(root, reciprocal(catalan_series(n)));

    Triangle t = central_triangle(c, 7);
    CHECK(t == triangle_of({{"1"},
                            {"-3", "1"},
                            {"1", "-4", "1"},
                            {"1", "4", "-5", "1"},
                            {"1", "0", "8", "-6", "1"},
                            {"1", "0", "-4", "13", "-7", "1"},
                            {"1", "0", "0", "-12", "19", "-8", "1"}}));
    Triangle inv = triangle_invert(t);
    CHECK(inv == triangle_of({{"1"},
                              {"3", "1"},
                              {"11", "4", "1"},
                              {"42", "16", "5", "1"},
                              {"163", "64", "22", "6", "1"},
                              {"638", "256", "93", "29", "7", "1"},
                              {"2510", "1024", "386", "130", "37", "8", "1"}}));

    RiordanPair a = vertical_antecedent(c);
    CHECK(a.u() == geo(Rat(2), 13));
    CHECK(a.v() == mul(Series::x(13), geo(Rat(1), 13)));
    CHECK(triangle(a, 7) == triangle_of({{"1"},
                                         {"2", "1"},
                                         {"4", "3", "1"},
                                         {"8", "7", "4", "1"},
                                         {"16", "15", "11", "5", "1"},
                                         {"32", "31", "26", "16", "6", "1"},
                                         {"64", "63", "57", "42", "22", "7", "1"}}));
    CHECK(vertical_half(triangle(a, 13), 7) == inv);
}

TEST_CASE("moment matrix of the Motzkin coefficient array") {
    int n = 12;
    Series den = Series::poly({Rat(1), Rat(1), Rat(1)}, n);
    RiordanPair coeffs(reciprocal(den), div(Series::x(n), den));
    CentralPair moments = from_standard(group_inv(coeffs));
    CHECK(moments.g() == Series::poly({Rat(1), Rat(0), Rat(-1)}, 11));
    CHECK(moments.f() == Series::poly({Rat(1), Rat(1), Rat(1)}, 11));
}

TEST_CASE("moment sequences of four classical weight families") {
    Series motzkin = chebyshev_moments(Rat(0), Rat(0), Rat(1), Rat(1), 12);
    Series den = Series::poly({Rat(1), Rat(1), Rat(1)}, 13);
    RiordanPair coeffs(reciprocal(den), div(Series::x(13), den));
    Triangle inv = triangle_invert(triangle(coeffs, 13));
    for (int k = 0; k <= 12; ++k) CHECK(motzkin.coeff(k) == inv.at(k, 0));

    Series catalan_shift = chebyshev_moments(Rat(0), Rat(0), Rat(2), Rat(1), 12);
    for (int k = 0; k <= 12; ++k)
        CHECK(catalan_shift.coeff(k) == binom(2 * k + 2, k + 1) / Rat(k + 2));

    Series middle = chebyshev_moments(Rat(1), Rat(0), Rat(0), Rat(1), 12);
    for (int k = 0; k <= 12; ++k) CHECK(middle.coeff(k) == binom(k, k / 2));

    Series central_binomial = chebyshev_moments(Rat(0), Rat(1), Rat(2), Rat(1), 12);
    for (int k = 0; k <= 12; ++k) CHECK(central_binomial.coeff(k) == binom(2 * k, k));
}
