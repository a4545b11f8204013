#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/exprlang.hpp"
#include "test_util.hpp"

using namespace riordan;
using namespace testutil;

namespace {

Rat const_of(const std::string& src) { return eval_expr(src, 0).coeff(0); }

ExprPtr leaf(Expr::Kind k) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    return e;
}

// Random tree in printable form.  Number payloads stay nonnegative (the
// grammar reaches negative values only through '-'), and a division never
// gets a right operand whose printed form starts with an integer token,
// which would fuse with the '/' into a rational literal on reparse.
ExprPtr random_tree(std::mt19937_64& g, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
    switch (pick(g)) {
        case 0: {
            auto e = leaf(Expr::Kind::Number);
            std::uniform_int_distribution<long> num(0, 9), den(1, 4);
            e->number = Rat(num(g), den(g));
            return e;
        }
        case 1:
            return leaf(Expr::Kind::Var);
        case 2: {
            auto e = leaf(Expr::Kind::Neg);
            e->lhs = random_tree(g, depth - 1);
            return e;
        }
        case 3:
        case 4:
        case 5: {
            auto e = leaf(pick(g) % 2 ? Expr::Kind::Add : Expr::Kind::Mul);
            e->lhs = random_tree(g, depth - 1);
            e->rhs = random_tree(g, depth - 1);
            return e;
        }
        case 6: {
            auto e = leaf(Expr::Kind::Sub);
            e->lhs = random_tree(g, depth - 1);
            e->rhs = random_tree(g, depth - 1);
            return e;
        }
        case 7: {
            auto e = leaf(Expr::Kind::Div);
            e->lhs = random_tree(g, depth - 1);
            e->rhs = random_tree(g, depth - 1);
            bool fuses = e->rhs->kind == Expr::Kind::Number ||
                         (e->rhs->kind == Expr::Kind::Pow &&
                          e->rhs->lhs->kind == Expr::Kind::Number);
            if (fuses) e->rhs = leaf(Expr::Kind::Var);
            return e;
        }
        default: {
            auto e = leaf(Expr::Kind::Pow);
            e->lhs = random_tree(g, depth - 1);
            std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
            e->exponent = Rat(num(g), den(g));
            return e;
        }
    }
}

}  // namespace

TEST_CASE("constant arithmetic and precedence") {
    CHECK(const_of("1+2*3") == Rat(7));
    CHECK(const_of("(1+2)*3") == Rat(9));
    CHECK(const_of("2*3^2") == Rat(18));
    CHECK(const_of("-2^2") == Rat(4));
    CHECK(const_of("-(2^2)") == Rat(-4));
    CHECK(const_of("2^-2") == Rat(1, 4));
    CHECK(const_of("2^(-2)") == Rat(1, 4));
    CHECK(const_of("4^(1/2)") == Rat(2));
    CHECK(const_of("4^(-1/2)") == Rat(1, 2));
    CHECK(const_of("1-2-3") == Rat(-4));
    CHECK(const_of("8/2/2") == Rat(2));
}

TEST_CASE("rational literals bind tighter than division") {
    CHECK(const_of("1/2") == Rat(1, 2));
    CHECK(const_of("1 / 2") == Rat(1, 2));
    CHECK(eval_expr("3/4*x", 2).coeff(1) == Rat(3, 4));
    CHECK(eval_expr("1/(1-x)", 3).coeffs() == rats({"1", "1", "1", "1"}));
    Series half_geo = eval_expr("1/2/(1-x)", 3);
    CHECK(half_geo.coeff(2) == Rat(1, 2));
}

TEST_CASE("series-valued builtins") {
    CHECK(eval_expr("C(x)", 5).coeffs() == rats({"1", "1", "2", "5", "14", "42"}));
    CHECK(eval_expr("rev(x/(1-x))", 4).coeffs() == rats({"0", "1", "-1", "1", "-1"}));
    CHECK(eval_expr("exp(x)", 3).coeffs() == rats({"1", "1", "1/2", "1/6"}));
    CHECK(eval_expr("log(1/(1-x))", 3).coeffs() == rats({"0", "1", "1/2", "1/3"}));
    CHECK(eval_expr("sqrt(1+x)", 3).coeffs() == rats({"1", "1/2", "-1/8", "1/16"}));
    Series ck = eval_expr("C(2*x)", 4);
    Series c = catalan_series(4);
    for (int n = 0; n <= 4; ++n) CHECK(ck.coeff(n) == c.coeff(n) * Rat(2).pow(n));
}

TEST_CASE("an identity under the Catalan square root") {
    CHECK(eval_expr("sqrt(1-4*x)*C(x)", 3).coeffs() == rats({"1", "-1", "-2", "-5"}));
    // dividing by the valuation-1 denominator costs one order
    CHECK(eval_expr("(1-sqrt(1-4*x))/(2*x)", 5) == catalan_series(4));
}

TEST_CASE("syntax errors carry the offending column") {
    auto col_of = [](const std::string& src) {
        try {
            parse_expr(src);
        } catch (const ParseError& e) {
            return e.column;
        }
        return -1;
    };
    CHECK(col_of("2x") == 2);
    CHECK(col_of("2 x") == 3);
    CHECK(col_of("1+") == 3);
    CHECK(col_of("$") == 1);
    CHECK(col_of("sqrt(x") == 7);
    CHECK(col_of("(1+x") == 5);
    CHECK(col_of("1/0") == 3);
    CHECK(col_of("x^y") == 3);
    CHECK(col_of("exp x") == 5);
    CHECK(col_of("") == 1);

    try {
        parse_expr("foo(x)");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.column == 1);
        CHECK(std::string(e.what()).find("sqrt") != std::string::npos);
    }
}

TEST_CASE("evaluation errors carry the operator column") {
    auto col_of = [](const std::string& src) {
        try {
            eval_expr(src, 6);
        } catch (const EvalError& e) {
            return e.column;
        }
        return -1;
    };
    CHECK(col_of("1/x") == 2);
    CHECK(col_of("x^(1/2)") == 2);
    CHECK(col_of("x^-1") == 2);
    CHECK(col_of("C(1+x)") == 1);
    CHECK(col_of("log(x)") == 1);
    CHECK(col_of("rev(1+x)") == 1);
    CHECK(col_of("sqrt(2)") == 1);
    CHECK(col_of("1/(2-2)") == 2);
}

TEST_CASE("printing reparses to the same tree") {
    for (const char* src : {"-x^2", "-(x^2)", "(1+x)^(1/2)", "1-2-3", "1-(2-3)",
                            "2*(3+x)", "x^2*x^3", "-(1+x)", "sqrt(1-4*x)*C(x)",
                            "1/2*x", "(1/(1-x))^(-2)", "x/-x", "rev(x-x^2)",
                            "C(x)^2", "x^0", "3/4"}) {
        ExprPtr a = parse_expr(src);
        ExprPtr b = parse_expr(to_string(*a));
        CHECK_MESSAGE(expr_equal(*a, *b), src, " -> ", to_string(*a));
    }
}

TEST_CASE("random trees survive a print/parse round trip") {
    auto g = rng(401);
    for (int trial = 0; trial < 60; ++trial) {
        ExprPtr t = random_tree(g, 5);
        std::string s = to_string(*t);
        ExprPtr back = parse_expr(s);
        CHECK_MESSAGE(expr_equal(*t, *back), "printed form: ", s);
    }
}

TEST_CASE("printed trees evaluate identically") {
    auto g = rng(402);
    int agreed = 0;
    for (int trial = 0; trial < 40; ++trial) {
        ExprPtr t = random_tree(g, 4);
        std::string s = to_string(*t);
        Series a = Series::zero(0), b = Series::zero(0);
        try {
            a = eval(*t, 8);
        } catch (const MathError&) {
            continue;  // domain failure; both forms would fail alike
        }
        b = eval_expr(s, 8);
        CHECK(a == b);
        ++agreed;
    }
    CHECK(agreed > 10);
}
