#include "riordan/central.hpp"

#include <algorithm>
#include <string>

namespace riordan {

namespace {

// Convolution coefficient n of a * b without forming the whole product.
Rat conv_coeff(const Series& a, const Series& b, int n) {
    Rat s(0);
    for (int i = 0; i <= n; ++i) s += a.coeff(i) * b.coeff(n - i);
    return s;
}

}  // namespace

CentralPair::CentralPair(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
    int common = std::min(g_.order(), f_.order());
    g_ = g_.order() == common ? g_ : g_.truncated(common);
    f_ = f_.order() == common ? f_ : f_.truncated(common);
    if (g_.coeff(0).is_zero())
        throw InvariantError("first central component must have nonzero constant term");
    if (f_.coeff(0).is_zero())
        throw InvariantError("second central component must have nonzero constant term");
}

Rat central_entry(const CentralPair& c, int n, int k) {
    if (n < 0 || k < 0) throw OutOfOrderError("negative triangle index");
    if (k > n) return Rat(0);
    int m = n - k;
    if (m > c.order())
        throw OutOfOrderError("entry needs coefficient " + std::to_string(m) +
                              " beyond pair order " + std::to_string(c.order()));
    // Only orders up to n - k matter, so powers are taken on truncations.
    Series f = c.f().truncated(m);
    Series g = c.g().truncated(m);
    return conv_coeff(g, pow_int(f, n), m);
}

Triangle central_triangle(const CentralPair& c, int rows) {
    if (rows < 1) throw OutOfOrderError("triangle needs at least one row");
    if (rows - 1 > c.order())
        throw OutOfOrderError("pair of order " + std::to_string(c.order()) +
                              " cannot fill " + std::to_string(rows) + " rows");
    int m = rows - 1;
    Series f = c.f().truncated(m);
    Series row = c.g().truncated(m);  // g * f^n as n advances
    std::vector<std::vector<Rat>> t(rows);
    for (int n = 0; n < rows; ++n) {
        t[n].assign(n + 1, Rat(0));
        for (int k = 0; k <= n; ++k) t[n][k] = row.coeff(n - k);
        if (n + 1 < rows) row = mul(row, f);
    }
    return Triangle(std::move(t));
}

Series central_column0(const CentralPair& c, int n_max) {
    if (n_max < 0 || n_max > c.order())
        throw OutOfOrderError("column length exceeds pair order");
    Series f = c.f().truncated(n_max);
    Series row = c.g().truncated(n_max);
    std::vector<Rat> mu(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        mu[n] = row.coeff(n);
        if (n < n_max) row = mul(row, f);
    }
    return Series(n_max, std::move(mu));
}

RiordanPair to_standard(const CentralPair& c) {
    int n = c.order();
    Series v = revert(div(Series::x(n), c.f()));
    Series ratio = div(shift_up(derivative(v), 1), v);
    return RiordanPair(mul(compose(c.g(), v), ratio), v);
}

CentralPair from_standard(const RiordanPair& p) {
    Series rv = revert(p.v());
    Series f = div(Series::x(p.order()), rv);
    Series u_at = compose(p.u(), rv);
    Series vp_at = compose(derivative(p.v()), rv);
    return CentralPair(div(mul(f, u_at), vp_at), f);
}

RiordanPair standard_inverse_pair(const CentralPair& c) {
    int n = c.order();
    Series w = div(Series::x(n), c.f());
    Series ratio = div(shift_up(derivative(w), 1), w);
    return RiordanPair(mul(reciprocal(c.g()), ratio), w);
}

CentralPair central_mul(const CentralPair& a, const CentralPair& b) {
    int n = std::min(a.order(), b.order());
    Series w1 = div(Series::x(n), a.f());
    Series w2 = div(Series::x(n), b.f());
    Series w = compose(w1, w2);
    return CentralPair(mul(compose(a.g(), w2), b.g()), div(Series::x(n), w));
}

CentralPair central_inv(const CentralPair& c) {
    int n = c.order();
    Series r = revert(div(Series::x(n), c.f()));
    return CentralPair(reciprocal(compose(c.g(), r)), div(Series::x(n), r));
}

AZPair az_from_central(const CentralPair& c) {
    int n = c.order();
    Series ratio = div(shift_up(derivative(c.f()), 1), c.f());
    Series bracket =
        sub(Series::one(n), mul(reciprocal(c.g()), sub(Series::one(n), ratio)));
    if (auto val = bracket.valuation(); val && *val < 1)
        throw InconsistencyError(
            "Z-sequence does not exist: the bracket has nonzero constant term " +
            bracket.coeff(0).str());
    return AZPair(c.f(), mul(c.f(), shift_down(bracket, 1)));
}

CentralPair central_from_az(const AZPair& az) {
    const Series& a = az.a();
    Series num = sub(a, shift_up(derivative(a), 1));
    Series den = sub(a, shift_up(az.z(), 1));
    return CentralPair(div(num, den), a);
}

bool central_is_hitting_time(const CentralPair& c) {
    return eq_to_order(c.g(), Series::one(c.order()), c.order());
}

RiordanPair vertical_antecedent(const CentralPair& c) {
    int n = c.order();
    Series r = revert(div(Series::x(n), c.f()));
    Series v = div(Series::monomial(Rat(1), 2, n), r);
    return RiordanPair(reciprocal(compose(c.g(), r)), v);
}

RiordanPair half_of_lifted(const CentralPair& c) {
    return RiordanPair(c.g(), shift_up(c.f(), 1));
}

Series chebyshev_moments(const Rat& s, const Rat& t, const Rat& a, const Rat& b,
                         int order) {
    Series num = Series::poly({Rat(1), Rat(0), -b}, order);
    Series den = Series::poly({Rat(1), -s, -t}, order);
    Series w = Series::poly({Rat(1), a, b}, order);
    return central_column0(CentralPair(div(num, den), w), order);
}

}  // namespace riordan
