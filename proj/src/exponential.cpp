#include "riordan/exponential.hpp"

#include <algorithm>
#include <string>

namespace riordan {

namespace {

Series truncate_to(const Series& s, int order) {
    return s.order() == order ? s : s.truncated(order);
}

void check_exp_pair(const Series& u, const Series& v) {
    if (u.coeff(0).is_zero())
        throw InvariantError("first component must have nonzero constant term");
    if (!v.coeff(0).is_zero())
        throw InvariantError("second component must have zero constant term");
    if (v.coeff(1).is_zero())
        throw InvariantError("second component must have nonzero linear term");
}

// n! / k! for k <= n, as an exact integer.
Rat factorial_ratio(int n, int k) {
    mpz_class acc(1);
    for (int j = k + 1; j <= n; ++j) acc *= j;
    return Rat(acc);
}

}  // namespace

ExpRiordanPair::ExpRiordanPair(Series u, Series v)
    : u_(std::move(u)), v_(std::move(v)) {
    int common = std::min(u_.order(), v_.order());
    if (common < 1) throw InvariantError("pair needs order at least 1");
    u_ = truncate_to(u_, common);
    v_ = truncate_to(v_, common);
    check_exp_pair(u_, v_);
}

ExpCentralPair::ExpCentralPair(Series g, Series f)
    : g_(std::move(g)), f_(std::move(f)) {
    int common = std::min(g_.order(), f_.order());
    g_ = truncate_to(g_, common);
    f_ = truncate_to(f_, common);
    if (g_.coeff(0).is_zero())
        throw InvariantError("first central component must have nonzero constant term");
    if (f_.coeff(0).is_zero())
        throw InvariantError("second central component must have nonzero constant term");
}

Rat exp_entry(const ExpRiordanPair& p, int n, int k) {
    if (n < 0 || k < 0) throw OutOfOrderError("negative triangle index");
    if (k > n) return Rat(0);
    if (n > p.order())
        throw OutOfOrderError("entry row " + std::to_string(n) + " beyond pair order " +
                              std::to_string(p.order()));
    return factorial_ratio(n, k) * mul(p.u(), pow_int(p.v(), k)).coeff(n);
}

Rat exp_central_entry(const ExpCentralPair& c, int n, int k) {
    if (n < 0 || k < 0) throw OutOfOrderError("negative triangle index");
    if (k > n) return Rat(0);
    int m = n - k;
    if (m > c.order())
        throw OutOfOrderError("entry needs coefficient " + std::to_string(m) +
                              " beyond pair order " + std::to_string(c.order()));
    Series f = c.f().truncated(m);
    Series g = c.g().truncated(m);
    Rat coeff(0);
    Series p = pow_int(f, n);
    for (int i = 0; i <= m; ++i) coeff += g.coeff(i) * p.coeff(m - i);
    return factorial_ratio(n, k) * coeff;
}

Triangle exp_triangle(const ExpRiordanPair& p, int rows) {
    if (rows < 1) throw OutOfOrderError("triangle needs at least one row");
    if (rows - 1 > p.order())
        throw OutOfOrderError("pair of order " + std::to_string(p.order()) +
                              " cannot fill " + std::to_string(rows) + " rows");
    std::vector<std::vector<Rat>> t(rows);
    for (int n = 0; n < rows; ++n) t[n].assign(n + 1, Rat(0));
    Series col = p.u();
    for (int k = 0; k < rows; ++k) {
        for (int n = k; n < rows; ++n) t[n][k] = factorial_ratio(n, k) * col.coeff(n);
        if (k + 1 < rows) col = mul(col, p.v());
    }
    return Triangle(std::move(t));
}

Triangle exp_triangle(const ExpCentralPair& c, int rows) {
    if (rows < 1) throw OutOfOrderError("triangle needs at least one row");
    if (rows - 1 > c.order())
        throw OutOfOrderError("pair of order " + std::to_string(c.order()) +
                              " cannot fill " + std::to_string(rows) + " rows");
    int m = rows - 1;
    Series f = c.f().truncated(m);
    Series row = c.g().truncated(m);
    std::vector<std::vector<Rat>> t(rows);
    for (int n = 0; n < rows; ++n) {
        t[n].assign(n + 1, Rat(0));
        for (int k = 0; k <= n; ++k) t[n][k] = factorial_ratio(n, k) * row.coeff(n - k);
        if (n + 1 < rows) row = mul(row, f);
    }
    return Triangle(std::move(t));
}

ExpRiordanPair exp_group_inv(const ExpRiordanPair& p) {
    Series rv = revert(p.v());
    return ExpRiordanPair(reciprocal(compose(p.u(), rv)), rv);
}

}  // namespace riordan
