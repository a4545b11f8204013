#include "riordan/riordan.hpp"

#include <algorithm>
#include <string>

namespace riordan {

namespace {

Series to_common_order(const Series& s, int order) {
    return s.order() == order ? s : s.truncated(order);
}

void require_unit_constant(const Series& s, const char* name) {
    if (s.coeff(0).is_zero())
        throw InvariantError(std::string(name) + " must have nonzero constant term");
}

void require_valuation_one(const Series& s, const char* name) {
    if (!s.coeff(0).is_zero())
        throw InvariantError(std::string(name) + " must have zero constant term");
    if (s.coeff(1).is_zero())
        throw InvariantError(std::string(name) + " must have nonzero linear term");
}

}  // namespace

RiordanPair::RiordanPair(Series u, Series v)
    : u_(std::move(u)), v_(std::move(v)) {
    int common = std::min(u_.order(), v_.order());
    if (common < 1) throw InvariantError("pair needs order at least 1");
    u_ = to_common_order(u_, common);
    v_ = to_common_order(v_, common);
    require_unit_constant(u_, "first component");
    require_valuation_one(v_, "second component");
}

Rat entry(const RiordanPair& p, int n, int k) {
    if (n < 0 || k < 0) throw OutOfOrderError("negative triangle index");
    if (k > n) return Rat(0);
    if (n > p.order())
        throw OutOfOrderError("entry row " + std::to_string(n) + " beyond pair order " +
                              std::to_string(p.order()));
    return mul(p.u(), pow_int(p.v(), k)).coeff(n);
}

Triangle triangle(const RiordanPair& p, int rows) {
    if (rows < 1) throw OutOfOrderError("triangle needs at least one row");
    if (rows - 1 > p.order())
        throw OutOfOrderError("pair of order " + std::to_string(p.order()) +
                              " cannot fill " + std::to_string(rows) + " rows");
    std::vector<std::vector<Rat>> t(rows);
    for (int n = 0; n < rows; ++n) t[n].assign(n + 1, Rat(0));
    Series col = p.u();
    for (int k = 0; k < rows; ++k) {
        for (int n = k; n < rows; ++n) t[n][k] = col.coeff(n);
        if (k + 1 < rows) col = mul(col, p.v());
    }
    return Triangle(std::move(t));
}

RiordanPair group_mul(const RiordanPair& a, const RiordanPair& b) {
    Series bu_at = compose(b.u(), a.v());
    Series bv_at = compose(b.v(), a.v());
    return RiordanPair(mul(a.u(), bu_at), bv_at);
}

RiordanPair group_inv(const RiordanPair& p) {
    Series rv = revert(p.v());
    return RiordanPair(reciprocal(compose(p.u(), rv)), rv);
}

AZPair::AZPair(Series a, Series z) : a_(std::move(a)), z_(std::move(z)) {
    int common = std::min(a_.order(), z_.order());
    a_ = to_common_order(a_, common);
    z_ = to_common_order(z_, common);
    require_unit_constant(a_, "A-sequence");
}

Series a_sequence(const RiordanPair& p) {
    return div(Series::x(p.order()), revert(p.v()));
}

Series z_sequence(const RiordanPair& p) {
    Series rv = revert(p.v());
    Series u_at = compose(p.u(), rv);
    Series bracket = sub(Series::one(p.order()), reciprocal(u_at));
    return div(bracket, rv);
}

AZPair az_sequences(const RiordanPair& p) {
    return AZPair(a_sequence(p), z_sequence(p));
}

bool is_hitting_time(const RiordanPair& p) {
    int n = p.order();
    Series xvp = shift_up(derivative(p.v()), 1);
    Series rhs = div(xvp, p.v());
    return eq_to_order(p.u(), rhs, n - 1);
}

HalvesPairs halves_formula(const RiordanPair& p) {
    int n = p.order();
    if (n < 3) throw OutOfOrderError("halves need pair order at least 3");
    Series phi = revert(div(Series::monomial(Rat(1), 2, n), p.v()));
    Series ratio = div(shift_up(derivative(phi), 1), phi);
    Series lead = mul(compose(p.u(), phi), ratio);
    RiordanPair vertical(lead, phi);
    Series hv = compose(p.v(), phi);
    int h_order = std::min(n - 2, n / 2);
    RiordanPair horizontal(lead.truncated(h_order), hv.truncated(h_order));
    return HalvesPairs{std::move(vertical), std::move(horizontal)};
}

}  // namespace riordan
