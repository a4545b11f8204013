#pragma once

#include "riordan/riordan.hpp"

namespace riordan {

/*
 * Central description of a Riordan array: a pair of series (g, f), both with
 * nonzero constant term, whose triangle entry (n, k) is the coefficient of
 * x^(n-k) in g * f^n.  The row index appears in the exponent, so rows are
 * cheap and columns are derived.  Conversions to and from the (u, v) form
 * and the group operations expressed directly on (g, f) live here; each
 * conversion costs one order of precision because it divides by x once.
 */
class CentralPair {
  public:
    CentralPair(Series g, Series f);

    const Series& g() const { return g_; }
    const Series& f() const { return f_; }
    int order() const { return g_.order(); }

  private:
    Series g_, f_;
};

// Entry (n, k) = [x^(n-k)] g f^n; 0 above the diagonal, error for negative
// indices or n - k beyond the pair's order.
Rat central_entry(const CentralPair& c, int n, int k);

// First `rows` rows, built row by row (row n reads g * f^n once).
Triangle central_triangle(const CentralPair& c, int rows);

// Leftmost column as a sequence: coefficient n is entry (n, 0) = [x^n] g f^n.
// This is the moment sequence of the array.  Requires n_max <= order.
Series central_column0(const CentralPair& c, int n_max);

// (u, v) pair generating the same triangle: v = rev(x / f) and
// u = g(v) x v' / v.  Order drops by 1.
RiordanPair to_standard(const CentralPair& c);

// Central description of the triangle of (u, v): f = x / rev(v),
// g = f * u(rev v) / v'(rev v).  Order drops by 1.
CentralPair from_standard(const RiordanPair& p);

// (u, v) pair of the inverse array, read off the central description:
// ((1/g) x w' / w, w) with w = x / f.  Order drops by 1.
RiordanPair standard_inverse_pair(const CentralPair& c);

// Product of the arrays described by (g1, f1) and (g2, f2), again in central
// form: the substituted series is x / f2.  Order drops by 1.
CentralPair central_mul(const CentralPair& a, const CentralPair& b);

// Central description of the inverse array: with R = rev(x / f), the result
// is (1 / g(R), x / R).  Order drops by 1.
CentralPair central_inv(const CentralPair& c);

// A- and Z-sequences without leaving central form: A = f and
// Z = (f / x) (1 - (1/g)(1 - x f' / f)).  Errors out when the bracket has
// nonzero constant term (g(0) != 1 and not hitting-time-compatible).
AZPair az_from_central(const CentralPair& c);

// Central description from A and Z: f = A, g = (A - x A') / (A - x Z).
CentralPair central_from_az(const AZPair& az);

// The array is a hitting-time matrix exactly when g = 1 through the
// comparable order.
bool central_is_hitting_time(const CentralPair& c);

// The (u, v) array whose vertical half is the INVERSE of the triangle of
// (g, f): (1 / g(R), x^2 / R) with R = rev(x / f).  Order drops by 1.
RiordanPair vertical_antecedent(const CentralPair& c);

// The pair (g, x f), whose triangle's vertical half reproduces the central
// triangle of (g, f): rows R of the half need 2R - 1 rows of the lift.
RiordanPair half_of_lifted(const CentralPair& c);

// Moment sequence of the weight family (s, t; a, b): coefficient n is
// [x^n] (1 - b x^2) / (1 - s x - t x^2) * (1 + a x + b x^2)^n, computed
// with an incrementally updated weight power.
Series chebyshev_moments(const Rat& s, const Rat& t, const Rat& a, const Rat& b,
                         int order);

}  // namespace riordan
