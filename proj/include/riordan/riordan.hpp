#pragma once

#include "riordan/series.hpp"
#include "riordan/triangle.hpp"

namespace riordan {

/*
 * Lower-triangular array built from a pair of series (u, v) with u(0) != 0,
 * v(0) = 0, v'(0) != 0.  Entry (n, k) is the coefficient of x^n in u * v^k.
 * Both components are truncated to the smaller of the two orders at
 * construction; that common order bounds every row the pair can produce.
 */
class RiordanPair {
  public:
    RiordanPair(Series u, Series v);

    const Series& u() const { return u_; }
    const Series& v() const { return v_; }
    int order() const { return u_.order(); }

  private:
    Series u_, v_;
};

// Entry (n, k); 0 above the diagonal, error for negative indices or n beyond
// the pair's order.
Rat entry(const RiordanPair& p, int n, int k);

// First `rows` rows, built column by column (column k scans u * v^k once).
Triangle triangle(const RiordanPair& p, int rows);

// (d, h) * (u, v) = (d * u(h), v(h)): the left operand supplies the
// substituted series, matching the product of the associated matrices.
RiordanPair group_mul(const RiordanPair& a, const RiordanPair& b);

// Inverse pair (1 / u(rev v), rev v); same order as the input.
RiordanPair group_inv(const RiordanPair& p);

// A- and Z-sequences with a shared nonzero-A(0) invariant.  Row recurrence:
// t[n+1][k+1] = sum_j A_j t[n][k+j] and t[n+1][0] = sum_j Z_j t[n][j].
class AZPair {
  public:
    AZPair(Series a, Series z);

    const Series& a() const { return a_; }
    const Series& z() const { return z_; }
    int order() const { return a_.order(); }

  private:
    Series a_, z_;
};

// A = x / rev(v); order drops by 1.
Series a_sequence(const RiordanPair& p);

// Z = (1 / rev(v)) (1 - 1 / u(rev v)); order drops by 1.  Requires u(0) = 1,
// otherwise the inner bracket has valuation 0 and the division errors out.
Series z_sequence(const RiordanPair& p);

AZPair az_sequences(const RiordanPair& p);

// Whether u = x v' / v through the comparable order, the condition for the
// array to be a hitting-time matrix.
bool is_hitting_time(const RiordanPair& p);

// Pairs generating the vertical and horizontal halves of the array.  With
// phi = rev(x^2 / v), both share the first component u(phi) x phi' / phi;
// the vertical half substitutes phi itself, the horizontal half v(phi).
struct HalvesPairs {
    RiordanPair vertical;
    RiordanPair horizontal;
};

// The vertical pair comes out at order N - 2, the horizontal pair truncated
// to min(N - 2, N / 2), for input order N.
HalvesPairs halves_formula(const RiordanPair& p);

}  // namespace riordan
