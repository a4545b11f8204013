#pragma once

#include "riordan/series.hpp"
#include "riordan/triangle.hpp"

namespace riordan {

// Exponential Riordan array [u, v]: entry (n, k) = (n!/k!) [x^n] u v^k.
// Same membership conditions as the ordinary pair (u unit, v valuation 1);
// only the entry scaling differs.
class ExpRiordanPair {
  public:
    ExpRiordanPair(Series u, Series v);

    const Series& u() const { return u_; }
    const Series& v() const { return v_; }
    int order() const { return u_.order(); }

  private:
    Series u_, v_;
};

// Exponential array in central form: entry (n, k) = (n!/k!) [x^(n-k)] g f^n,
// with g and f both units.
class ExpCentralPair {
  public:
    ExpCentralPair(Series g, Series f);

    const Series& g() const { return g_; }
    const Series& f() const { return f_; }
    int order() const { return g_.order(); }

  private:
    Series g_, f_;
};

Rat exp_entry(const ExpRiordanPair& p, int n, int k);
Rat exp_central_entry(const ExpCentralPair& c, int n, int k);

Triangle exp_triangle(const ExpRiordanPair& p, int rows);
Triangle exp_triangle(const ExpCentralPair& c, int rows);

// Inverse pair (1 / u(rev v), rev v); the factorial scaling cancels in the
// matrix product, so the ogf-level formula applies unchanged.
ExpRiordanPair exp_group_inv(const ExpRiordanPair& p);

}  // namespace riordan
