#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

// Lower-triangular matrix with exact entries; row n holds columns 0..n.
class Triangle {
  public:
    // rows[n].size() must be n + 1.
    explicit Triangle(std::vector<std::vector<Rat>> rows);

    static Triangle identity(int rows);

    int rows() const { return static_cast<int>(r_.size()); }

    // Entry (n, k); returns 0 above the diagonal, throws OutOfOrderError for
    // negative indices or rows outside the stored range.
    Rat at(int n, int k) const;

    const std::vector<std::vector<Rat>>& data() const { return r_; }

    friend bool operator==(const Triangle& a, const Triangle& b) { return a.r_ == b.r_; }

  private:
    std::vector<std::vector<Rat>> r_;
};

// Inverse by forward substitution; every diagonal entry must be nonzero.
Triangle triangle_invert(const Triangle& t);

// Product of two triangles of equal size.
Triangle matmul(const Triangle& a, const Triangle& b);

// Row reversal: out[n][k] = t[n][n-k].
Triangle reversal(const Triangle& t);

// Vertical half V[n][k] = t[2n-k][n].  A source with R rows supports
// (R + 1) / 2 output rows; the one-argument form emits that many.
Triangle vertical_half(const Triangle& t);
Triangle vertical_half(const Triangle& t, int out_rows);

// Horizontal half H[n][k] = t[2n][n+k]; R source rows support (R + 1) / 2.
Triangle horizontal_half(const Triangle& t);
Triangle horizontal_half(const Triangle& t, int out_rows);

// First position where two equal-sized triangles differ, with both values;
// nullopt when identical.  Sizes must match.
std::optional<std::tuple<int, int, Rat, Rat>> first_difference(const Triangle& a,
                                                               const Triangle& b);

}  // namespace riordan
