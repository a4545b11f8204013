#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/*
 * Truncated formal power series over Q with exact coefficients.
 *
 * A Series of order N stores coefficients c_0..c_N; asking for anything past
 * N throws OutOfOrderError rather than guessing zero.  Every operation is
 * truncation-stable: the coefficients it produces up to its result order do
 * not depend on how much further the operands happened to be stored.  Binary
 * operations truncate to the smaller operand order; division by a series of
 * valuation w and the conversions built on it lose w orders of precision.
 */
class Series {
  public:
    // coeffs.size() must be order + 1.
    Series(int order, std::vector<Rat> coeffs);

    static Series zero(int order);
    static Series one(int order);
    static Series constant(const Rat& c, int order);
    static Series x(int order);
    // c * x^k truncated to the given order (vanishes when k > order).
    static Series monomial(const Rat& c, int k, int order);
    // Polynomial from low-order coefficients, zero-padded to the given order.
    // Rejects more than order + 1 coefficients.
    static Series poly(std::vector<Rat> coeffs, int order);

    int order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    // n must lie in [0, order].
    const Rat& coeff(int n) const;

    // Index of the first nonzero coefficient; nullopt for the zero series.
    std::optional<int> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }

    // Copy of the first m + 1 coefficients; m must not exceed the order.
    Series truncated(int m) const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

  private:
    int order_;
    std::vector<Rat> c_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rat& r);

// Exact quotient in the power-series ring.  The denominator's valuation must
// not exceed the numerator's; both are shifted down by it and the remaining
// unit is divided out, so the result order is min(orders) - val(denominator).
Series div(const Series& a, const Series& b);

// 1 / a; requires a unit constant term.
Series reciprocal(const Series& a);

// x^k * a; the order grows by k.
Series shift_up(const Series& a, int k);

// a / x^k; the first k coefficients must vanish (the zero series passes).
Series shift_down(const Series& a, int k);

// outer(inner); inner must have zero constant term.
Series compose(const Series& outer, const Series& inner);

// Compositional inverse of a series with valuation exactly 1, by Lagrange
// inversion; the result keeps the full input order.
Series revert(const Series& v);

// Formal derivative; order drops by 1, so the input order must be >= 1.
Series derivative(const Series& a);

// a^n with binary exponentiation; n < 0 requires a unit constant term.
Series pow_int(const Series& a, long n);

// a^(p/q), q > 0.  The constant term must be nonzero and possess an exact
// rational q-th root; the fractional part is the generalized binomial series.
Series pow_rat(const Series& a, long p, long q);

// exp of a series with zero constant term.
Series exp_series(const Series& a);

// log of a series with constant term exactly 1.
Series log_series(const Series& a);

// Generating function of the Catalan numbers to the given order, computed
// from the quadratic recurrence c = 1 + x c^2.
Series catalan_series(int order);

// Coefficient-wise equality through order n; n must not exceed either order.
bool eq_to_order(const Series& a, const Series& b, int n);

// Human-readable polynomial form, e.g. "1 - 2*x + 1/3*x^4 + O(x^7)".
std::string to_string(const Series& a);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Series& a, const Rat& r) { return scale(a, r); }
inline Series operator*(const Rat& r, const Series& a) { return scale(a, r); }
inline Series operator/(const Series& a, const Series& b) { return div(a, b); }

}  // namespace riordan
