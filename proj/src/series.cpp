#include "riordan/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace riordan {

namespace {

void check_order(int order) {
    if (order < 0) throw OutOfOrderError("series order must be nonnegative");
}

}  // namespace

Series::Series(int order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
    check_order(order);
    if (c_.size() != static_cast<size_t>(order_) + 1)
        throw OutOfOrderError("coefficient count does not match series order");
}

Series Series::zero(int order) {
    check_order(order);
    return Series(order, std::vector<Rat>(order + 1, Rat(0)));
}

Series Series::one(int order) { return constant(Rat(1), order); }

Series Series::constant(const Rat& c, int order) {
    Series s = zero(order);
    s.c_[0] = c;
    return s;
}

Series Series::x(int order) { return monomial(Rat(1), 1, order); }

Series Series::monomial(const Rat& c, int k, int order) {
    if (k < 0) throw OutOfOrderError("monomial exponent must be nonnegative");
    Series s = zero(order);
    if (k <= order) s.c_[k] = c;
    return s;
}

Series Series::poly(std::vector<Rat> coeffs, int order) {
    check_order(order);
    if (coeffs.size() > static_cast<size_t>(order) + 1)
        throw OutOfOrderError("polynomial has more coefficients than the requested order holds");
    coeffs.resize(order + 1, Rat(0));
    return Series(order, std::move(coeffs));
}

const Rat& Series::coeff(int n) const {
    if (n < 0 || n > order_)
        throw OutOfOrderError("coefficient index " + std::to_string(n) +
                              " outside stored order " + std::to_string(order_));
    return c_[n];
}

std::optional<int> Series::valuation() const {
    for (int i = 0; i <= order_; ++i)
        if (!c_[i].is_zero()) return i;
    return std::nullopt;
}

Series Series::truncated(int m) const {
    if (m < 0 || m > order_)
        throw OutOfOrderError("truncation order " + std::to_string(m) +
                              " outside stored order " + std::to_string(order_));
    return Series(m, std::vector<Rat>(c_.begin(), c_.begin() + m + 1));
}

Series add(const Series& a, const Series& b) {
    int m = std::min(a.order(), b.order());
    std::vector<Rat> c(m + 1);
    for (int i = 0; i <= m; ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Series(m, std::move(c));
}

Series sub(const Series& a, const Series& b) {
    int m = std::min(a.order(), b.order());
    std::vector<Rat> c(m + 1);
    for (int i = 0; i <= m; ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Series(m, std::move(c));
}

Series neg(const Series& a) {
    std::vector<Rat> c(a.order() + 1);
    for (int i = 0; i <= a.order(); ++i) c[i] = -a.coeff(i);
    return Series(a.order(), std::move(c));
}

Series mul(const Series& a, const Series& b) {
    int m = std::min(a.order(), b.order());
    std::vector<Rat> c(m + 1, Rat(0));
    for (int i = 0; i <= m; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= m; ++j) c[i + j] += a.coeff(i) * b.coeff(j);
    }
    return Series(m, std::move(c));
}

Series scale(const Series& a, const Rat& r) {
    std::vector<Rat> c(a.order() + 1);
    for (int i = 0; i <= a.order(); ++i) c[i] = a.coeff(i) * r;
    return Series(a.order(), std::move(c));
}

Series shift_up(const Series& a, int k) {
    if (k < 0) throw OutOfOrderError("shift amount must be nonnegative");
    std::vector<Rat> c(a.order() + k + 1, Rat(0));
    for (int i = 0; i <= a.order(); ++i) c[i + k] = a.coeff(i);
    return Series(a.order() + k, std::move(c));
}

Series shift_down(const Series& a, int k) {
    if (k < 0) throw OutOfOrderError("shift amount must be nonnegative");
    if (k > a.order()) throw OutOfOrderError("shift below order 0");
    for (int i = 0; i < k; ++i)
        if (!a.coeff(i).is_zero())
            throw ValuationError("cannot divide by x^" + std::to_string(k) +
                                 ": coefficient " + std::to_string(i) + " is nonzero");
    return Series(a.order() - k,
                  std::vector<Rat>(a.coeffs().begin() + k, a.coeffs().end()));
}

Series div(const Series& a, const Series& b) {
    auto vb = b.valuation();
    if (!vb) throw DivisionByZeroError("division by the zero series");
    auto va = a.valuation();
    if (va && *va < *vb)
        throw ValuationError("quotient leaves the power-series ring: numerator valuation " +
                             std::to_string(*va) + " < denominator valuation " +
                             std::to_string(*vb));
    int m = std::min(a.order(), b.order()) - *vb;
    if (m < 0) throw OutOfOrderError("quotient has no representable coefficients");
    if (!va) return Series::zero(m);

    Series num = shift_down(a.truncated(m + *vb), *vb);
    Series den = shift_down(b.truncated(m + *vb), *vb);
    // Long division against the now-unit denominator.
    std::vector<Rat> q(m + 1);
    const Rat lead = den.coeff(0);
    for (int n = 0; n <= m; ++n) {
        Rat s = num.coeff(n);
        for (int j = 1; j <= n; ++j) s -= den.coeff(j) * q[n - j];
        q[n] = s / lead;
    }
    return Series(m, std::move(q));
}

Series reciprocal(const Series& a) { return div(Series::one(a.order()), a); }

Series compose(const Series& outer, const Series& inner) {
    if (auto v = inner.valuation(); v && *v < 1)
        throw CompositionError("substituted series has nonzero constant term");
    int m = std::min(outer.order(), inner.order());
    // Horner evaluation; outer coefficients past m only feed powers of the
    // inner series that vanish below order m.
    Series acc = Series::zero(m);
    for (int i = m; i >= 0; --i) {
        acc = mul(acc, inner);
        acc = add(acc, Series::constant(outer.coeff(i), m));
    }
    return acc;
}

Series revert(const Series& v) {
    auto val = v.valuation();
    if (!val || *val != 1)
        throw ReversionError("reversion requires valuation exactly 1");
    int n = v.order();
    // Lagrange inversion: [x^k] rev(v) = (1/k) [x^(k-1)] (x/v)^k.
    Series w = div(Series::x(n), v);
    std::vector<Rat> r(n + 1, Rat(0));
    Series p = Series::one(n - 1);
    for (int k = 1; k <= n; ++k) {
        p = mul(p, w);
        r[k] = p.coeff(k - 1) / Rat(k);
    }
    return Series(n, std::move(r));
}

Series derivative(const Series& a) {
    if (a.order() < 1) throw DerivativeError("derivative needs order at least 1");
    std::vector<Rat> c(a.order());
    for (int i = 1; i <= a.order(); ++i) c[i - 1] = Rat(i) * a.coeff(i);
    return Series(a.order() - 1, std::move(c));
}

Series pow_int(const Series& a, long n) {
    if (n == 0) return Series::one(a.order());
    if (n < 0) {
        if (a.coeff(0).is_zero())
            throw PowerError("negative power of a series with zero constant term");
        return pow_int(reciprocal(a), -n);
    }
    Series acc = Series::one(a.order());
    Series base = a;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return acc;
}

Series pow_rat(const Series& a, long p, long q) {
    if (q <= 0) throw PowerError("rational power needs a positive root index");
    const Rat a0 = a.coeff(0);
    if (a0.is_zero()) throw RootError("rational power of a series with zero constant term");
    long g = std::gcd(p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (q == 1) return pow_int(a, p);
    auto root = a0.nth_root(static_cast<unsigned long>(q));
    if (!root)
        throw RootError("constant term " + a0.str() + " has no exact rational " +
                        std::to_string(q) + "th root");
    // a = a0 (1 + t), val(t) >= 1; a^(p/q) = root^p * sum_k C(p/q, k) t^k.
    int m = a.order();
    Series t = sub(scale(a, Rat(1) / a0), Series::one(m));
    Rat alpha = Rat(p) / Rat(q);
    Series acc = Series::one(m);
    Series term = Series::one(m);
    Rat binom(1);
    for (int k = 1; k <= m; ++k) {
        binom = binom * (alpha - Rat(k - 1)) / Rat(k);
        term = mul(term, t);
        acc = add(acc, scale(term, binom));
    }
    return scale(acc, root->pow(p));
}

Series exp_series(const Series& a) {
    if (auto v = a.valuation(); v && *v < 1)
        throw CompositionError("exp requires zero constant term");
    std::vector<Rat> e(a.order() + 1);
    Rat fact(1);
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) fact *= Rat(k);
        e[k] = Rat(1) / fact;
    }
    return compose(Series(a.order(), std::move(e)), a);
}

Series log_series(const Series& a) {
    if (!(a.coeff(0) == Rat(1)))
        throw CompositionError("log requires constant term exactly 1");
    std::vector<Rat> l(a.order() + 1, Rat(0));
    for (int k = 1; k <= a.order(); ++k) l[k] = Rat(k % 2 == 1 ? 1 : -1) / Rat(k);
    return compose(Series(a.order(), std::move(l)), sub(a, Series::one(a.order())));
}

Series catalan_series(int order) {
    check_order(order);
    std::vector<Rat> c(order + 1, Rat(0));
    c[0] = Rat(1);
    for (int n = 1; n <= order; ++n)
        for (int i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
    return Series(order, std::move(c));
}

bool eq_to_order(const Series& a, const Series& b, int n) {
    if (n < 0 || n > a.order() || n > b.order())
        throw OutOfOrderError("comparison order exceeds a stored order");
    for (int i = 0; i <= n; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

std::string to_string(const Series& a) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= a.order(); ++i) {
        const Rat& c = a.coeff(i);
        if (c.is_zero()) continue;
        Rat mag = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        bool unit_mag = mag.is_one();
        if (i == 0 || !unit_mag) os << mag.str();
        if (i > 0) {
            if (!unit_mag) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    os << " + O(x^" << a.order() + 1 << ")";
    return os.str();
}

}  // namespace riordan
