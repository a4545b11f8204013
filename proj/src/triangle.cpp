#include "riordan/triangle.hpp"

#include <string>

#include "riordan/errors.hpp"

namespace riordan {

Triangle::Triangle(std::vector<std::vector<Rat>> rows) : r_(std::move(rows)) {
    if (r_.empty()) throw OutOfOrderError("triangle needs at least one row");
    for (size_t n = 0; n < r_.size(); ++n)
        if (r_[n].size() != n + 1)
            throw OutOfOrderError("row " + std::to_string(n) + " has " +
                                  std::to_string(r_[n].size()) + " entries, expected " +
                                  std::to_string(n + 1));
}

Triangle Triangle::identity(int rows) {
    if (rows < 1) throw OutOfOrderError("triangle needs at least one row");
    std::vector<std::vector<Rat>> r(rows);
    for (int n = 0; n < rows; ++n) {
        r[n].assign(n + 1, Rat(0));
        r[n][n] = Rat(1);
    }
    return Triangle(std::move(r));
}

Rat Triangle::at(int n, int k) const {
    if (n < 0 || k < 0 || n >= rows())
        throw OutOfOrderError("triangle index (" + std::to_string(n) + ", " +
                              std::to_string(k) + ") outside " + std::to_string(rows()) +
                              " rows");
    if (k > n) return Rat(0);
    return r_[n][k];
}

Triangle triangle_invert(const Triangle& t) {
    int rows = t.rows();
    for (int n = 0; n < rows; ++n)
        if (t.at(n, n).is_zero())
            throw SingularTriangleError("zero diagonal entry at row " + std::to_string(n));
    std::vector<std::vector<Rat>> inv(rows);
    for (int n = 0; n < rows; ++n) {
        inv[n].assign(n + 1, Rat(0));
        inv[n][n] = Rat(1) / t.at(n, n);
        for (int k = n - 1; k >= 0; --k) {
            Rat s(0);
            for (int j = k; j < n; ++j) s += t.at(n, j) * inv[j][k];
            inv[n][k] = -s / t.at(n, n);
        }
    }
    return Triangle(std::move(inv));
}

Triangle matmul(const Triangle& a, const Triangle& b) {
    if (a.rows() != b.rows())
        throw OutOfOrderError("triangle product needs equal sizes");
    int rows = a.rows();
    std::vector<std::vector<Rat>> c(rows);
    for (int n = 0; n < rows; ++n) {
        c[n].assign(n + 1, Rat(0));
        for (int k = 0; k <= n; ++k)
            for (int j = k; j <= n; ++j) c[n][k] += a.at(n, j) * b.at(j, k);
    }
    return Triangle(std::move(c));
}

Triangle reversal(const Triangle& t) {
    std::vector<std::vector<Rat>> r(t.rows());
    for (int n = 0; n < t.rows(); ++n) {
        r[n].assign(n + 1, Rat(0));
        for (int k = 0; k <= n; ++k) r[n][k] = t.at(n, n - k);
    }
    return Triangle(std::move(r));
}

namespace {

int half_capacity(const Triangle& t) { return (t.rows() + 1) / 2; }

void check_half_rows(const Triangle& t, int out_rows) {
    if (out_rows < 1) throw OutOfOrderError("half needs at least one row");
    if (out_rows > half_capacity(t))
        throw OutOfOrderError("a " + std::to_string(t.rows()) +
                              "-row triangle supports only " +
                              std::to_string(half_capacity(t)) + " half rows, not " +
                              std::to_string(out_rows));
}

}  // namespace

Triangle vertical_half(const Triangle& t, int out_rows) {
    check_half_rows(t, out_rows);
    std::vector<std::vector<Rat>> v(out_rows);
    for (int n = 0; n < out_rows; ++n) {
        v[n].assign(n + 1, Rat(0));
        for (int k = 0; k <= n; ++k) v[n][k] = t.at(2 * n - k, n);
    }
    return Triangle(std::move(v));
}

Triangle vertical_half(const Triangle& t) { return vertical_half(t, half_capacity(t)); }

Triangle horizontal_half(const Triangle& t, int out_rows) {
    check_half_rows(t, out_rows);
    std::vector<std::vector<Rat>> h(out_rows);
    for (int n = 0; n < out_rows; ++n) {
        h[n].assign(n + 1, Rat(0));
        for (int k = 0; k <= n; ++k) h[n][k] = t.at(2 * n, n + k);
    }
    return Triangle(std::move(h));
}

Triangle horizontal_half(const Triangle& t) { return horizontal_half(t, half_capacity(t)); }

std::optional<std::tuple<int, int, Rat, Rat>> first_difference(const Triangle& a,
                                                               const Triangle& b) {
    if (a.rows() != b.rows())
        throw OutOfOrderError("difference scan needs equal sizes");
    for (int n = 0; n < a.rows(); ++n)
        for (int k = 0; k <= n; ++k)
            if (a.at(n, k) != b.at(n, k)) return std::make_tuple(n, k, a.at(n, k), b.at(n, k));
    return std::nullopt;
}

}  // namespace riordan
