#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "riordan/errors.hpp"

namespace riordan {

/*
 * Exact rational number.  Thin wrapper over GMP's mpq_class that pins the
 * canonical form (lowest terms, positive denominator, 0 stored as 0/1) and
 * adds checked parsing, integer powers and exact n-th roots.  All operations
 * are exact; nothing here ever rounds.
 */
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
    Rat(long num, long den);
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den);

    // Accepts "123", "-123", "p/q", "-p/q" with decimal digits only.
    static Rat parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    // "p/q" without spaces; plain "n" when the denominator is 1.
    std::string str() const;

    // Numerator as long; throws OutOfOrderError when it does not fit.
    long num_as_long() const;
    long den_as_long() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    // Integer power; e < 0 requires a nonzero base.
    Rat pow(long e) const;

    // Exact q-th root (q >= 1) when one exists in Q, nullopt otherwise.
    std::optional<Rat> nth_root(unsigned long q) const;

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace riordan
