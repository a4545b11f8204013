#include "riordan/rational.hpp"

#include <cctype>
#include <ostream>

namespace riordan {

namespace {

void check_nonzero_den(const mpz_class& den) {
    if (sgn(den) == 0) throw DivisionByZeroError("rational with zero denominator");
}

}  // namespace

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    check_nonzero_den(den);
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    auto bad = [&] { throw MathError("invalid rational literal '" + std::string(text) + "'"); };
    size_t i = 0;
    auto scan_int = [&](mpz_class& out) {
        bool neg = i < text.size() && text[i] == '-';
        if (neg) ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) bad();
        out = mpz_class(std::string(text.substr(start, i - start)), 10);
        if (neg) out = -out;
    };
    mpz_class num, den(1);
    scan_int(num);
    if (i < text.size() && text[i] == '/') {
        ++i;
        scan_int(den);
    }
    if (i != text.size()) bad();
    return Rat(num, den);
}

std::string Rat::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

long Rat::num_as_long() const {
    if (!v_.get_num().fits_slong_p()) throw OutOfOrderError("rational numerator does not fit a machine word");
    return v_.get_num().get_si();
}

long Rat::den_as_long() const {
    if (!v_.get_den().fits_slong_p()) throw OutOfOrderError("rational denominator does not fit a machine word");
    return v_.get_den().get_si();
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (is_zero()) throw DivisionByZeroError("negative power of zero");
        Rat inv(v_.get_den(), v_.get_num());
        return inv.pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

std::optional<Rat> Rat::nth_root(unsigned long q) const {
    if (q == 0) throw MathError("0th root is undefined");
    if (q == 1) return *this;
    mpz_class n = v_.get_num(), d = v_.get_den();
    bool neg = sgn(n) < 0;
    if (neg) {
        if (q % 2 == 0) return std::nullopt;
        n = -n;
    }
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), q)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), q)) return std::nullopt;
    if (neg) rn = -rn;
    return Rat(rn, rd);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace riordan
