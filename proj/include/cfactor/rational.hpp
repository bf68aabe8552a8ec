#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "cfactor/errors.hpp"

namespace cfactor {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; every operation is exact. The textual form is "a" or
/// "a/b" with an optional leading minus, and round-trips bit-identically.
class rational {
public:
    rational() : value_(0) {}
    rational(long n) : value_(n) {}
    rational(long num, long den) : value_(num, den) {
        if (den == 0) throw invalid_input_error("rational: zero denominator");
        canonicalize();
    }
    explicit rational(const mpq_class& v) : value_(v) { canonicalize(); }
    explicit rational(const mpz_class& n) : value_(n) {}
    rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
        if (den == 0) throw invalid_input_error("rational: zero denominator");
        canonicalize();
    }

    /// Parses "a" or "a/b" (optional leading minus on a, b positive).
    static rational parse(std::string_view text) {
        if (!looks_valid(text))
            throw invalid_input_error("rational: cannot parse '" + std::string(text) + "'");
        mpq_class v(std::string(text), 10);
        if (v.get_den() == 0)
            throw invalid_input_error("rational: zero denominator in '" + std::string(text) + "'");
        rational r;
        r.value_ = v;
        r.canonicalize();
        return r;
    }

    std::string str() const { return value_.get_str(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    rational operator-() const { return rational(mpq_class(-value_)); }
    rational abs() const { return sign() < 0 ? -*this : *this; }

    rational inverse() const {
        if (is_zero()) throw invalid_input_error("rational: inverse of zero");
        return rational(mpq_class(1 / value_));
    }

    rational& operator+=(const rational& o) { value_ += o.value_; return *this; }
    rational& operator-=(const rational& o) { value_ -= o.value_; return *this; }
    rational& operator*=(const rational& o) { value_ *= o.value_; return *this; }
    rational& operator/=(const rational& o) {
        if (o.is_zero()) throw invalid_input_error("rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational& a, const rational& b) {
        return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) == 0;
    }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        const int c = mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t());
        return c <=> 0;
    }

    const mpq_class& raw() const { return value_; }

private:
    void canonicalize() { value_.canonicalize(); }

    static bool looks_valid(std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (s[i] == '-') ++i;
        std::size_t digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
        if (digits == 0) return false;
        if (i == s.size()) return true;
        if (s[i] != '/') return false;
        ++i;
        digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
        return digits > 0 && i == s.size();
    }

    mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const rational& r) {
    return os << r.str();
}

/// r^k for integer k (k may be negative when r is nonzero).
inline rational pow(const rational& r, long k) {
    if (k == 0) return rational(1);
    rational base = k < 0 ? r.inverse() : r;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return rational(num, den);
}

} // namespace cfactor
