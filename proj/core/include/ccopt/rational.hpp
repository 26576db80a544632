#pragma once

/// Arbitrary-precision rational numbers in canonical form.
///
/// A value is always stored as num/den with den > 0 and gcd(|num|, den) = 1;
/// every operation returns a canonical result, so equality is plain
/// structural comparison.  Backed by GMP's mpq_class, which maintains the
/// same invariant for all arithmetic.  No floating point is involved
/// anywhere: construction from double is deliberately absent.

#include <cassert>
#include <cstdlib>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ccopt/errors.hpp"

namespace ccopt {

/// Arbitrary-precision integer.
using Int = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num) / mpq_class(den); // mpq division canonicalizes
        assert(is_canonical());
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) {
        v_.canonicalize();
    }

    /// Accepts "p" or "p/q" with optional leading minus, nothing else.
    /// In particular decimal notation is rejected: write 1/2, not 0.5.
    static Rational parse(std::string_view text);

    /// Inverse of parse: "p" when integral, "p/q" otherwise, q > 0.
    std::string str() const;

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    friend Rational abs(const Rational& r) { return Rational(abs(r.v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; assert(is_canonical()); return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; assert(is_canonical()); return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; assert(is_canonical()); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        assert(is_canonical());
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    const mpq_class& raw() const { return v_; }

    bool is_canonical() const {
        if (v_.get_den() <= 0)
            return false;
        Int g;
        mpz_gcd(g.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return v_ == 0 ? v_.get_den() == 1 : g == 1;
    }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    auto fail = [&] {
        throw ParseError("invalid rational \"" + std::string(text) +
                         "\": expected an integer or a fraction like \"1/2\"");
    };
    auto is_digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };

    std::string_view rest = text;
    bool neg = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        neg = rest.front() == '-';
        rest.remove_prefix(1);
    }

    std::string_view num_part = rest;
    std::string_view den_part;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num_part = rest.substr(0, slash);
        den_part = rest.substr(slash + 1);
        if (!is_digits(den_part))
            fail();
    }
    if (!is_digits(num_part))
        fail();

    Int num(std::string(num_part), 10);
    if (neg)
        num = -num;
    if (den_part.empty())
        return Rational(num);
    Int den(std::string(den_part), 10);
    if (den == 0)
        fail();
    return Rational(num, den);
}

inline std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (!is_integer()) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

} // namespace ccopt
