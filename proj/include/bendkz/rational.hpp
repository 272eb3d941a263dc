#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace bendkz::xalg {

using bigint = boost::multiprecision::cpp_int;

/// Exact rational number. Invariants: gcd(|num|, den) = 1 and den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(bigint n) : num_(std::move(n)), den_(1) {}
    Rational(bigint n, bigint d);

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    double to_double() const;
    std::complex<double> to_complex() const { return {to_double(), 0.0}; }

    /// "p" or "p/q".
    std::string str() const;

private:
    void normalize();
    bigint num_;
    bigint den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace bendkz::xalg
