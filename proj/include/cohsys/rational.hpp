#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "cohsys/bigint.hpp"

namespace cohsys {

// Exact fraction. Always stored in lowest terms with a positive
// denominator, so equality is plain member equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const BigInt& n) : num_(n), den_(1) {}
    Rational(BigInt num, BigInt den);            // throws InvalidParams on den == 0
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "a/b" or a plain integer "a".
    static Rational parse(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    BigInt floor() const { return BigInt::floor_div(num_, den_); }
    BigInt ceil() const { return BigInt::ceil_div(num_, den_); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string to_string() const;  // "num/den", denominator always shown
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void normalize();
    BigInt num_;
    BigInt den_;  // > 0
};

}  // namespace cohsys
