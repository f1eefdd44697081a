#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace cohsys {

// Arbitrary-precision signed integer. Thin value wrapper over GMP so that
// arithmetic is exact at any size; the rest of the library never touches
// GMP directly.
class BigInt {
public:
    BigInt() : v_(0) {}
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);  // throws InvalidParams

    int sign() const;  // -1, 0, +1
    bool is_zero() const { return sign() == 0; }
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    BigInt operator-() const;

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    // Truncated quotient and remainder (sign of remainder follows a).
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    // Quotient when b divides a exactly; throws NonExactDivision otherwise.
    static BigInt div_exact(const BigInt& a, const BigInt& b);
    static BigInt floor_div(const BigInt& a, const BigInt& b);
    static BigInt ceil_div(const BigInt& a, const BigInt& b);
    static BigInt gcd(const BigInt& a, const BigInt& b);  // always >= 0
    static BigInt pow(const BigInt& base, unsigned long exp);

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws InvalidParams when out of range

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}
    mpz_class v_;
};

}  // namespace cohsys
