#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cohsys/bigint.hpp"

namespace cohsys {

// Integer-coefficient polynomial in one variable t. Coefficients are stored
// densely in ascending degree with no trailing zeros; the zero polynomial
// has an empty coefficient list. All operations are ring-exact.
class IntPoly {
public:
    IntPoly() = default;  // zero polynomial
    IntPoly(long long c);
    explicit IntPoly(const BigInt& c);
    explicit IntPoly(std::vector<BigInt> coeffs);  // ascending degree; trimmed

    static IntPoly monomial(BigInt c, int deg);
    static IntPoly one_plus_t_pow(int e);   // 1 + t^e, e >= 1
    static IntPoly one_minus_t_pow(int e);  // 1 - t^e, e >= 1

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    // Coefficient of t^i; zero outside the stored range.
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt eval(const BigInt& x) const;
    bool palindromic() const;  // coeff(i) == coeff(degree() - i) for all i

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly pow(unsigned e) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p);

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// Exact quotient q with q*b == a; throws NonExactDivision when no such
// integer polynomial exists (including the division-by-zero case).
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);
// prod_i (1 - t^{e_i}); empty list gives 1. Throws InvalidExponent if e_i < 1.
IntPoly cyclotomic_product(const std::vector<int>& exponents);

}  // namespace cohsys
