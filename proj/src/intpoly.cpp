#include "cohsys/intpoly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "cohsys/errors.hpp"

namespace cohsys {

namespace {
// Degrees stay tiny at desk scale; anything near this is a logic error.
constexpr int kMaxDegree = 1 << 20;
}  // namespace

IntPoly::IntPoly(long long c) {
    if (c != 0) coeffs_.push_back(BigInt(c));
}

IntPoly::IntPoly(const BigInt& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(BigInt c, int deg) {
    if (deg < 0 || deg > kMaxDegree) throw InvalidParams("monomial degree out of range");
    if (c.is_zero()) return {};
    std::vector<BigInt> v(static_cast<size_t>(deg) + 1);
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::one_plus_t_pow(int e) {
    if (e < 1) throw InvalidExponent("exponent must be >= 1");
    IntPoly p = monomial(BigInt(1), e);
    return p += IntPoly(1);
}

IntPoly IntPoly::one_minus_t_pow(int e) {
    if (e < 1) throw InvalidExponent("exponent must be >= 1");
    IntPoly p = monomial(BigInt(-1), e);
    return p += IntPoly(1);
}

const BigInt& IntPoly::coeff(int i) const {
    static const BigInt zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool IntPoly::palindromic() const {
    const int d = degree();
    for (int i = 0; 2 * i <= d; ++i) {
        if (coeff(i) != coeff(d - i)) return false;
    }
    return true;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.degree() + b.degree() > kMaxDegree) throw InvalidParams("product degree out of range");
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly acc(1);
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const BigInt& c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const BigInt a = c.abs();
        if (i == 0) {
            os << a.to_string();
        } else {
            if (a != BigInt(1)) os << a.to_string() << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw NonExactDivision("division by the zero polynomial");
    if (a.is_zero()) return {};
    const int da = a.degree();
    const int db = b.degree();
    if (da < db) throw NonExactDivision("quotient is not a polynomial (degree too small)");

    std::vector<BigInt> rem = a.coeffs();
    std::vector<BigInt> quot(static_cast<size_t>(da - db) + 1);
    const BigInt& lead = b.coeff(db);
    for (int i = da; i >= db; --i) {
        const BigInt& top = rem[static_cast<size_t>(i)];
        if (top.is_zero()) continue;
        BigInt q;
        try {
            q = BigInt::div_exact(top, lead);
        } catch (const NonExactDivision&) {
            throw NonExactDivision("quotient is not an integer polynomial");
        }
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<size_t>(i - db + j)] -= q * b.coeff(j);
        }
        quot[static_cast<size_t>(i - db)] = std::move(q);
    }
    for (const auto& c : rem) {
        if (!c.is_zero()) throw NonExactDivision("nonzero remainder");
    }
    return IntPoly(std::move(quot));
}

IntPoly cyclotomic_product(const std::vector<int>& exponents) {
    IntPoly acc(1);
    for (int e : exponents) {
        if (e < 1) throw InvalidExponent("cyclotomic_product: exponent must be >= 1");
        acc = acc * IntPoly::one_minus_t_pow(e);
    }
    return acc;
}

}  // namespace cohsys
