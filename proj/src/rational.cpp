#include "cohsys/rational.hpp"

#include <ostream>
#include <utility>

#include "cohsys/errors.hpp"

namespace cohsys {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidParams("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    const BigInt g = BigInt::gcd(num_, den_);
    num_ = BigInt::div_exact(num_, g);
    den_ = BigInt::div_exact(den_, g);
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    if (slash == 0 || slash + 1 == text.size()) {
        throw InvalidParams("not a rational: '" + text + "'");
    }
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InvalidParams("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace cohsys
