#include "cohsys/bigint.hpp"

#include <ostream>

#include "cohsys/errors.hpp"

namespace cohsys {

BigInt::BigInt(long long v) : v_() {
    // mpz_class has no long long constructor on LP64; long is wide enough.
    v_ = static_cast<long>(v);
}

BigInt::BigInt(const std::string& decimal) : v_() {
    if (mpz_set_str(v_.get_mpz_t(), decimal.c_str(), 10) != 0) {
        throw InvalidParams("not a decimal integer: '" + decimal + "'");
    }
}

int BigInt::sign() const { return mpz_sgn(v_.get_mpz_t()); }

BigInt BigInt::abs() const { return BigInt(mpz_class(::abs(v_))); }

BigInt& BigInt::operator+=(const BigInt& o) {
    v_ += o.v_;
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    v_ -= o.v_;
    return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    v_ *= o.v_;
    return *this;
}

BigInt BigInt::operator-() const { return BigInt(mpz_class(-v_)); }

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw InvalidParams("division by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return {BigInt(std::move(q)), BigInt(std::move(r))};
}

BigInt BigInt::div_exact(const BigInt& a, const BigInt& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw NonExactDivision(a.to_string() + " is not divisible by " + b.to_string());
    }
    return q;
}

BigInt BigInt::floor_div(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw InvalidParams("division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(q));
}

BigInt BigInt::ceil_div(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw InvalidParams("division by zero");
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(q));
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(g));
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exp);
    return BigInt(std::move(r));
}

bool BigInt::fits_int64() const { return mpz_fits_slong_p(v_.get_mpz_t()) != 0; }

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw InvalidParams("value does not fit in 64 bits: " + to_string());
    return mpz_get_si(v_.get_mpz_t());
}

std::string BigInt::to_string() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.v_; }

}  // namespace cohsys
