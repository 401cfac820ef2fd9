#include "arq/field.hpp"

#include <stdexcept>

namespace arq {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

}  // namespace

Field Field::rationals() { return Field(0); }

Field Field::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not prime");
    return Field(p);
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return Scalar(mpq_class(0), f.characteristic()); }

Scalar Scalar::one(const Field& f) { return Scalar(mpq_class(1), f.characteristic()); }

Scalar Scalar::of_int(const Field& f, long n) { return Scalar(mpq_class(n), f.characteristic()); }

Scalar Scalar::of_fraction(const Field& f, long num, long den) {
    if (den == 0) throw std::domain_error("of_fraction: zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return Scalar(std::move(v), f.characteristic());
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("bad scalar literal: '" + text + "'");
    if (v.get_den() == 0) throw std::invalid_argument("bad scalar literal (zero denominator): '" + text + "'");
    v.canonicalize();
    return Scalar(std::move(v), f.characteristic());
}

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field::prime_field(p_); }

void Scalar::reduce() {
    if (p_ == 0) return;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class den = value_.get_den();
    if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("scalar denominator not invertible mod " + std::to_string(p_));
        value_ = mpq_class(value_.get_num() * inv);
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), value_.get_num().get_mpz_t(), p.get_mpz_t());
    value_ = mpq_class(r);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator-() const { return Scalar(-value_, p_); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return Scalar(value_ + o.value_, p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return Scalar(value_ - o.value_, p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return Scalar(value_ * o.value_, p_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (p_ == 0) return Scalar(1 / value_, 0);
    mpz_class p(static_cast<unsigned long>(p_)), inv;
    mpz_class num = value_.get_num();
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod " + std::to_string(p_));
    return Scalar(mpq_class(inv), p_);
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return value_ == o.value_;
}

std::string Scalar::str() const { return value_.get_str(); }

}  // namespace arq
