#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace arq {

// Scalar domain: the rational numbers, or a prime field F_p.
class Field {
public:
    static Field rationals();
    static Field prime_field(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field& other) const = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

// Exact field element.  Rational values are arbitrary-precision fractions;
// prime-field values are canonical residues in [0, p).
class Scalar {
public:
    Scalar() : value_(0), p_(0) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long n);
    static Scalar of_fraction(const Field& f, long num, long den);

    // Accepts integer or fraction literals, e.g. "7", "-3/5".
    static Scalar parse(const Field& f, const std::string& text);

    Field field() const;
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    Scalar(mpq_class value, std::uint64_t p) : value_(std::move(value)), p_(p) { reduce(); }

    void reduce();
    void check_same_field(const Scalar& o) const;

    mpq_class value_;
    std::uint64_t p_;
};

}  // namespace arq
