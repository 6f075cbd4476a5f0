#pragma once

/*
 * numbers.hpp
 * -----------
 * Exact scalar arithmetic: arbitrary-precision integers, rationals,
 * Gaussian rationals (the field Q(i)), and rationals extended with the
 * two infinities used as interval endpoints.
 *
 * Everything here is immutable value semantics over GMP; no floating
 * point is involved anywhere.  Rationals are canonical at all times
 * (gcd(|num|, den) = 1, den > 0, zero is 0/1), so equality is structural.
 */

#include <compare>
#include <string>

#include <gmpxx.h>

#include "circlezeros/errors.hpp"

namespace circlezeros {

using Integer = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    static Rational from_mpq(mpq_class q);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const { return from_mpq(::abs(q_)); }
    Rational reciprocal() const;

    Rational operator-() const { return from_mpq(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Canonical text: "-3", "7/2".
    std::string to_string() const;
    double to_double() const { return q_.get_d(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;  // kept canonical
};

Rational pow(const Rational& base, unsigned long exp);

// Element of Q(i).  Conjugation, exact inversion and the squared modulus
// |w|^2 = re^2 + im^2 are all exact rational operations.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

    GaussianRational conjugate() const { return {re_, -im_}; }
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    bool is_unit_modulus() const { return norm2() == Rational(1); }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Canonical text: "0", "-3", "7/2", "i", "-i", "2i", "3/2-1/4i", "1+i".
    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

GaussianRational conjugate(const GaussianRational& w);
GaussianRational pow(const GaussianRational& base, unsigned long exp);

// A rational endpoint or one of the two infinities, totally ordered as
// -inf < any finite value < +inf.
class ExtendedRational {
public:
    ExtendedRational() : tag_(Tag::Finite) {}
    ExtendedRational(Rational v) : tag_(Tag::Finite), value_(std::move(v)) {}
    ExtendedRational(int v) : ExtendedRational(Rational(v)) {}

    static ExtendedRational neg_infinity() { return ExtendedRational(Tag::NegInf); }
    static ExtendedRational pos_infinity() { return ExtendedRational(Tag::PosInf); }

    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_neg_infinity() const { return tag_ == Tag::NegInf; }
    bool is_pos_infinity() const { return tag_ == Tag::PosInf; }

    const Rational& value() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.tag_ != b.tag_) return false;
        return a.tag_ != Tag::Finite || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

    // "-inf", "inf", or the canonical rational.
    std::string to_string() const;

private:
    enum class Tag { NegInf, Finite, PosInf };
    explicit ExtendedRational(Tag t) : tag_(t) {}

    Tag tag_;
    Rational value_;
};

}  // namespace circlezeros
