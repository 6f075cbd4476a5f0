#include "circlezeros/numbers.hpp"

namespace circlezeros {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::from_mpq(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);  // results of mpq arithmetic are already canonical
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return from_mpq(r);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    return q_.get_str();
}

Rational pow(const Rational& base, unsigned long exp) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exp);
    return Rational(num, den);
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
    Rational n = norm2();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();

    std::string im_part;
    if (im_ == Rational(1)) im_part = "i";
    else if (im_ == Rational(-1)) im_part = "-i";
    else im_part = im_.to_string() + "i";

    if (re_.is_zero()) return im_part;
    if (im_.sign() > 0) return re_.to_string() + "+" + im_part;
    return re_.to_string() + im_part;  // sign carried by the imaginary part
}

GaussianRational conjugate(const GaussianRational& w) { return w.conjugate(); }

GaussianRational pow(const GaussianRational& base, unsigned long exp) {
    GaussianRational acc(1);
    GaussianRational b = base;
    while (exp > 0) {
        if (exp & 1u) acc *= b;
        exp >>= 1u;
        if (exp > 0) b *= b;
    }
    return acc;
}

const Rational& ExtendedRational::value() const {
    if (tag_ != Tag::Finite) throw std::domain_error("value() of an infinite endpoint");
    return value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    auto rank = [](ExtendedRational::Tag t) {
        return t == ExtendedRational::Tag::NegInf ? 0 : t == ExtendedRational::Tag::Finite ? 1 : 2;
    };
    if (a.tag_ != b.tag_) return rank(a.tag_) <=> rank(b.tag_);
    if (a.tag_ != ExtendedRational::Tag::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
}

std::string ExtendedRational::to_string() const {
    switch (tag_) {
        case Tag::NegInf: return "-inf";
        case Tag::PosInf: return "inf";
        default: return value_.to_string();
    }
}

}  // namespace circlezeros
