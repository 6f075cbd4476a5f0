#pragma once

/*
 * cayley.hpp
 * ----------
 * The mutually inverse Moebius maps
 *
 *     mu(z)    = (z - i) / (z + i)        real line  -> unit circle
 *     omega(z) = -i (z + 1) / (z - 1)     unit circle -> real line
 *
 * on the extended plane (mu(inf) = 1, mu(-i) = inf, omega(1) = inf,
 * omega(inf) = -i), and the induced polynomial transforms
 *
 *     q_mu(z)    = (z + i)^n p(mu(z))
 *     q_omega(z) = (i/2)^n (z - 1)^n p(omega(z))
 *
 * whose zeros are the images of the zeros of p under the opposite map.
 * The transforms are expanded by a Horner-style binomial convolution in
 * O(n^2) exact coefficient operations.
 */

#include <utility>

#include "circlezeros/numbers.hpp"
#include "circlezeros/polynomial.hpp"

namespace circlezeros {

// A point of the extended complex plane C u {inf}.
class ExtendedComplex {
public:
    ExtendedComplex(GaussianRational v) : finite_(true), value_(std::move(v)) {}
    ExtendedComplex(int v) : ExtendedComplex(GaussianRational(v)) {}
    static ExtendedComplex infinity() { return ExtendedComplex(); }

    bool is_infinity() const { return !finite_; }
    const GaussianRational& value() const;

    friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }

    std::string to_string() const { return finite_ ? value_.to_string() : "inf"; }

private:
    ExtendedComplex() : finite_(false) {}
    bool finite_;
    GaussianRational value_;
};

// m(z) = (a z + b) / (c z + d), ad - bc != 0.
struct MobiusMap {
    MobiusMap(GaussianRational a_, GaussianRational b_, GaussianRational c_, GaussianRational d_);

    static MobiusMap identity();
    static MobiusMap mu();
    static MobiusMap omega();

    ExtendedComplex apply(const ExtendedComplex& z) const;

    GaussianRational a, b, c, d;
};

ExtendedComplex mu_point(const ExtendedComplex& z);
ExtendedComplex omega_point(const ExtendedComplex& z);

// mu at a rational line point: an exact unit-modulus Gaussian rational.
GaussianRational mu_of_rational(const Rational& t);
// omega at an exact unit-circle point w != 1: an exact rational.
Rational omega_of_unit_point(const GaussianRational& w);

Polynomial transform_mu(const Polynomial& p);
Polynomial transform_omega(const Polynomial& p);

// (c z + d)^n p(m(z)); no normalizing constant, so only the mu/omega pair
// above is mutually inverse.
Polynomial transform_general(const Polynomial& p, const MobiusMap& m);

}  // namespace circlezeros
