#include "circlezeros/cayley.hpp"

namespace circlezeros {

const GaussianRational& ExtendedComplex::value() const {
    if (!finite_) throw std::domain_error("value() of the point at infinity");
    return value_;
}

MobiusMap::MobiusMap(GaussianRational a_, GaussianRational b_, GaussianRational c_, GaussianRational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if ((a * d - b * c).is_zero()) throw std::domain_error("degenerate Moebius map (ad - bc = 0)");
}

MobiusMap MobiusMap::identity() { return {1, 0, 0, 1}; }

MobiusMap MobiusMap::mu() {
    return {GaussianRational(1), -GaussianRational::i(), GaussianRational(1), GaussianRational::i()};
}

MobiusMap MobiusMap::omega() {
    return {-GaussianRational::i(), -GaussianRational::i(), GaussianRational(1), GaussianRational(-1)};
}

ExtendedComplex MobiusMap::apply(const ExtendedComplex& z) const {
    if (z.is_infinity()) {
        if (c.is_zero()) return ExtendedComplex::infinity();
        return ExtendedComplex(a / c);
    }
    GaussianRational den = c * z.value() + d;
    if (den.is_zero()) return ExtendedComplex::infinity();
    return ExtendedComplex((a * z.value() + b) / den);
}

ExtendedComplex mu_point(const ExtendedComplex& z) { return MobiusMap::mu().apply(z); }
ExtendedComplex omega_point(const ExtendedComplex& z) { return MobiusMap::omega().apply(z); }

GaussianRational mu_of_rational(const Rational& t) {
    // (t - i)/(t + i) = ((t^2 - 1) - 2ti) / (t^2 + 1)
    Rational t2 = t * t;
    Rational den = t2 + Rational(1);
    return {(t2 - Rational(1)) / den, (Rational(-2) * t) / den};
}

Rational omega_of_unit_point(const GaussianRational& w) {
    if (!w.is_unit_modulus()) throw std::domain_error("omega endpoint must have |w|^2 = 1");
    if (w.is_one()) throw std::domain_error("omega is undefined at z = 1");
    GaussianRational v = -GaussianRational::i() * (w + GaussianRational(1)) / (w - GaussianRational(1));
    if (!v.is_real()) throw internal_error("omega of a unit point must be real");
    return v.re();
}

namespace {

// sum_k f_k A^k B^(n-k) for linear A, B, via the Horner recurrence
// acc <- acc*A + f_k * B^(n-k).
Polynomial binomial_compose(const std::vector<GaussianRational>& f,
                            const Polynomial& a, const Polynomial& b) {
    const size_t n = f.size() - 1;
    Polynomial acc = Polynomial::constant(f[n]);
    Polynomial b_pow = Polynomial::constant(GaussianRational(1));
    for (size_t k = n; k-- > 0;) {
        acc = acc * a;
        b_pow = b_pow * b;
        acc += f[k] * b_pow;
    }
    return acc;
}

}  // namespace

Polynomial transform_mu(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("transform of the zero polynomial");
    const GaussianRational i = GaussianRational::i();
    Polynomial z_minus_i = Polynomial(std::vector<GaussianRational>{-i, GaussianRational(1)});
    Polynomial z_plus_i = Polynomial(std::vector<GaussianRational>{i, GaussianRational(1)});
    return binomial_compose(p.coeffs(), z_minus_i, z_plus_i);
}

Polynomial transform_omega(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("transform of the zero polynomial");
    const GaussianRational i = GaussianRational::i();
    const auto n = static_cast<unsigned long>(p.degree());

    // (i/2)^n sum_k p_k (-i)^k (z+1)^k (z-1)^(n-k)
    std::vector<GaussianRational> f = p.coeffs();
    GaussianRational minus_i_pow(1);
    for (size_t k = 0; k < f.size(); ++k) {
        f[k] *= minus_i_pow;
        minus_i_pow *= -i;
    }
    Polynomial z_plus_1 = Polynomial(std::vector<GaussianRational>{GaussianRational(1), GaussianRational(1)});
    Polynomial z_minus_1 = Polynomial(std::vector<GaussianRational>{GaussianRational(-1), GaussianRational(1)});
    Polynomial q = binomial_compose(f, z_plus_1, z_minus_1);
    return pow(i * GaussianRational(Rational(1, 2)), n) * q;
}

Polynomial transform_general(const Polynomial& p, const MobiusMap& m) {
    if (p.is_zero()) throw std::domain_error("transform of the zero polynomial");
    Polynomial num = Polynomial(std::vector<GaussianRational>{m.b, m.a});
    Polynomial den = Polynomial(std::vector<GaussianRational>{m.d, m.c});
    return binomial_compose(p.coeffs(), num, den);
}

}  // namespace circlezeros
