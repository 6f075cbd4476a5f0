#pragma once

/*
 * polynomial.hpp
 * --------------
 * Dense univariate polynomials over the Gaussian rationals, coefficients
 * stored in ascending degree.  The canonical zero polynomial is the empty
 * coefficient vector; for every other polynomial the last stored
 * coefficient is nonzero.
 *
 * gcd runs a fraction-free primitive remainder sequence over the Gaussian
 * integers (denominators cleared up front, content stripped every step) so
 * that coefficient growth stays polynomial instead of exponential.
 */

#include <string>
#include <utility>
#include <vector>

#include "circlezeros/numbers.hpp"

namespace circlezeros {

class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<GaussianRational> ascending_coeffs);

    static Polynomial constant(GaussianRational c);
    static Polynomial monomial(int degree, GaussianRational lead = GaussianRational(1));
    static Polynomial from_real(std::vector<Rational> ascending_coeffs);
    static Polynomial from_int(const std::vector<long>& ascending_coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Degree of the zero polynomial is undefined; asking for it throws.
    int degree() const;

    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    // Coefficient of z^k; zero beyond the degree.
    const GaussianRational& coeff(int k) const;
    const GaussianRational& leading() const;

    GaussianRational evaluate(const GaussianRational& z) const;

    Polynomial derivative() const;
    Polynomial monic() const;

    bool is_real() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Canonical expression text, descending powers of z ("z^2-5/2z+1").
    std::string to_expression_string() const;
    // Ascending coefficient list ("1,-5/2,1").
    std::string to_coeff_list_string() const;

private:
    void normalize();

    std::vector<GaussianRational> coeffs_;
};

// p*(z*): conjugate every coefficient.  Involutive; p is real iff
// conj_poly(p) == p.
Polynomial conj_poly(const Polynomial& p);

// Exact division with remainder: a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor (primitive PRS over Z[i] internally).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'), made monic: same distinct zeros as p, all simple.
Polynomial squarefree_part(const Polynomial& p);

struct SquareFreeDecomposition {
    struct Part {
        Polynomial factor;  // monic, square-free
        int multiplicity;
    };
    // Pairwise coprime, ascending multiplicity;
    // prod factor^multiplicity == p up to a nonzero constant.
    std::vector<Part> parts;
};

// Yun's characteristic-zero decomposition.
SquareFreeDecomposition squarefree_decompose(const Polynomial& p);

// Given p containing only even powers of z, the h with h(z^2) = p(z).
// Throws if any odd coefficient is nonzero.
Polynomial even_part_substitute(const Polynomial& p);

}  // namespace circlezeros
