#pragma once

/*
 * Internal Gaussian-integer arithmetic backing the fraction-free
 * polynomial remainder sequences.  Z[i] is Euclidean under the norm
 * re^2 + im^2: dividing with componentwise rounding to the nearest
 * integer leaves a remainder of at most half the divisor's norm, so the
 * usual gcd recursion terminates.
 */

#include <vector>

#include "circlezeros/numbers.hpp"

namespace circlezeros::detail {

struct GaussInt {
    Integer re;
    Integer im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    Integer norm() const { return re * re + im * im; }
    GaussInt conj() const { return {re, -im}; }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
};

// Nearest-integer value of x/y, y > 0.
inline Integer round_div(const Integer& x, const Integer& y) {
    Integer q;
    Integer num = 2 * x + y;
    Integer den = 2 * y;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Quotient of a/b rounded to the nearest Gaussian integer; the remainder
// a - q*b then has norm <= norm(b)/2.
inline GaussInt rounded_quotient(const GaussInt& a, const GaussInt& b) {
    GaussInt num = a * b.conj();
    Integer n = b.norm();
    return {round_div(num.re, n), round_div(num.im, n)};
}

// Exact division; the caller guarantees b | a.
inline GaussInt divexact(const GaussInt& a, const GaussInt& b) {
    GaussInt num = a * b.conj();
    Integer n = b.norm();
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
    return q;
}

// The unique associate with re > 0, im >= 0 (zero stays zero).
inline GaussInt canonical_associate(GaussInt g) {
    if (g.is_zero()) return g;
    // rotate by i until the argument lies in [0, pi/2)
    for (int k = 0; k < 3 && !(sgn(g.re) > 0 && sgn(g.im) >= 0); ++k)
        g = GaussInt{-g.im, g.re};
    return g;
}

inline GaussInt gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
        GaussInt q = rounded_quotient(a, b);
        GaussInt r = a - q * b;
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

using GPoly = std::vector<GaussInt>;  // ascending degree, no trailing zeros

inline void gp_normalize(GPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int gp_degree(const GPoly& p) { return static_cast<int>(p.size()) - 1; }

inline GaussInt gp_content(const GPoly& p) {
    GaussInt c{0, 0};
    for (const auto& a : p) {
        if (a.is_zero()) continue;
        c = c.is_zero() ? canonical_associate(a) : gcd(c, a);
        if (c.norm() == 1) break;
    }
    return c;
}

inline GPoly gp_primitive(GPoly p) {
    gp_normalize(p);
    if (p.empty()) return p;
    GaussInt c = gp_content(p);
    if (c.norm() != 1)
        for (auto& a : p) a = divexact(a, c);
    return p;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0): repeatedly scales by
// the leading coefficient of b, so the result is an exact Gaussian-integer
// multiple of the rational remainder.
inline GPoly gp_prem(GPoly a, const GPoly& b) {
    const GaussInt lead_b = b.back();
    const int db = gp_degree(b);
    gp_normalize(a);
    while (gp_degree(a) >= db) {
        const GaussInt lead_a = a.back();
        const int shift = gp_degree(a) - db;
        for (auto& c : a) c = c * lead_b;
        for (int k = 0; k <= db; ++k)
            a[static_cast<size_t>(k + shift)] = a[static_cast<size_t>(k + shift)] - lead_a * b[static_cast<size_t>(k)];
        gp_normalize(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace circlezeros::detail
