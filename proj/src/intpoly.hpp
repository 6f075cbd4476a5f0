#pragma once

/*
 * Internal integer-polynomial kernel for the real-root-counting paths.
 * All chains are kept as primitive integer vectors; every rescale applied
 * anywhere here is by a positive rational, so sign patterns at any
 * evaluation point are exactly those of the underlying rational sequence.
 */

#include <vector>

#include "circlezeros/errors.hpp"
#include "circlezeros/numbers.hpp"
#include "circlezeros/polynomial.hpp"

namespace circlezeros::detail {

using IPoly = std::vector<Integer>;  // ascending degree, no trailing zeros

inline void ip_normalize(IPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int ip_degree(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

inline IPoly ip_derivative(const IPoly& p) {
    IPoly d;
    if (p.size() <= 1) return d;
    d.reserve(p.size() - 1);
    for (size_t k = 1; k < p.size(); ++k) d.push_back(Integer(static_cast<long>(k)) * p[k]);
    return d;
}

inline Integer ip_content(const IPoly& p) {
    Integer c = 0;
    for (const auto& a : p) {
        if (sgn(a) == 0) continue;
        if (c == 0) c = abs(a);
        else c = gcd(c, a);
        if (c == 1) break;
    }
    return c;
}

// Divides out the (positive) content; the sign of the polynomial is kept.
inline IPoly ip_primitive(IPoly p) {
    ip_normalize(p);
    if (p.empty()) return p;
    Integer c = ip_content(p);
    if (c > 1)
        for (auto& a : p) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    return p;
}

// A *positive* integer multiple of rem(a, b), deg a >= deg b.  The loop
// scales by lc(b) once per reduction step; an odd number of negative
// scalings is compensated at the end so the Sturm sign convention holds.
inline IPoly ip_prem_positive(IPoly a, const IPoly& b) {
    const Integer lead_b = b.back();
    const int db = ip_degree(b);
    long scalings = 0;
    ip_normalize(a);
    while (ip_degree(a) >= db) {
        const Integer lead_a = a.back();
        const int shift = ip_degree(a) - db;
        for (auto& c : a) c *= lead_b;
        ++scalings;
        for (int k = 0; k <= db; ++k)
            a[static_cast<size_t>(k + shift)] -= lead_a * b[static_cast<size_t>(k)];
        ip_normalize(a);
        if (a.empty()) break;
    }
    if (sgn(lead_b) < 0 && (scalings & 1L))
        for (auto& c : a) c = -c;
    return a;
}

// Exact division (the caller guarantees divisibility over Q; with b
// primitive the quotient is integral by Gauss's lemma).
inline IPoly ip_divexact(const IPoly& a, const IPoly& b) {
    if (b.empty()) throw internal_error("integer polynomial division by zero");
    IPoly rem = a;
    ip_normalize(rem);
    const int db = ip_degree(b);
    if (rem.empty()) return rem;
    IPoly quot(static_cast<size_t>(ip_degree(rem) - db) + 1);
    for (int k = ip_degree(rem); k >= db; --k) {
        const Integer& top = rem[static_cast<size_t>(k)];
        if (sgn(top) == 0) continue;
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
        if (sgn(r) != 0) throw internal_error("inexact integer polynomial division");
        quot[static_cast<size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k - db + j)] -= q * b[static_cast<size_t>(j)];
    }
    ip_normalize(rem);
    if (!rem.empty()) throw internal_error("inexact integer polynomial division (remainder)");
    return quot;
}

// Primitive gcd with positive leading coefficient.
inline IPoly ip_gcd(IPoly f, IPoly g) {
    ip_normalize(f);
    ip_normalize(g);
    if (f.empty()) std::swap(f, g);
    if (g.empty()) {
        f = ip_primitive(std::move(f));
    } else {
        if (ip_degree(f) < ip_degree(g)) std::swap(f, g);
        f = ip_primitive(std::move(f));
        g = ip_primitive(std::move(g));
        while (!g.empty()) {
            if (ip_degree(g) == 0) {
                g.assign(1, Integer(1));
                std::swap(f, g);
                break;
            }
            IPoly r = ip_prem_positive(f, g);
            f = std::move(g);
            g = ip_primitive(std::move(r));
        }
    }
    if (!f.empty() && sgn(f.back()) < 0)
        for (auto& c : f) c = -c;
    return f;
}

inline IPoly ip_squarefree(const IPoly& f) {
    IPoly d = ip_derivative(f);
    if (d.empty()) return ip_primitive(f);
    IPoly g = ip_gcd(f, d);
    if (ip_degree(g) == 0) return ip_primitive(f);
    return ip_primitive(ip_divexact(ip_primitive(f), g));
}

// Clears denominators of a real polynomial; a positive multiple of p.
inline IPoly ip_from_real(const Polynomial& p) {
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.re().denominator());
    IPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rational scaled = c.re() * Rational(den);
        out.push_back(scaled.numerator());
    }
    return out;
}

inline Polynomial ip_to_polynomial(const IPoly& p) {
    std::vector<GaussianRational> c;
    c.reserve(p.size());
    for (const auto& a : p) c.emplace_back(Rational(a));
    return Polynomial(std::move(c));
}

// Sign of p at the rational x = num/den via the homogeneous Horner form
// sum a_k num^k den^(n-k), which never leaves the integers.
inline int ip_sign_at(const IPoly& p, const Rational& x) {
    if (p.empty()) return 0;
    const Integer num = x.numerator();
    const Integer den = x.denominator();
    Integer acc = p.back();
    Integer den_pow = 1;
    for (size_t k = p.size() - 1; k-- > 0;) {
        den_pow *= den;
        acc = acc * num + p[k] * den_pow;
    }
    return sgn(acc);
}

inline int ip_sign_at(const IPoly& p, const ExtendedRational& x) {
    if (p.empty()) return 0;
    if (x.is_finite()) return ip_sign_at(p, x.value());
    int lead = sgn(p.back());
    if (x.is_pos_infinity()) return lead;
    return (ip_degree(p) % 2 == 0) ? lead : -lead;
}

}  // namespace circlezeros::detail
