#pragma once

/*
 * sturm.hpp
 * ---------
 * The real-root-counting backend.  A SturmSequence is the classical chain
 * S_0, S_1 = S_0', S_k = -rem(S_{k-2}, S_{k-1}) built on the square-free
 * part of the input, each element rescaled only by positive rationals, so
 * the difference of sign variations between two points counts the distinct
 * real zeros in the half-open interval between them exactly -- including
 * at endpoints that happen to be zeros.
 *
 * The interface is deliberately small so a different isolation backend
 * could be substituted without touching callers.
 */

#include <memory>
#include <vector>

#include "circlezeros/numbers.hpp"
#include "circlezeros/polynomial.hpp"

namespace circlezeros {

// Half-open interval (lo, hi], endpoints possibly infinite.
struct RealInterval {
    RealInterval(ExtendedRational lo_, ExtendedRational hi_);
    static RealInterval whole_line();

    ExtendedRational lo;
    ExtendedRational hi;
};

class SturmSequence {
public:
    // p must be real with degree >= 1.
    static SturmSequence build(const Polynomial& p);

    const Polynomial& source() const { return source_; }
    // The chain as polynomials (integer, primitive).
    std::vector<Polynomial> chain() const;

    // Sign variations of the chain evaluated at x, zeros skipped; at the
    // infinities the leading-term signs are used (times (-1)^deg at -inf).
    int sign_variations(const ExtendedRational& x) const;

    // Distinct real zeros of the source in (lo, hi].
    int count(const RealInterval& interval) const;

private:
    SturmSequence() = default;

    Polynomial source_;
    std::vector<std::vector<Integer>> chain_;

    friend class SturmAccess;
};

// Distinct real zeros of p in the half-open interval.  Constants count 0.
int count_real_roots(const Polynomial& p, const RealInterval& interval);

// Sign variations of the derivative sequence {p, p', ..., p^(n)} at lo
// minus those at hi: an upper bound (off by an even integer) on the number
// of zeros in (lo, hi] counted with multiplicity.  Finite endpoints must
// not be zeros of p.
int fourier_bound(const Polynomial& p, const RealInterval& interval);

// Rational B with every complex root of p strictly inside |z| < B.
Rational cauchy_root_bound(const Polynomial& p);

}  // namespace circlezeros
