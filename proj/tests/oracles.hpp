#pragma once

/*
 * Test-only oracles and generators.
 *
 * oracle_count_real_roots counts distinct real zeros in a half-open
 * interval by certified bisection: an interval is discarded once a
 * Lipschitz bound proves it root-free, and accepted once it shows a sign
 * change and a derivative bound proves the root unique.  No Sturm chains
 * or remainder sequences are involved, so it is an independent check of
 * the library's counting path.
 *
 * circle_root_oracle finds all roots simultaneously in floating point
 * (Durand-Kerner) and classifies them against the unit circle with a
 * 1e-9 band; samples with any root in the ambiguous band [1e-9, 1e-6]
 * or with nearly coincident roots are rejected so the caller can redraw.
 */

#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "circlezeros/numbers.hpp"
#include "circlezeros/polynomial.hpp"
#include "circlezeros/sturm.hpp"

namespace circlezeros::testing {

using Rng = std::mt19937_64;

int oracle_count_real_roots(const Polynomial& p, const RealInterval& interval);

struct CircleClassification {
    int on_circle = 0;     // distinct roots with ||z| - 1| < 1e-9
    bool rejected = false; // ambiguous band hit or clustered roots
};

CircleClassification circle_root_oracle(const Polynomial& p);

std::vector<std::complex<long double>> durand_kerner_roots(const Polynomial& p);

// z^n conj(p)(1/conj(z)) -- reverses and conjugates the coefficients.
Polynomial conjugate_reverse(const Polynomial& p);

// --- random generators -------------------------------------------------

Rational random_rational(Rng& rng, long max_abs_num = 9, long max_den = 9);
Rational random_nonzero_rational(Rng& rng, long max_abs_num = 9, long max_den = 9);
GaussianRational random_gaussian(Rng& rng, long bound = 9);
// Unit-modulus Gaussian rational (an occasional exact unit 1, -1, i, -i).
GaussianRational random_unit_gaussian(Rng& rng);

// Dense random polynomial with Gaussian-integer coefficients in
// [-bound, bound]^2 and exact degree deg.
Polynomial random_gaussian_int_poly(Rng& rng, int deg, long bound);
// Real integer coefficients in [-bound, bound], exact degree deg.
Polynomial random_int_poly(Rng& rng, int deg, long bound);

// Instances for the six symmetry classes, built as products of planted
// factors (circle pairs, inversive pairs, real reciprocal pairs, ...).
Polynomial random_self_conjugate(Rng& rng);
Polynomial random_self_adjoint(Rng& rng);
Polynomial random_skew_adjoint(Rng& rng);
// Self-inversive with a planted epsilon that is generally not a Gaussian
// unit power, exercising the fallback route.
Polynomial random_self_inversive(Rng& rng);
Polynomial random_self_reciprocal(Rng& rng);
Polynomial random_skew_reciprocal(Rng& rng);

}  // namespace circlezeros::testing
