#pragma once

/*
 * circle_count.hpp
 * ----------------
 * Counting the distinct zeros of a complex polynomial on the unit circle
 * by transporting them to the real line with the Cayley map and running
 * the Sturm backend there.
 *
 * Six routes are provided.  The general ones build a real surrogate of
 * q_mu (either the product q * conj(q) or the gcd of its real and
 * imaginary parts); the symmetric ones exploit structure: a self-adjoint
 * polynomial transforms to a real q_mu directly, a self-inversive one is
 * first rotated to self-adjoint when a Gaussian unit realizes the angle,
 * and for self-conjugate and (skew-)reciprocal polynomials the surrogate
 * is even, so the substitution z <- sqrt(z) halves the degree and the
 * count doubles over (0, inf).
 *
 * The printed form of the reciprocal route counts the halved polynomial
 * over the whole line; that counts real reciprocal zero pairs of p as if
 * they were circle zeros (e.g. z^2 - 5/2 z + 1).  The corrected route is
 * the default; Alg6Mode::AsPrinted reproduces the published behaviour
 * for comparison.
 */

#include <optional>
#include <string>
#include <vector>

#include "circlezeros/cayley.hpp"
#include "circlezeros/numbers.hpp"
#include "circlezeros/polynomial.hpp"
#include "circlezeros/sturm.hpp"

namespace circlezeros {

enum class CountAlgorithm {
    General1A,
    General1B,
    SelfConjugate3,
    SelfAdjoint4,
    SelfInversive5,
    Reciprocal6,
};

const char* to_string(CountAlgorithm a);

struct CountReport {
    int distinct_on_circle = 0;
    std::optional<int> with_multiplicity;
    bool zero_at_one = false;
    bool zero_at_minus_one = false;
    CountAlgorithm algorithm_used = CountAlgorithm::General1A;
    int transformed_degree = 0;  // degree handed to the root counter
};

enum class Alg6Mode { Corrected, AsPrinted };

CountReport count_general_product(const Polynomial& p);
CountReport count_general_gcd(const Polynomial& p);
CountReport count_self_conjugate(const Polynomial& p);
CountReport count_self_adjoint(const Polynomial& p);
CountReport count_self_inversive(const Polynomial& p);
CountReport count_reciprocal(const Polynomial& p, Alg6Mode mode = Alg6Mode::Corrected);

// Routes to the cheapest applicable algorithm:
// Reciprocal6 > SelfAdjoint4 > SelfInversive5 > SelfConjugate3 > General1B.
CountReport count_on_circle(const Polynomial& p, Alg6Mode mode = Alg6Mode::Corrected);

// Distinct count on the square-free part plus the multiplicity-weighted
// count through the square-free decomposition.
CountReport count_with_multiplicity(const Polynomial& p, Alg6Mode mode = Alg6Mode::Corrected);

// An endpoint on the unit circle.  Exact points are unit-modulus Gaussian
// rationals (their line images are exactly rational); points given by an
// angle are carried as a rational surrogate of -cot(theta/2) with an
// advisory tolerance for collision warnings.
struct CirclePoint {
    enum class Kind { AtOne, Exact, Surrogate };

    static CirclePoint one();
    static CirclePoint exact(GaussianRational w);
    static CirclePoint surrogate(Rational line_t, double angle_hint, Rational tolerance);

    Kind kind = Kind::AtOne;
    GaussianRational w;       // Exact only
    Rational line_t;          // Surrogate only
    double angle_hint = 0.0;  // Surrogate only
    Rational tolerance;       // Surrogate only
};

// Half-open arc (from, to], traversed counterclockwise.  from == to == 1
// denotes the full circle.
struct ArcSpec {
    CirclePoint from;
    CirclePoint to;
};

struct ArcCount {
    int count = 0;
    std::vector<std::string> warnings;  // surrogate collisions
};

ArcCount count_arc(const Polynomial& p, const ArcSpec& arc);

// A half-open line interval with rational endpoints together with its
// image arc; contains exactly one distinct circle zero of the query.
struct IsolatingArc {
    RealInterval line_interval;
    GaussianRational circle_from;
    GaussianRational circle_to;
};

struct IsolationResult {
    bool zero_at_one = false;  // reported separately as the point arc {1}
    std::vector<IsolatingArc> arcs;
};

IsolationResult isolate_circle_zeros(const Polynomial& p,
                                     const std::optional<Rational>& max_width = std::nullopt);

}  // namespace circlezeros
