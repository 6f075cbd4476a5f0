#pragma once

/*
 * symmetry.hpp
 * ------------
 * Symmetry classes of a polynomial p of degree n with coefficients p_k:
 *
 *   self-conjugate   p_k     = eps * conj(p_k)   (zeros symmetric to R)
 *   self-inversive   p_{n-k} = eps * conj(p_k)   (zeros symmetric to S),
 *                    requires p_n p_0 != 0; self-adjoint is eps = 1,
 *                    skew-adjoint is eps = -1
 *   self-reciprocal  real with p_{n-k} = p_k
 *   skew-reciprocal  real with p_{n-k} = -p_k
 *
 * eps is always validated against every coefficient pair, not just the
 * end pair (the end-pair quotient is only a necessary condition).
 */

#include <optional>
#include <utility>

#include "circlezeros/numbers.hpp"
#include "circlezeros/polynomial.hpp"

namespace circlezeros {

struct SymmetryReport {
    std::optional<GaussianRational> self_conjugate;  // eps, |eps| = 1
    std::optional<GaussianRational> self_inversive;  // eps, |eps| = 1
    bool self_adjoint = false;
    bool skew_adjoint = false;
    bool self_reciprocal = false;
    bool skew_reciprocal = false;
};

SymmetryReport classify(const Polynomial& p);

// p(u*z): rotates the zeros by u^{-1}.
Polynomial rotate(const Polynomial& p, const GaussianRational& u);

// For self-inversive p, searches the Gaussian units u in the order
// {1, -1, i, -i} for one with u^{-n} = eps; p(u*z) is then self-adjoint
// with the same circle count.  Returns the rotated polynomial and u, or
// nothing when no unit of Q(i) realizes an admissible rotation angle.
std::optional<std::pair<Polynomial, GaussianRational>>
exact_rotation_to_self_adjoint(const Polynomial& p);

}  // namespace circlezeros
