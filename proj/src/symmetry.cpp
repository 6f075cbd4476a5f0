#include "circlezeros/symmetry.hpp"

#include <array>

#include "circlezeros/errors.hpp"

namespace circlezeros {

namespace {

// eps with v = eps * conj(v) for the first nonzero coefficient, checked
// against all of them.
std::optional<GaussianRational> conjugate_epsilon(const Polynomial& p) {
    std::optional<GaussianRational> eps;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        if (!eps) eps = c / c.conjugate();
        else if (!(c == *eps * c.conjugate())) return std::nullopt;
    }
    return eps;
}

std::optional<GaussianRational> inversive_epsilon(const Polynomial& p) {
    const int n = p.degree();
    if (p.coeff(0).is_zero()) return std::nullopt;
    GaussianRational eps = p.coeff(n) / p.coeff(0).conjugate();
    if (!eps.is_unit_modulus()) return std::nullopt;
    for (int k = 0; k <= n; ++k)
        if (!(p.coeff(n - k) == eps * p.coeff(k).conjugate())) return std::nullopt;
    return eps;
}

}  // namespace

SymmetryReport classify(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("classify of the zero polynomial");

    SymmetryReport r;
    r.self_conjugate = conjugate_epsilon(p);
    r.self_inversive = inversive_epsilon(p);
    if (r.self_inversive) {
        r.self_adjoint = *r.self_inversive == GaussianRational(1);
        r.skew_adjoint = *r.self_inversive == GaussianRational(-1);
    }
    if (p.is_real()) {
        const int n = p.degree();
        bool self_rec = true, skew_rec = true;
        for (int k = 0; k <= n; ++k) {
            if (!(p.coeff(n - k) == p.coeff(k))) self_rec = false;
            if (!(p.coeff(n - k) == -p.coeff(k))) skew_rec = false;
        }
        r.self_reciprocal = self_rec;
        r.skew_reciprocal = skew_rec;
    }
    return r;
}

Polynomial rotate(const Polynomial& p, const GaussianRational& u) {
    if (u.is_zero()) throw std::domain_error("rotation by zero");
    std::vector<GaussianRational> c = p.coeffs();
    GaussianRational u_pow(1);
    for (size_t k = 0; k < c.size(); ++k) {
        c[k] *= u_pow;
        u_pow *= u;
    }
    return Polynomial(std::move(c));
}

std::optional<std::pair<Polynomial, GaussianRational>>
exact_rotation_to_self_adjoint(const Polynomial& p) {
    SymmetryReport r = classify(p);
    if (!r.self_inversive)
        throw std::domain_error("exact rotation needs a self-inversive polynomial");
    const GaussianRational& eps = *r.self_inversive;
    const auto n = static_cast<unsigned long>(p.degree());

    const GaussianRational i = GaussianRational::i();
    const std::array<GaussianRational, 4> units = {GaussianRational(1), GaussianRational(-1), i, -i};
    for (const auto& u : units) {
        // u^{-n} = conj(u)^n for |u| = 1
        if (pow(u.conjugate(), n) == eps) {
            Polynomial rotated = rotate(p, u);
            if (!classify(rotated).self_adjoint)
                throw internal_error("rotation by an admissible unit must give a self-adjoint polynomial");
            return std::make_pair(std::move(rotated), u);
        }
    }
    return std::nullopt;
}

}  // namespace circlezeros
