#include <doctest.h>

#include <set>

#include "circlezeros/cayley.hpp"
#include "circlezeros/sturm.hpp"
#include "oracles.hpp"

using namespace circlezeros;
using circlezeros::testing::Rng;

namespace {

const GaussianRational kI = GaussianRational::i();

}  // namespace

TEST_CASE("point maps and the extended conventions") {
    ExtendedComplex inf = ExtendedComplex::infinity();
    CHECK(mu_point(inf) == ExtendedComplex(GaussianRational(1)));
    CHECK(mu_point(ExtendedComplex(-kI)) == inf);
    CHECK(omega_point(ExtendedComplex(GaussianRational(1))) == inf);
    CHECK(omega_point(inf) == ExtendedComplex(-kI));

    CHECK(mu_point(ExtendedComplex(GaussianRational(0))) == ExtendedComplex(GaussianRational(-1)));
    CHECK(omega_point(ExtendedComplex(GaussianRational(-1))) == ExtendedComplex(GaussianRational(0)));
    CHECK(omega_point(ExtendedComplex(kI)) == ExtendedComplex(GaussianRational(-1)));
    CHECK(omega_point(ExtendedComplex(-kI)) == ExtendedComplex(GaussianRational(1)));
    CHECK(mu_point(ExtendedComplex(GaussianRational(-1))) == ExtendedComplex(kI));

    SUBCASE("mutually inverse on random points") {
        Rng rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            GaussianRational z = circlezeros::testing::random_gaussian(rng, 8);
            ExtendedComplex back = omega_point(mu_point(ExtendedComplex(z)));
            CHECK(back == ExtendedComplex(z));
        }
    }
}

TEST_CASE("mu of a rational line point lands exactly on the circle") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        Rational t = circlezeros::testing::random_rational(rng, 20, 9);
        GaussianRational w = mu_of_rational(t);
        CHECK(w.is_unit_modulus());
        CHECK(omega_of_unit_point(w) == t);
    }
    CHECK_THROWS_AS(omega_of_unit_point(GaussianRational(2)), std::domain_error);
    CHECK_THROWS_AS(omega_of_unit_point(GaussianRational(1)), std::domain_error);
}

TEST_CASE("transform_mu worked examples") {
    CHECK(transform_mu(Polynomial::from_int({1, 0, 1})) == Polynomial::from_int({-2, 0, 2}));
    // degree drop at a zero of z = 1
    CHECK(transform_mu(Polynomial::from_int({-1, 1})) ==
          Polynomial::constant(GaussianRational(Rational(0), Rational(-2))));
    CHECK(transform_mu(Polynomial::from_int({1, 1, 1})) == Polynomial::from_int({-1, 0, 3}));
    CHECK_THROWS_AS(transform_mu(Polynomial()), std::domain_error);
}

TEST_CASE("transform_omega worked examples") {
    CHECK(transform_omega(Polynomial::from_int({-2, 0, 2})) == Polynomial::from_int({1, 0, 1}));
    CHECK(transform_omega(Polynomial::from_int({0, 1})) ==
          Polynomial::from_real({Rational(1, 2), Rational(1, 2)}));
    CHECK(transform_omega(Polynomial::from_int({1})) == Polynomial::from_int({1}));
}

TEST_CASE("transform_general") {
    SUBCASE("the mu matrix reproduces transform_mu") {
        MobiusMap mu{GaussianRational(1), -kI, GaussianRational(1), kI};
        Polynomial p = Polynomial::from_int({1, 0, 1});
        CHECK(transform_general(p, mu) == transform_mu(p));
    }
    SUBCASE("identity map") {
        Rng rng(13);
        for (int trial = 0; trial < 20; ++trial) {
            Polynomial p = circlezeros::testing::random_gaussian_int_poly(rng, 5, 4);
            CHECK(transform_general(p, MobiusMap::identity()) == p);
        }
    }
    SUBCASE("scaling map") {
        MobiusMap dbl{GaussianRational(2), GaussianRational(0), GaussianRational(0),
                      GaussianRational(1)};
        CHECK(transform_general(Polynomial::from_int({-2, 1}), dbl) ==
              Polynomial::from_int({-2, 2}));
    }
    CHECK_THROWS_AS(MobiusMap(GaussianRational(1), GaussianRational(1), GaussianRational(1),
                              GaussianRational(1)),
                    std::domain_error);
}

TEST_CASE("zeros transform through the inverse map") {
    Rng rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        // plant a root at mu(t) for rational t, then q_mu must vanish at t
        Rational t = circlezeros::testing::random_rational(rng, 6, 4);
        GaussianRational root = mu_of_rational(t);
        Polynomial p = Polynomial(std::vector<GaussianRational>{-root, GaussianRational(1)}) *
                       circlezeros::testing::random_gaussian_int_poly(rng, 3, 4);
        if (p.evaluate(GaussianRational(1)).is_zero()) continue;
        Polynomial q = transform_mu(p);
        CHECK(q.evaluate(GaussianRational(t)).is_zero());

        // and a random rational s is a zero of q_mu iff mu(s) is a zero of p
        Rational s = circlezeros::testing::random_rational(rng, 6, 4);
        bool q_zero = q.evaluate(GaussianRational(s)).is_zero();
        bool p_zero = p.evaluate(mu_of_rational(s)).is_zero();
        CHECK(q_zero == p_zero);
    }
}

TEST_CASE("circle zeros transfer to real zeros, count preserved") {
    Rng rng(17);
    std::uniform_int_distribution<int> n_pts(0, 4);
    int done = 0;
    while (done < 60) {
        // plant distinct circle zeros at mu(t) plus off-circle noise, p(1) != 0
        std::set<std::string> seen;
        Polynomial p = Polynomial::constant(GaussianRational(1));
        int planted = 0;
        for (int j = n_pts(rng); j > 0; --j) {
            Rational t = circlezeros::testing::random_rational(rng, 6, 4);
            if (!seen.insert(t.to_string()).second) continue;
            GaussianRational w = mu_of_rational(t);
            p = p * Polynomial(std::vector<GaussianRational>{-w, GaussianRational(1)});
            ++planted;
        }
        GaussianRational off = circlezeros::testing::random_gaussian(rng, 4);
        if (off.is_unit_modulus() || off.is_one()) continue;
        p = p * Polynomial(std::vector<GaussianRational>{-off, GaussianRational(1)});

        Polynomial q = transform_mu(p);
        Polynomial surrogate = q.is_real() ? q : q * conj_poly(q);
        CHECK(count_real_roots(surrogate, RealInterval::whole_line()) == planted);
        ++done;
    }
}

TEST_CASE("mu and omega transforms invert each other when p(1) != 0") {
    Rng rng(15);
    std::uniform_int_distribution<int> deg(0, 10);
    int done = 0;
    while (done < 100) {
        Polynomial p = circlezeros::testing::random_gaussian_int_poly(rng, deg(rng), 6);
        if (p.evaluate(GaussianRational(1)).is_zero()) continue;
        CHECK(transform_omega(transform_mu(p)) == p);
        ++done;
    }
}

TEST_CASE("degree law: transform_mu drops by the multiplicity at z = 1") {
    Rng rng(16);
    std::uniform_int_distribution<int> mult(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        int m = mult(rng);
        Polynomial rest = circlezeros::testing::random_gaussian_int_poly(rng, 3, 5);
        while (rest.evaluate(GaussianRational(1)).is_zero())
            rest = circlezeros::testing::random_gaussian_int_poly(rng, 3, 5);
        Polynomial p = rest;
        for (int k = 0; k < m; ++k) p = p * Polynomial::from_int({-1, 1});
        CHECK(transform_mu(p).degree() == p.degree() - m);
    }
}

TEST_CASE("symmetric circle pairs map to conjugate pairs (gcd degree)") {
    // p with planted pair {zeta, 1/conj(zeta)} and one asymmetric zero: the
    // gcd of the real and imaginary parts of q_mu collects exactly the pair.
    GaussianRational zeta{Rational(3), Rational(1)};
    GaussianRational partner = zeta.conjugate().inverse();
    Polynomial pair = Polynomial(std::vector<GaussianRational>{-zeta, GaussianRational(1)}) *
                      Polynomial(std::vector<GaussianRational>{-partner, GaussianRational(1)});
    Polynomial p = pair * Polynomial(std::vector<GaussianRational>{
                              GaussianRational(Rational(0), Rational(-2)), GaussianRational(1)});

    Polynomial q = transform_mu(p);
    REQUIRE_FALSE(q.is_real());
    GaussianRational half(Rational(1, 2));
    GaussianRational inv_2i(Rational(0), Rational(-1, 2));
    Polynomial r = half * (q + conj_poly(q));
    Polynomial s = inv_2i * (q - conj_poly(q));
    CHECK(gcd(r, s).degree() == 2);
}
