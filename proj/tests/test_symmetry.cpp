#include <doctest.h>

#include "circlezeros/circle_count.hpp"
#include "circlezeros/symmetry.hpp"
#include "oracles.hpp"

using namespace circlezeros;
using circlezeros::testing::Rng;

namespace {

const GaussianRational kI = GaussianRational::i();

Polynomial lehmer() {
    return Polynomial::from_int({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
}

}  // namespace

TEST_CASE("classify worked examples") {
    SUBCASE("Lehmer polynomial is self-reciprocal") {
        SymmetryReport r = classify(lehmer());
        CHECK(r.self_reciprocal);
        CHECK_FALSE(r.skew_reciprocal);
        REQUIRE(r.self_conjugate);
        CHECK(*r.self_conjugate == GaussianRational(1));
        REQUIRE(r.self_inversive);
        CHECK(*r.self_inversive == GaussianRational(1));
        CHECK(r.self_adjoint);
    }
    SUBCASE("z^2 - 1 is skew-reciprocal") {
        SymmetryReport r = classify(Polynomial::from_int({-1, 0, 1}));
        CHECK(r.skew_reciprocal);
        CHECK_FALSE(r.self_reciprocal);
        CHECK(r.skew_adjoint);
    }
    SUBCASE("(1+i)z^2 + 3z + (1-i) is self-adjoint") {
        Polynomial p(std::vector<GaussianRational>{
            GaussianRational(Rational(1), Rational(-1)), GaussianRational(3),
            GaussianRational(Rational(1), Rational(1))});
        SymmetryReport r = classify(p);
        CHECK(r.self_adjoint);
        CHECK_FALSE(r.self_conjugate);
        CHECK_FALSE(r.self_reciprocal);
    }
    SUBCASE("p_0 = 0 disables the inversive flags") {
        SymmetryReport r = classify(Polynomial::from_int({0, 1}));
        CHECK_FALSE(r.self_inversive);
        CHECK(r.self_conjugate);
    }
    CHECK_THROWS_AS(classify(Polynomial()), std::domain_error);
}

TEST_CASE("epsilon is validated on every pair, not just the ends") {
    // end pair consistent with eps = 1, interior pair broken
    Polynomial p(std::vector<GaussianRational>{GaussianRational(1), kI, GaussianRational(2), -kI,
                                               GaussianRational(1)});
    // p3 = -i vs eps * conj(p1) = -i holds; break a middle pair instead
    SymmetryReport r = classify(p);
    // p2 = 2 = conj(p2) fine; p4 = 1 = conj(p0) fine -> actually inversive
    CHECK(r.self_inversive);

    Polynomial broken(std::vector<GaussianRational>{GaussianRational(1), kI, GaussianRational(2),
                                                    kI, GaussianRational(1)});
    // p_{4-1} = i but eps * conj(p_1) = conj(i) = -i: must fail
    CHECK_FALSE(classify(broken).self_inversive);
}

TEST_CASE("classify is invariant under positive rational scaling") {
    Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = circlezeros::testing::random_self_inversive(rng);
        Rational c = circlezeros::testing::random_rational(rng, 7, 5).abs() + Rational(1, 3);
        SymmetryReport a = classify(p);
        SymmetryReport b = classify(GaussianRational(c) * p);
        CHECK(a.self_conjugate == b.self_conjugate);
        CHECK(a.self_inversive == b.self_inversive);
        CHECK(a.self_adjoint == b.self_adjoint);
        CHECK(a.skew_adjoint == b.skew_adjoint);
        CHECK(a.self_reciprocal == b.self_reciprocal);
        CHECK(a.skew_reciprocal == b.skew_reciprocal);
    }
}

TEST_CASE("planted epsilon is recovered exactly") {
    Rng rng(22);
    for (int trial = 0; trial < 80; ++trial) {
        GaussianRational gamma = circlezeros::testing::random_unit_gaussian(rng);
        Polynomial base = circlezeros::testing::random_self_adjoint(rng);
        Polynomial p = gamma * base;
        GaussianRational expected_eps = gamma / gamma.conjugate();
        SymmetryReport r = classify(p);
        REQUIRE(r.self_inversive);
        CHECK(*r.self_inversive == expected_eps);
    }
}

TEST_CASE("zeros at +-1 have the parity the reciprocal class forces") {
    Rng rng(23);
    auto multiplicity_at = [](Polynomial p, long root) {
        Polynomial factor = Polynomial::from_int({-root, 1});
        int m = 0;
        while (!p.is_constant() && p.evaluate(GaussianRational(Rational(root))).is_zero()) {
            p = divrem(p, factor).first;
            ++m;
        }
        return m;
    };
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial self = circlezeros::testing::random_self_reciprocal(rng);
        CHECK(multiplicity_at(self, 1) % 2 == 0);
        CHECK(multiplicity_at(self, -1) % 2 == self.degree() % 2);

        Polynomial skew = circlezeros::testing::random_skew_reciprocal(rng);
        CHECK(multiplicity_at(skew, 1) % 2 == 1);
        CHECK(multiplicity_at(skew, -1) % 2 == (skew.degree() + 1) % 2);
    }
}

TEST_CASE("exact rotation worked examples") {
    SUBCASE("i z^2 + i rotates by u = i") {
        Polynomial p(std::vector<GaussianRational>{kI, GaussianRational(0), kI});
        REQUIRE(classify(p).self_inversive);
        CHECK(*classify(p).self_inversive == GaussianRational(-1));
        auto rot = exact_rotation_to_self_adjoint(p);
        REQUIRE(rot);
        CHECK(rot->second == kI);
        CHECK(rot->first == Polynomial(std::vector<GaussianRational>{kI, GaussianRational(0), -kI}));
        CHECK(classify(rot->first).self_adjoint);
    }
    SUBCASE("already self-adjoint: u = 1") {
        Polynomial p = Polynomial::from_int({1, 3, 1});
        auto rot = exact_rotation_to_self_adjoint(p);
        REQUIRE(rot);
        CHECK(rot->second == GaussianRational(1));
        CHECK(rot->first == p);
    }
    SUBCASE("eps = i with n = 2 has no Gaussian-unit rotation") {
        Polynomial p(std::vector<GaussianRational>{GaussianRational(1), GaussianRational(0), kI});
        REQUIRE(classify(p).self_inversive);
        CHECK(*classify(p).self_inversive == kI);
        CHECK_FALSE(exact_rotation_to_self_adjoint(p).has_value());
    }
    CHECK_THROWS_AS(exact_rotation_to_self_adjoint(Polynomial::from_int({-2, 1})),
                    std::domain_error);
}

TEST_CASE("report flags are mutually consistent") {
    Rng rng(25);
    std::uniform_int_distribution<int> deg(1, 8);
    std::uniform_int_distribution<int> style(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p;
        switch (style(rng)) {
            case 0: p = circlezeros::testing::random_self_conjugate(rng); break;
            case 1: p = circlezeros::testing::random_self_adjoint(rng); break;
            case 2: p = circlezeros::testing::random_skew_adjoint(rng); break;
            case 3: p = circlezeros::testing::random_self_inversive(rng); break;
            case 4: p = circlezeros::testing::random_self_reciprocal(rng); break;
            case 5: p = circlezeros::testing::random_skew_reciprocal(rng); break;
            default: p = circlezeros::testing::random_gaussian_int_poly(rng, deg(rng), 5); break;
        }
        SymmetryReport r = classify(p);
        if (r.self_conjugate) CHECK(r.self_conjugate->norm2() == Rational(1));
        if (r.self_inversive) CHECK(r.self_inversive->norm2() == Rational(1));
        CHECK(r.self_adjoint ==
              (r.self_inversive && *r.self_inversive == GaussianRational(1)));
        CHECK(r.skew_adjoint ==
              (r.self_inversive && *r.self_inversive == GaussianRational(-1)));
        bool conj_one = r.self_conjugate && *r.self_conjugate == GaussianRational(1);
        CHECK(r.self_reciprocal == (conj_one && r.self_adjoint));
        CHECK(r.skew_reciprocal == (conj_one && r.skew_adjoint));
    }
}

TEST_CASE("rotation output is self-adjoint and preserves the circle count") {
    Rng rng(24);
    int done = 0;
    while (done < 40) {
        Polynomial p = circlezeros::testing::random_self_inversive(rng);
        if (p.is_constant()) continue;
        auto rot = exact_rotation_to_self_adjoint(p);
        if (!rot) {
            ++done;
            continue;
        }
        CHECK(classify(rot->first).self_adjoint);
        CHECK(count_on_circle(rot->first).distinct_on_circle ==
              count_on_circle(p).distinct_on_circle);
        ++done;
    }
}
