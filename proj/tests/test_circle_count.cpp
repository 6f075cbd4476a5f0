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

Polynomial phi5() { return Polynomial::from_int({1, 1, 1, 1, 1}); }

// z^2 - 5/2 z + 1: real reciprocal pair {2, 1/2}, nothing on the circle
Polynomial off_circle_reciprocal() {
    return Polynomial::from_real({Rational(1), Rational(-5, 2), Rational(1)});
}

}  // namespace

TEST_CASE("algorithm 1A (product surrogate)") {
    CHECK(count_general_product(Polynomial::from_int({1, 0, 1})).distinct_on_circle == 2);
    CHECK(count_general_product(Polynomial::from_int({0, 1})).distinct_on_circle == 0);
    CountReport r = count_general_product(Polynomial::from_int({-1, 1}));
    CHECK(r.distinct_on_circle == 1);  // the zero at z = 1 is added separately
    CHECK(r.zero_at_one);
    CHECK(r.transformed_degree == 0);
    CHECK_THROWS_AS(count_general_product(Polynomial::from_int({3})), std::domain_error);
}

TEST_CASE("algorithm 1B (gcd surrogate)") {
    CHECK(count_general_gcd(Polynomial::from_int({1, 0, 1})).distinct_on_circle == 2);
    CHECK(count_general_gcd(off_circle_reciprocal()).distinct_on_circle == 0);
    CHECK(count_general_gcd(kI * Polynomial::from_int({1, 0, 1})).distinct_on_circle == 2);
}

TEST_CASE("algorithm 3 (self-conjugate)") {
    SUBCASE("(z^2+1)(z-1): strip the unit zero, count the rest") {
        CountReport r =
            count_self_conjugate(Polynomial::from_int({1, 0, 1}) * Polynomial::from_int({-1, 1}));
        CHECK(r.distinct_on_circle == 3);
        CHECK(r.zero_at_one);
    }
    CHECK(count_self_conjugate(off_circle_reciprocal()).distinct_on_circle == 0);
    SUBCASE("real transform branch: z^2+z+1") {
        CountReport r = count_self_conjugate(Polynomial::from_int({1, 1, 1}));
        CHECK(r.distinct_on_circle == 2);
        CHECK(r.transformed_degree == 2);  // 3z^2 - 1 handed to the counter
    }
    SUBCASE("non-real transform branch: z - 2") {
        CountReport r = count_self_conjugate(Polynomial::from_int({-2, 1}));
        CHECK(r.distinct_on_circle == 0);
        CHECK(r.transformed_degree == 1);  // halved even product
    }
    CHECK_THROWS_AS(count_self_conjugate(Polynomial(std::vector<GaussianRational>{
                        GaussianRational(1), kI, GaussianRational(1)})),
                    std::domain_error);
}

TEST_CASE("algorithm 4 (self-adjoint)") {
    CHECK(count_self_adjoint(Polynomial::from_int({1, 0, 1})).distinct_on_circle == 2);
    SUBCASE("worked complex self-adjoint agrees with algorithm 1B") {
        Polynomial p(std::vector<GaussianRational>{
            GaussianRational(Rational(1), Rational(-1)), GaussianRational(3),
            GaussianRational(Rational(1), Rational(1))});
        CHECK(count_self_adjoint(p).distinct_on_circle ==
              count_general_gcd(p).distinct_on_circle);
        CHECK(count_self_adjoint(p).distinct_on_circle == 0);
    }
    SUBCASE("skew-adjoint via premultiplication") {
        CHECK(count_self_adjoint(kI * Polynomial::from_int({1, 0, 1})).distinct_on_circle == 2);
    }
    CHECK_THROWS_AS(count_self_adjoint(Polynomial::from_int({-2, 1})), std::domain_error);
}

TEST_CASE("algorithm 5 (self-inversive)") {
    SUBCASE("rotation route: i z^2 + i") {
        Polynomial p(std::vector<GaussianRational>{kI, GaussianRational(0), kI});
        CountReport r = count_self_inversive(p);
        CHECK(r.distinct_on_circle == 2);  // zeros at +-i
        CHECK(r.algorithm_used == CountAlgorithm::SelfInversive5);
        CHECK(r.distinct_on_circle == count_general_gcd(p).distinct_on_circle);
    }
    SUBCASE("self-adjoint input behaves like algorithm 4") {
        Polynomial p = Polynomial::from_int({1, 3, 1});
        CHECK(count_self_inversive(p).distinct_on_circle ==
              count_self_adjoint(p).distinct_on_circle);
    }
    SUBCASE("eps = i falls back to the gcd route") {
        Polynomial p(std::vector<GaussianRational>{GaussianRational(1), GaussianRational(0), kI});
        CountReport r = count_self_inversive(p);
        CHECK(r.algorithm_used == CountAlgorithm::General1B);
        CHECK(r.distinct_on_circle == count_general_gcd(p).distinct_on_circle);
    }
    CHECK_THROWS_AS(count_self_inversive(Polynomial::from_int({-2, 1})), std::domain_error);
}

TEST_CASE("algorithm 6 (reciprocal) and the corrected half-line count") {
    SUBCASE("z^2+1: corrected 2, printed 1") {
        CHECK(count_reciprocal(Polynomial::from_int({1, 0, 1})).distinct_on_circle == 2);
        CHECK(count_reciprocal(Polynomial::from_int({1, 0, 1}), Alg6Mode::AsPrinted)
                  .distinct_on_circle == 1);
    }
    SUBCASE("off-circle reciprocal pair: corrected 0, printed 1") {
        CHECK(count_reciprocal(off_circle_reciprocal()).distinct_on_circle == 0);
        CHECK(count_reciprocal(off_circle_reciprocal(), Alg6Mode::AsPrinted).distinct_on_circle ==
              1);
    }
    SUBCASE("z^2-1 is fully stripped") {
        CountReport r = count_reciprocal(Polynomial::from_int({-1, 0, 1}));
        CHECK(r.distinct_on_circle == 2);
        CHECK(r.zero_at_one);
        CHECK(r.zero_at_minus_one);
        CHECK(r.transformed_degree == 0);
    }
    SUBCASE("Lehmer polynomial has eight circle zeros") {
        CountReport r = count_reciprocal(lehmer());
        CHECK(r.distinct_on_circle == 8);
        CHECK(r.transformed_degree == 5);  // halved degree-10 transform
    }
    CHECK_THROWS_AS(count_reciprocal(Polynomial::from_int({-2, 1})), std::domain_error);
}

TEST_CASE("dispatcher picks the cheapest applicable route") {
    CHECK(count_on_circle(lehmer()).algorithm_used == CountAlgorithm::Reciprocal6);
    CHECK(count_on_circle(lehmer()).distinct_on_circle == 8);

    CHECK(count_on_circle(Polynomial::from_int({-1, -1, 0, 1})).distinct_on_circle == 0);
    CHECK(count_on_circle(phi5()).algorithm_used == CountAlgorithm::Reciprocal6);
    CHECK(count_on_circle(phi5()).distinct_on_circle == 4);

    Polynomial adjoint(std::vector<GaussianRational>{GaussianRational(Rational(1), Rational(-1)),
                                                     GaussianRational(3),
                                                     GaussianRational(Rational(1), Rational(1))});
    CHECK(count_on_circle(adjoint).algorithm_used == CountAlgorithm::SelfAdjoint4);

    Polynomial generic(std::vector<GaussianRational>{GaussianRational(Rational(1), Rational(2)),
                                                     GaussianRational(1), GaussianRational(1)});
    CHECK(count_on_circle(generic).algorithm_used == CountAlgorithm::General1B);

    CHECK_THROWS_AS(count_on_circle(Polynomial::from_int({3})), std::domain_error);
}

TEST_CASE("multiplicity-aware counting") {
    Polynomial a = Polynomial::from_int({1, 0, 1});
    SUBCASE("(z^2+1)^2") {
        CountReport r = count_with_multiplicity(a * a);
        CHECK(r.distinct_on_circle == 2);
        CHECK(r.with_multiplicity == 4);
    }
    SUBCASE("(z-1)^3 (z+2)") {
        Polynomial zm1 = Polynomial::from_int({-1, 1});
        CountReport r = count_with_multiplicity(zm1 * zm1 * zm1 * Polynomial::from_int({2, 1}));
        CHECK(r.distinct_on_circle == 1);
        CHECK(r.with_multiplicity == 3);
    }
    SUBCASE("(z^2+1)(z^2+z+1)^2") {
        Polynomial b = Polynomial::from_int({1, 1, 1});
        CountReport r = count_with_multiplicity(a * b * b);
        CHECK(r.distinct_on_circle == 4);
        CHECK(r.with_multiplicity == 6);
    }
}

TEST_CASE("multiplicity is additive over products") {
    Rng rng(31);
    std::uniform_int_distribution<int> deg(1, 5);
    int done = 0;
    while (done < 30) {
        Polynomial p = circlezeros::testing::random_gaussian_int_poly(rng, deg(rng), 4);
        Polynomial q = circlezeros::testing::random_gaussian_int_poly(rng, deg(rng), 4);
        auto total = count_with_multiplicity(p * q).with_multiplicity;
        auto lhs = count_with_multiplicity(p).with_multiplicity;
        auto rhs = count_with_multiplicity(q).with_multiplicity;
        REQUIRE(total);
        CHECK(*total == *lhs + *rhs);
        ++done;
    }
}

TEST_CASE("inversion and rotation invariance of the distinct count") {
    Rng rng(32);
    std::uniform_int_distribution<int> deg(1, 7);
    int done = 0;
    while (done < 40) {
        Polynomial p = circlezeros::testing::random_gaussian_int_poly(rng, deg(rng), 4);
        Polynomial rev = circlezeros::testing::conjugate_reverse(p);
        if (rev.is_zero() || rev.is_constant()) continue;  // zero at the origin only
        int base = count_on_circle(p).distinct_on_circle;
        CHECK(count_on_circle(rev).distinct_on_circle == base);
        for (const GaussianRational& u : {GaussianRational(-1), kI, -kI})
            CHECK(count_on_circle(rotate(p, u)).distinct_on_circle == base);
        ++done;
    }
}

TEST_CASE("cross-algorithm agreement on random symmetric instances") {
    Rng rng(33);
    auto check_all = [](const Polynomial& p) {
        if (p.is_constant()) return;
        SymmetryReport sym = classify(p);
        int reference = count_general_gcd(p).distinct_on_circle;
        CHECK(count_general_product(p).distinct_on_circle == reference);
        if (sym.self_conjugate)
            CHECK(count_self_conjugate(p).distinct_on_circle == reference);
        if (sym.self_adjoint || sym.skew_adjoint)
            CHECK(count_self_adjoint(p).distinct_on_circle == reference);
        if (sym.self_inversive)
            CHECK(count_self_inversive(p).distinct_on_circle == reference);
        if (sym.self_reciprocal || sym.skew_reciprocal)
            CHECK(count_reciprocal(p).distinct_on_circle == reference);
    };
    for (int trial = 0; trial < 25; ++trial) {
        check_all(circlezeros::testing::random_self_conjugate(rng));
        check_all(circlezeros::testing::random_self_adjoint(rng));
        check_all(circlezeros::testing::random_skew_adjoint(rng));
        check_all(circlezeros::testing::random_self_inversive(rng));
        check_all(circlezeros::testing::random_self_reciprocal(rng));
        check_all(circlezeros::testing::random_skew_reciprocal(rng));
    }
}

TEST_CASE("arc counting") {
    Polynomial p = Polynomial::from_int({1, 0, 1});
    SUBCASE("upper half-circle from 1 to -1 holds the zero at i") {
        ArcSpec arc{CirclePoint::one(), CirclePoint::exact(GaussianRational(-1))};
        CHECK(count_arc(p, arc).count == 1);
    }
    SUBCASE("full circle equals the dispatcher count") {
        ArcSpec arc{CirclePoint::one(), CirclePoint::one()};
        CHECK(count_arc(p, arc).count == count_on_circle(p).distinct_on_circle);
    }
    SUBCASE("arc avoiding z = 1 sees nothing of z - 1") {
        ArcSpec arc{CirclePoint::exact(GaussianRational::i()),
                    CirclePoint::exact(GaussianRational(-1))};
        CHECK(count_arc(Polynomial::from_int({-1, 1}), arc).count == 0);
    }
    SUBCASE("wrap-around arc through z = 1 picks up its zero") {
        ArcSpec arc{CirclePoint::exact(-GaussianRational::i()),
                    CirclePoint::exact(GaussianRational::i())};
        CHECK(count_arc(Polynomial::from_int({-1, 1}), arc).count == 1);
    }
    SUBCASE("degenerate arc") {
        ArcSpec arc{CirclePoint::exact(GaussianRational(-1)),
                    CirclePoint::exact(GaussianRational(-1))};
        CHECK_THROWS_AS(count_arc(p, arc), std::domain_error);
    }
    SUBCASE("exact endpoints must be unit-modulus") {
        CHECK_THROWS_AS(CirclePoint::exact(GaussianRational(2)), std::invalid_argument);
    }
    SUBCASE("surrogate near a zero warns") {
        // zero of z^2+1 at i maps to the line point -1
        CirclePoint near = CirclePoint::surrogate(Rational(-999, 1000), 1.5707, Rational(1, 100));
        ArcSpec arc{near, CirclePoint::one()};
        ArcCount r = count_arc(p, arc);
        CHECK_FALSE(r.warnings.empty());
    }
}

TEST_CASE("arc partition sums to the full count") {
    Rng rng(34);
    std::uniform_int_distribution<int> deg(1, 7);
    int done = 0;
    while (done < 25) {
        Polynomial p = circlezeros::testing::random_gaussian_int_poly(rng, deg(rng), 4);
        // three distinct rational line points -> four-arc partition of the circle
        Rational t1 = circlezeros::testing::random_rational(rng, 8, 5);
        Rational t2 = t1 + circlezeros::testing::random_rational(rng, 5, 3).abs() + Rational(1, 9);
        Rational t3 = t2 + circlezeros::testing::random_rational(rng, 5, 3).abs() + Rational(1, 8);
        GaussianRational w1 = mu_of_rational(t1), w2 = mu_of_rational(t2), w3 = mu_of_rational(t3);

        int total = count_arc(p, {CirclePoint::one(), CirclePoint::exact(w1)}).count +
                    count_arc(p, {CirclePoint::exact(w1), CirclePoint::exact(w2)}).count +
                    count_arc(p, {CirclePoint::exact(w2), CirclePoint::exact(w3)}).count +
                    count_arc(p, {CirclePoint::exact(w3), CirclePoint::one()}).count;
        CHECK(total == count_on_circle(p).distinct_on_circle);
        ++done;
    }
}

TEST_CASE("isolation of circle zeros") {
    SUBCASE("z^2+1 gives two arcs around +-i") {
        IsolationResult r = isolate_circle_zeros(Polynomial::from_int({1, 0, 1}));
        CHECK_FALSE(r.zero_at_one);
        REQUIRE(r.arcs.size() == 2);
        // the zeros i and -i map to the line points -1 and +1
        bool has_minus = false, has_plus = false;
        for (const auto& arc : r.arcs) {
            const Rational& lo = arc.line_interval.lo.value();
            const Rational& hi = arc.line_interval.hi.value();
            if (lo < Rational(-1) && Rational(-1) <= hi) has_minus = true;
            if (lo < Rational(1) && Rational(1) <= hi) has_plus = true;
            CHECK(arc.circle_from.is_unit_modulus());
            CHECK(arc.circle_to.is_unit_modulus());
        }
        CHECK(has_minus);
        CHECK(has_plus);
    }
    SUBCASE("z - 1 reports the point arc only") {
        IsolationResult r = isolate_circle_zeros(Polynomial::from_int({-1, 1}));
        CHECK(r.zero_at_one);
        CHECK(r.arcs.empty());
    }
    SUBCASE("Lehmer polynomial needs eight disjoint arcs") {
        IsolationResult r = isolate_circle_zeros(lehmer());
        REQUIRE(r.arcs.size() == 8);
        for (size_t k = 0; k + 1 < r.arcs.size(); ++k)
            CHECK(r.arcs[k].line_interval.hi <= r.arcs[k + 1].line_interval.lo);
        // every line interval verifies to exactly one distinct real zero
        Polynomial q = transform_mu(lehmer());
        for (const auto& arc : r.arcs)
            CHECK(count_real_roots(q, arc.line_interval) == 1);
    }
    SUBCASE("max width refinement") {
        Rational w(1, 64);
        IsolationResult r = isolate_circle_zeros(lehmer(), w);
        for (const auto& arc : r.arcs)
            CHECK(arc.line_interval.hi.value() - arc.line_interval.lo.value() <= w);
    }
}

TEST_CASE("distinct counts match the floating simultaneous-root oracle") {
    Rng rng(35);
    std::uniform_int_distribution<int> deg(1, 12);
    int done = 0;
    while (done < 60) {
        Polynomial p = circlezeros::testing::random_gaussian_int_poly(rng, deg(rng), 5);
        auto oracle = circlezeros::testing::circle_root_oracle(p);
        if (oracle.rejected) continue;
        CHECK(count_on_circle(p).distinct_on_circle == oracle.on_circle);
        ++done;
    }
}
