#include "circlezeros/circle_count.hpp"

#include <algorithm>
#include <deque>

#include "circlezeros/errors.hpp"
#include "circlezeros/symmetry.hpp"

namespace circlezeros {

const char* to_string(CountAlgorithm a) {
    switch (a) {
        case CountAlgorithm::General1A: return "general_1a";
        case CountAlgorithm::General1B: return "general_1b";
        case CountAlgorithm::SelfConjugate3: return "self_conjugate_3";
        case CountAlgorithm::SelfAdjoint4: return "self_adjoint_4";
        case CountAlgorithm::SelfInversive5: return "self_inversive_5";
        case CountAlgorithm::Reciprocal6: return "reciprocal_6";
    }
    return "unknown";
}

namespace {

void require_counting_input(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("circle count of the zero polynomial");
    if (p.is_constant()) throw std::domain_error("circle count of a constant polynomial");
}

bool vanishes_at(const Polynomial& p, const GaussianRational& z) {
    return p.evaluate(z).is_zero();
}

void set_unit_flags(CountReport& r, const Polynomial& p) {
    r.zero_at_one = vanishes_at(p, GaussianRational(1));
    r.zero_at_minus_one = vanishes_at(p, GaussianRational(-1));
}

int surrogate_degree(const Polynomial& w) {
    return w.is_constant() ? 0 : w.degree();
}

int rrc(const Polynomial& w, const RealInterval& interval) {
    if (w.is_constant()) return 0;
    return count_real_roots(w, interval);
}

RealInterval positive_half_line() {
    return {ExtendedRational(Rational(0)), ExtendedRational::pos_infinity()};
}

// A real polynomial with exactly the real zeros of q: q itself when real,
// otherwise gcd(Re q, Im q) (the factor collecting the zeros of q whose
// conjugate is also a zero; its real zeros are precisely those of q).
Polynomial real_surrogate_gcd(const Polynomial& q) {
    if (q.is_real()) return q;
    const GaussianRational half(Rational(1, 2));
    const GaussianRational minus_i_half(Rational(0), Rational(-1, 2));  // 1/(2i)
    Polynomial qc = conj_poly(q);
    Polynomial r = half * (q + qc);
    Polynomial s = minus_i_half * (q - qc);
    if (r.is_zero()) return s.monic();
    if (s.is_zero()) return r.monic();
    return gcd(r, s);
}

void require_even(const Polynomial& q, const char* context) {
    if (q.is_zero()) return;
    for (int k = 1; k <= q.degree(); k += 2)
        if (!q.coeff(k).is_zero())
            throw internal_error(std::string(context) + ": transformed polynomial is not even");
}

struct Stripped {
    Polynomial poly;
    int mult_one = 0;
    int mult_minus_one = 0;
};

Stripped strip_unit_real_zeros(const Polynomial& p) {
    Stripped st;
    st.poly = p;
    const Polynomial z_minus_1 = Polynomial::from_int({-1, 1});
    const Polynomial z_plus_1 = Polynomial::from_int({1, 1});
    while (vanishes_at(st.poly, GaussianRational(1))) {
        st.poly = divrem(st.poly, z_minus_1).first;
        ++st.mult_one;
    }
    while (vanishes_at(st.poly, GaussianRational(-1))) {
        st.poly = divrem(st.poly, z_plus_1).first;
        ++st.mult_minus_one;
    }
    return st;
}

}  // namespace

CountReport count_general_product(const Polynomial& p) {
    require_counting_input(p);
    CountReport rep;
    rep.algorithm_used = CountAlgorithm::General1A;
    set_unit_flags(rep, p);

    Polynomial q = transform_mu(p);
    if (!q.is_real()) q = q * conj_poly(q);
    rep.transformed_degree = surrogate_degree(q);
    rep.distinct_on_circle = rrc(q, RealInterval::whole_line());
    if (rep.zero_at_one) ++rep.distinct_on_circle;
    return rep;
}

CountReport count_general_gcd(const Polynomial& p) {
    require_counting_input(p);
    CountReport rep;
    rep.algorithm_used = CountAlgorithm::General1B;
    set_unit_flags(rep, p);

    Polynomial q = real_surrogate_gcd(transform_mu(p));
    rep.transformed_degree = surrogate_degree(q);
    rep.distinct_on_circle = rrc(q, RealInterval::whole_line());
    if (rep.zero_at_one) ++rep.distinct_on_circle;
    return rep;
}

CountReport count_self_conjugate(const Polynomial& p) {
    require_counting_input(p);
    if (!classify(p).self_conjugate)
        throw std::domain_error("count_self_conjugate needs a self-conjugate polynomial");

    CountReport rep;
    rep.algorithm_used = CountAlgorithm::SelfConjugate3;
    set_unit_flags(rep, p);

    // Zeros at +-1 break the evenness hypothesis and the z <- sqrt(z)
    // pairing at the origin; strip them and count them separately.
    Stripped st = strip_unit_real_zeros(p);
    int n = (st.mult_one > 0 ? 1 : 0) + (st.mult_minus_one > 0 ? 1 : 0);

    if (!st.poly.is_constant()) {
        Polynomial q = transform_mu(st.poly);
        if (q.is_real()) {
            rep.transformed_degree = surrogate_degree(q);
            n += rrc(q, RealInterval::whole_line());
        } else {
            Polynomial product = q * conj_poly(q);
            require_even(product, "self-conjugate route");
            Polynomial half = even_part_substitute(product);
            rep.transformed_degree = surrogate_degree(half);
            n += 2 * rrc(half, positive_half_line());
        }
    }
    rep.distinct_on_circle = n;
    return rep;
}

CountReport count_self_adjoint(const Polynomial& p) {
    require_counting_input(p);
    SymmetryReport sym = classify(p);
    if (!sym.self_adjoint && !sym.skew_adjoint)
        throw std::domain_error("count_self_adjoint needs a (skew-)self-adjoint polynomial");

    CountReport rep;
    rep.algorithm_used = CountAlgorithm::SelfAdjoint4;
    set_unit_flags(rep, p);

    Polynomial q = transform_mu(p);
    if (sym.skew_adjoint) q = GaussianRational::i() * q;
    if (!q.is_real())
        throw internal_error("self-adjoint route: transformed polynomial is not real");

    rep.transformed_degree = surrogate_degree(q);
    rep.distinct_on_circle = rrc(q, RealInterval::whole_line());
    if (rep.zero_at_one) ++rep.distinct_on_circle;
    return rep;
}

CountReport count_self_inversive(const Polynomial& p) {
    require_counting_input(p);
    if (!classify(p).self_inversive)
        throw std::domain_error("count_self_inversive needs a self-inversive polynomial");

    auto rotation = exact_rotation_to_self_adjoint(p);
    CountReport rep;
    if (rotation) {
        rep = count_self_adjoint(rotation->first);
        rep.algorithm_used = CountAlgorithm::SelfInversive5;
    } else {
        // No Gaussian unit realizes the rotation angle exactly.
        rep = count_general_gcd(p);
    }
    set_unit_flags(rep, p);
    return rep;
}

CountReport count_reciprocal(const Polynomial& p, Alg6Mode mode) {
    require_counting_input(p);
    SymmetryReport sym = classify(p);
    if (!sym.self_reciprocal && !sym.skew_reciprocal)
        throw std::domain_error("count_reciprocal needs a (skew-)reciprocal polynomial");

    CountReport rep;
    rep.algorithm_used = CountAlgorithm::Reciprocal6;
    set_unit_flags(rep, p);

    Stripped st = strip_unit_real_zeros(p);
    int n = (st.mult_one > 0 ? 1 : 0) + (st.mult_minus_one > 0 ? 1 : 0);

    if (!st.poly.is_constant()) {
        Polynomial q = transform_mu(st.poly);
        if (!q.is_real()) {
            // Residual skew symmetry leaves a pure-imaginary transform.
            Polynomial rotated = GaussianRational::i() * q;
            if (!rotated.is_real())
                throw internal_error("reciprocal route: transform is neither real nor pure imaginary");
            q = std::move(rotated);
        }
        require_even(q, "reciprocal route");
        Polynomial half = even_part_substitute(q);
        rep.transformed_degree = surrogate_degree(half);

        // Only the *positive* roots of the halved polynomial come from
        // circle zeros (in symmetric pairs of the even transform).
        // Counting the whole line instead (the printed form) also counts
        // real reciprocal zero pairs of p.
        if (mode == Alg6Mode::Corrected)
            n += 2 * rrc(half, positive_half_line());
        else
            n += rrc(half, RealInterval::whole_line());
    }
    rep.distinct_on_circle = n;
    return rep;
}

CountReport count_on_circle(const Polynomial& p, Alg6Mode mode) {
    require_counting_input(p);
    SymmetryReport sym = classify(p);
    if (sym.self_reciprocal || sym.skew_reciprocal) return count_reciprocal(p, mode);
    if (sym.self_adjoint || sym.skew_adjoint) return count_self_adjoint(p);
    if (sym.self_inversive) return count_self_inversive(p);
    if (sym.self_conjugate) return count_self_conjugate(p);
    return count_general_gcd(p);
}

CountReport count_with_multiplicity(const Polynomial& p, Alg6Mode mode) {
    require_counting_input(p);
    CountReport rep = count_on_circle(squarefree_part(p), mode);
    set_unit_flags(rep, p);

    int weighted = 0;
    for (const auto& part : squarefree_decompose(p).parts)
        weighted += part.multiplicity * count_on_circle(part.factor, mode).distinct_on_circle;
    rep.with_multiplicity = weighted;
    return rep;
}

CirclePoint CirclePoint::one() { return CirclePoint{}; }

CirclePoint CirclePoint::exact(GaussianRational w) {
    if (!w.is_unit_modulus())
        throw std::invalid_argument("arc endpoint must satisfy |w|^2 = 1, got " + w.to_string());
    if (w.is_one()) return one();
    CirclePoint p;
    p.kind = Kind::Exact;
    p.w = std::move(w);
    return p;
}

CirclePoint CirclePoint::surrogate(Rational line_t, double angle_hint, Rational tolerance) {
    if (tolerance.sign() < 0) throw std::invalid_argument("surrogate tolerance must be >= 0");
    CirclePoint p;
    p.kind = Kind::Surrogate;
    p.line_t = std::move(line_t);
    p.angle_hint = angle_hint;
    p.tolerance = std::move(tolerance);
    return p;
}

ArcCount count_arc(const Polynomial& p, const ArcSpec& arc) {
    if (p.is_zero()) throw std::domain_error("arc count of the zero polynomial");

    auto line_value = [](const CirclePoint& pt) -> std::optional<Rational> {
        switch (pt.kind) {
            case CirclePoint::Kind::AtOne: return std::nullopt;
            case CirclePoint::Kind::Exact: return omega_of_unit_point(pt.w);
            default: return pt.line_t;
        }
    };
    std::optional<Rational> a = line_value(arc.from);
    std::optional<Rational> b = line_value(arc.to);
    if (a && b && *a == *b) throw std::domain_error("degenerate arc: endpoints coincide");

    Polynomial w = p.is_constant() ? Polynomial::constant(GaussianRational(1))
                                   : real_surrogate_gcd(transform_mu(p));

    ArcCount out;
    bool includes_one = false;
    if (!a && !b) {
        // full circle
        out.count = rrc(w, RealInterval::whole_line());
        includes_one = true;
    } else if (!a) {
        out.count = rrc(w, {ExtendedRational::neg_infinity(), ExtendedRational(*b)});
    } else if (!b) {
        out.count = rrc(w, {ExtendedRational(*a), ExtendedRational::pos_infinity()});
        includes_one = true;
    } else if (*a < *b) {
        out.count = rrc(w, {ExtendedRational(*a), ExtendedRational(*b)});
    } else {
        // The arc wraps through z = 1; its line image is two tails.
        out.count = rrc(w, {ExtendedRational::neg_infinity(), ExtendedRational(*b)}) +
                    rrc(w, {ExtendedRational(*a), ExtendedRational::pos_infinity()});
        includes_one = true;
    }
    if (includes_one && vanishes_at(p, GaussianRational(1))) ++out.count;

    for (const CirclePoint* pt : {&arc.from, &arc.to}) {
        if (pt->kind != CirclePoint::Kind::Surrogate || pt->tolerance.is_zero()) continue;
        RealInterval band{ExtendedRational(pt->line_t - pt->tolerance),
                          ExtendedRational(pt->line_t + pt->tolerance)};
        if (rrc(w, band) > 0)
            out.warnings.push_back("surrogate endpoint at line point " + pt->line_t.to_string() +
                                   " lies within tolerance of a detected zero");
    }
    return out;
}

IsolationResult isolate_circle_zeros(const Polynomial& p,
                                     const std::optional<Rational>& max_width) {
    require_counting_input(p);

    IsolationResult out;
    out.zero_at_one = vanishes_at(p, GaussianRational(1));

    Polynomial sf = squarefree_part(p);
    if (out.zero_at_one) sf = divrem(sf, Polynomial::from_int({-1, 1})).first;
    if (sf.is_constant()) return out;

    Polynomial w = real_surrogate_gcd(transform_mu(sf));
    if (w.is_constant()) return out;

    SturmSequence seq = SturmSequence::build(w);
    int total = seq.count(RealInterval::whole_line());
    if (total == 0) return out;

    Rational bound = cauchy_root_bound(w);
    struct Segment {
        Rational lo, hi;
        int count;
    };
    std::deque<Segment> work;
    work.push_back({-bound, bound, total});
    if (seq.count({ExtendedRational(-bound), ExtendedRational(bound)}) != total)
        throw internal_error("root bound misses real zeros of the transform");

    std::vector<Segment> isolated;
    while (!work.empty()) {
        Segment seg = work.front();
        work.pop_front();
        bool narrow_enough = !max_width || seg.hi - seg.lo <= *max_width;
        if (seg.count == 1 && narrow_enough) {
            isolated.push_back(seg);
            continue;
        }
        Rational mid = (seg.lo + seg.hi) * Rational(1, 2);
        int left = seq.count({ExtendedRational(seg.lo), ExtendedRational(mid)});
        int right = seg.count - left;
        if (left > 0) work.push_back({seg.lo, mid, left});
        if (right > 0) work.push_back({mid, seg.hi, right});
    }

    std::sort(isolated.begin(), isolated.end(),
              [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
    out.arcs.reserve(isolated.size());
    for (const auto& seg : isolated)
        out.arcs.push_back({RealInterval{ExtendedRational(seg.lo), ExtendedRational(seg.hi)},
                            mu_of_rational(seg.lo), mu_of_rational(seg.hi)});
    return out;
}

}  // namespace circlezeros
