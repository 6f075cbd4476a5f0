#include "circlezeros/salem.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circlezeros/circle_count.hpp"
#include "circlezeros/errors.hpp"
#include "circlezeros/symmetry.hpp"

namespace circlezeros {

const char* to_string(Irreducibility g) {
    switch (g) {
        case Irreducibility::Verified: return "verified";
        case Irreducibility::NotVerified: return "not_verified";
        case Irreducibility::Reducible: return "reducible";
    }
    return "unknown";
}

namespace {

void require_integer(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("Salem check of the zero polynomial");
    for (const auto& c : p.coeffs())
        if (!c.is_real() || !c.re().is_integer())
            throw std::domain_error("Salem check needs integer coefficients");
}

long euler_phi(long m) {
    long result = m;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        result -= result / d;
        while (m % d == 0) m /= d;
    }
    if (m > 1) result -= result / m;
    return result;
}

// Phi_m by the quotient recursion Phi_m = (z^m - 1) / prod_{d|m, d<m} Phi_d,
// memoized within one grading pass.
const Polynomial& cyclotomic(long m, std::map<long, Polynomial>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Polynomial num = Polynomial::monomial(static_cast<int>(m)) -
                     Polynomial::constant(GaussianRational(1));
    for (long d = 1; d < m; ++d) {
        if (m % d) continue;
        auto [q, r] = divrem(num, cyclotomic(d, cache));
        if (!r.is_zero()) throw internal_error("cyclotomic recursion left a remainder");
        num = std::move(q);
    }
    return cache.emplace(m, std::move(num)).first->second;
}

bool is_perfect_square(const Integer& v, Integer& root) {
    if (sgn(v) < 0) return false;
    if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return true;
}

// Exact reducibility decision for monic self-reciprocal quartics
// z^4 + a z^3 + b z^2 + a z + 1 with no zeros at +-1: the only possible
// factorizations are (z^2+uz+1)(z^2+vz+1) with u+v = a, uv = b-2, or
// (z^2+uz-1)(z^2-uz-1), which forces a = 0 and u^2 = -(b+2).
bool reciprocal_quartic_reducible(const Polynomial& p) {
    Integer a = p.coeff(3).re().numerator();
    Integer b = p.coeff(2).re().numerator();
    Integer s;
    if (is_perfect_square(a * a - 4 * (b - 2), s)) {
        if (((a - s) % 2) == 0) return true;
    }
    if (sgn(a) == 0 && is_perfect_square(-(b + 2), s)) return true;
    return false;
}

Irreducibility grade_irreducibility(const Polynomial& p, bool squarefree, bool self_reciprocal) {
    const int n = p.degree();
    if (p.evaluate(GaussianRational(1)).is_zero() ||
        p.evaluate(GaussianRational(-1)).is_zero())
        return Irreducibility::Reducible;
    if (!squarefree) return Irreducibility::Reducible;
    if (n == 4 && self_reciprocal && p.leading().is_one())
        return reciprocal_quartic_reducible(p) ? Irreducibility::Reducible
                                               : Irreducibility::Verified;

    // A cyclotomic divisor of lower degree is a proper factor; equality
    // means p itself is cyclotomic (hence irreducible).
    std::map<long, Polynomial> cache;
    Polynomial monic = p.monic();
    for (long m = 1; m <= 2L * n * n; ++m) {
        long phi = euler_phi(m);
        if (phi > n) continue;
        const Polynomial& cyc = cyclotomic(m, cache);
        if (phi == n) {
            if (monic == cyc) return Irreducibility::Verified;
            continue;
        }
        if (divrem(p, cyc).second.is_zero()) return Irreducibility::Reducible;
    }
    return Irreducibility::NotVerified;
}

struct Profile {
    std::vector<std::string> reasons;
    int circle_count = 0;
    bool squarefree = false;
    bool self_reciprocal = false;
    bool passes = false;
};

Profile counting_profile(const Polynomial& p) {
    require_integer(p);
    Profile prof;

    const int deg = p.is_constant() ? 0 : p.degree();
    if (deg < 4) prof.reasons.emplace_back("degree-below-4");
    if (!p.leading().is_one()) prof.reasons.emplace_back("not-monic");

    if (deg >= 1) {
        SymmetryReport sym = classify(p);
        prof.self_reciprocal = sym.self_reciprocal;
        prof.squarefree = gcd(p, p.derivative()).is_constant();
        prof.circle_count = count_on_circle(p).distinct_on_circle;

        if (!prof.self_reciprocal) prof.reasons.emplace_back("not-self-reciprocal");
        if (!prof.squarefree) prof.reasons.emplace_back("not-square-free");
        if (prof.circle_count != deg - 2)
            prof.reasons.emplace_back("circle-count-not-degree-minus-2");

        SturmSequence seq = SturmSequence::build(p);
        int positive = seq.count(
            {ExtendedRational(Rational(0)), ExtendedRational::pos_infinity()});
        int nonpositive = seq.count(
            {ExtendedRational::neg_infinity(), ExtendedRational(Rational(0))});
        if (positive != 2) prof.reasons.emplace_back("positive-real-zeros-not-2");
        if (nonpositive != 0) prof.reasons.emplace_back("nonpositive-real-zeros-present");
    } else {
        prof.reasons.emplace_back("constant-polynomial");
    }

    prof.passes = prof.reasons.empty();
    return prof;
}

// Bisection state for the largest real zero: the root stays in (lo, hi]
// and nothing lies above hi, so the enclosure can be refined further
// without restarting.
class LargestRootRefiner {
public:
    explicit LargestRootRefiner(const Polynomial& p)
        : seq_(SturmSequence::build(p)), lo_(-cauchy_root_bound(p)), hi_(cauchy_root_bound(p)) {
        if (seq_.count(RealInterval::whole_line()) == 0)
            throw std::domain_error("polynomial has no real zeros");
    }

    void refine(const Rational& width) {
        while (hi_ - lo_ > width) step();
    }

    // Narrows until the whole enclosure lies strictly above the given value.
    void refine_above(const Rational& floor_value) {
        while (!(lo_ > floor_value)) step();
    }

    int count_above(const Rational& x) const {
        return seq_.count({ExtendedRational(x), ExtendedRational(hi_)});
    }

    RealInterval interval() const { return {ExtendedRational(lo_), ExtendedRational(hi_)}; }

private:
    void step() {
        Rational mid = (lo_ + hi_) * Rational(1, 2);
        if (seq_.count({ExtendedRational(mid), ExtendedRational(hi_)}) >= 1) lo_ = mid;
        else hi_ = mid;
    }

    SturmSequence seq_;
    Rational lo_;
    Rational hi_;
};

}  // namespace

RealInterval largest_real_root_enclosure(const Polynomial& p, const Rational& width) {
    if (width.sign() <= 0) throw std::invalid_argument("enclosure width must be positive");
    if (p.is_zero() || p.is_constant())
        throw std::domain_error("largest real root needs degree >= 1");
    if (!p.is_real()) throw std::domain_error("largest real root needs a real polynomial");

    LargestRootRefiner refiner(p);
    refiner.refine(width);
    return refiner.interval();
}

Polynomial pisot_polynomial() { return Polynomial::from_int({-1, -1, 0, 1}); }

RealInterval smallest_pisot_enclosure(const Rational& width) {
    return largest_real_root_enclosure(pisot_polynomial(), width);
}

namespace {

LargestRootRefiner salem_refiner(const Polynomial& p) {
    LargestRootRefiner refiner(p);
    if (refiner.count_above(Rational(1)) != 1)
        throw internal_error("Salem candidate without a unique zero above 1");
    refiner.refine_above(Rational(1));  // the Salem number exceeds 1 strictly
    return refiner;
}

SalemReport finish_report(const Polynomial& p, Profile prof, const Rational& width) {
    SalemReport rep;
    rep.is_salem_candidate = prof.passes;
    rep.reasons = std::move(prof.reasons);
    rep.circle_zero_count = prof.circle_count;
    if (!p.is_constant())
        rep.irreducibility = grade_irreducibility(p, prof.squarefree, prof.self_reciprocal);

    if (rep.is_salem_candidate) {
        LargestRootRefiner salem = salem_refiner(p);
        salem.refine(width);

        LargestRootRefiner pisot(pisot_polynomial());
        Rational compare_width = width;
        for (;;) {
            pisot.refine(compare_width);
            if (salem.interval().hi.value() < pisot.interval().lo.value()) {
                rep.is_small = true;
                break;
            }
            if (salem.interval().lo.value() > pisot.interval().hi.value()) {
                rep.is_small = false;
                break;
            }
            compare_width *= Rational(1, 16);
            salem.refine(compare_width);
        }
        rep.salem_number_enclosure = salem.interval();
        // keep the reported enclosure at the requested width
        if (rep.salem_number_enclosure->hi.value() - rep.salem_number_enclosure->lo.value() > width)
            throw internal_error("enclosure wider than requested");
    }
    return rep;
}

}  // namespace

RealInterval salem_number(const Polynomial& p, const Rational& width) {
    if (width.sign() <= 0) throw std::invalid_argument("enclosure width must be positive");
    Profile prof = counting_profile(p);
    if (!prof.passes) throw std::domain_error("salem_number of a non-candidate polynomial");
    LargestRootRefiner refiner = salem_refiner(p);
    refiner.refine(width);
    return refiner.interval();
}

bool is_small_salem(const Polynomial& p) {
    Profile prof = counting_profile(p);
    if (!prof.passes) throw std::domain_error("is_small_salem of a non-candidate polynomial");

    LargestRootRefiner salem = salem_refiner(p);
    LargestRootRefiner pisot(pisot_polynomial());
    Rational width(1, 10'000'000);
    for (;;) {
        salem.refine(width);
        pisot.refine(width);
        if (salem.interval().hi.value() < pisot.interval().lo.value()) return true;
        if (salem.interval().lo.value() > pisot.interval().hi.value()) return false;
        width *= Rational(1, 16);  // enclosures overlap: refine both
    }
}

SalemReport salem_check(const Polynomial& p) {
    return salem_check(p, Rational(1, 10'000'000));
}

SalemReport salem_check(const Polynomial& p, const Rational& enclosure_width) {
    if (enclosure_width.sign() <= 0)
        throw std::invalid_argument("enclosure width must be positive");
    return finish_report(p, counting_profile(p), enclosure_width);
}

namespace {

Polynomial lattice_polynomial(int degree, int height, long long index) {
    const int half = degree / 2;
    const long long base = 2LL * height + 1;
    std::vector<long> coeffs(static_cast<size_t>(degree) + 1, 0);
    coeffs[0] = 1;
    coeffs[static_cast<size_t>(degree)] = 1;
    for (int k = 1; k <= half; ++k) {
        long digit = static_cast<long>(index % base) - height;
        index /= base;
        coeffs[static_cast<size_t>(k)] = digit;
        coeffs[static_cast<size_t>(degree - k)] = digit;
    }
    return Polynomial::from_int(coeffs);
}

long long lattice_size(int degree, int height) {
    if (degree < 4 || degree > 24 || degree % 2 != 0)
        throw std::invalid_argument("scan degree must be even and in [4, 24]");
    if (height < 1) throw std::invalid_argument("scan height must be >= 1");
    const long long base = 2LL * height + 1;
    long long total = 1;
    for (int k = 0; k < degree / 2; ++k) {
        if (total > (1LL << 62) / base)
            throw std::invalid_argument("scan lattice too large to enumerate");
        total *= base;
    }
    return total;
}

// Full report only for lattice points that pass the counting profile;
// everything else is rejected on the profile alone.
bool scan_one(int degree, int height, long long idx, const CandidateSink& sink,
              SalemReport* out) {
    Polynomial p = lattice_polynomial(degree, height, idx);
    Profile prof = counting_profile(p);
    if (!prof.passes) return false;
    SalemReport rep = finish_report(p, std::move(prof), Rational(1, 10'000'000));
    if (sink) sink(p, rep);
    if (out) *out = std::move(rep);
    return true;
}

}  // namespace

ScanSummary scan_reciprocal_serial(int degree, int height, const CandidateSink& sink) {
    const long long total = lattice_size(degree, height);
    ScanSummary summary{degree, height, total, 0, 0};
    for (long long idx = 0; idx < total; ++idx) {
        SalemReport rep;
        if (!scan_one(degree, height, idx, sink, &rep)) continue;
        ++summary.candidates;
        if (rep.is_small && *rep.is_small) ++summary.small_candidates;
    }
    return summary;
}

ScanSummary scan_reciprocal(int degree, int height, const CandidateSink& sink) {
    const long long total = lattice_size(degree, height);
    ScanSummary summary{degree, height, total, 0, 0};

    long long candidates = 0, smalls = 0;
    std::string failure;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : candidates, smalls)
#endif
    for (long long idx = 0; idx < total; ++idx) {
        try {
            SalemReport rep;
            if (scan_one(degree, height, idx, sink, &rep)) {
                ++candidates;
                if (rep.is_small && *rep.is_small) ++smalls;
            }
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical(circlezeros_scan_error)
#endif
            if (failure.empty()) failure = e.what();
        }
    }
    if (!failure.empty()) throw internal_error("scan worker failed: " + failure);

    summary.candidates = candidates;
    summary.small_candidates = smalls;
    return summary;
}

}  // namespace circlezeros
