#include "circlezeros/sturm.hpp"

#include "intpoly.hpp"

namespace circlezeros {

using detail::IPoly;

RealInterval::RealInterval(ExtendedRational lo_, ExtendedRational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw std::invalid_argument("interval endpoints must satisfy lo < hi");
}

RealInterval RealInterval::whole_line() {
    return {ExtendedRational::neg_infinity(), ExtendedRational::pos_infinity()};
}

SturmSequence SturmSequence::build(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
    if (!p.is_real()) throw std::domain_error("Sturm sequence needs a real polynomial");
    if (p.is_constant()) throw std::domain_error("Sturm sequence of a constant");

    IPoly f = detail::ip_squarefree(detail::ip_from_real(p));
    if (sgn(f.back()) < 0)
        for (auto& c : f) c = -c;

    SturmSequence seq;
    seq.source_ = p;
    seq.chain_.push_back(f);
    seq.chain_.push_back(detail::ip_derivative(f));

    while (detail::ip_degree(seq.chain_.back()) > 0) {
        const IPoly& a = seq.chain_[seq.chain_.size() - 2];
        const IPoly& b = seq.chain_.back();
        IPoly r = detail::ip_prem_positive(a, b);
        if (r.empty())
            throw internal_error("square-free Sturm chain terminated with a zero remainder");
        for (auto& c : r) c = -c;
        seq.chain_.push_back(detail::ip_primitive(std::move(r)));
    }
    return seq;
}

std::vector<Polynomial> SturmSequence::chain() const {
    std::vector<Polynomial> out;
    out.reserve(chain_.size());
    for (const auto& e : chain_) out.push_back(detail::ip_to_polynomial(e));
    return out;
}

int SturmSequence::sign_variations(const ExtendedRational& x) const {
    int variations = 0;
    int prev = 0;
    for (const auto& e : chain_) {
        int s = detail::ip_sign_at(e, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int SturmSequence::count(const RealInterval& interval) const {
    int n = sign_variations(interval.lo) - sign_variations(interval.hi);
    if (n < 0) throw internal_error("negative Sturm count");
    return n;
}

int count_real_roots(const Polynomial& p, const RealInterval& interval) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (!p.is_real()) throw std::domain_error("root count needs a real polynomial");
    if (p.is_constant()) return 0;
    return SturmSequence::build(p).count(interval);
}

int fourier_bound(const Polynomial& p, const RealInterval& interval) {
    if (p.is_zero() || p.is_constant())
        throw std::domain_error("Fourier bound needs degree >= 1");
    if (!p.is_real()) throw std::domain_error("Fourier bound needs a real polynomial");

    // The whole derivative sequence, cleared to integers by one positive
    // factor (signs of every element are unchanged).
    std::vector<IPoly> seq;
    seq.push_back(detail::ip_from_real(p));
    while (!seq.back().empty() && detail::ip_degree(seq.back()) > 0)
        seq.push_back(detail::ip_derivative(seq.back()));

    for (const ExtendedRational& end : {interval.lo, interval.hi})
        if (end.is_finite() && detail::ip_sign_at(seq.front(), end) == 0)
            throw std::domain_error("Fourier bound endpoint is a root");

    auto variations = [&seq](const ExtendedRational& x) {
        int v = 0, prev = 0;
        for (const auto& e : seq) {
            int s = detail::ip_sign_at(e, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };

    int bound = variations(interval.lo) - variations(interval.hi);
    if (bound < 0) throw internal_error("negative Fourier bound");
    return bound;
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
    const GaussianRational& lead = p.leading();
    // |a_k| <= |re|+|im| and |a_n| >= max(|re|,|im|) keep the bound valid
    // for Gaussian coefficients without leaving the rationals.
    Rational lead_low = std::max(lead.re().abs(), lead.im().abs());
    Rational top(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational mag = p.coeff(k).re().abs() + p.coeff(k).im().abs();
        top = std::max(top, mag);
    }
    return Rational(1) + top / lead_low;
}

}  // namespace circlezeros
