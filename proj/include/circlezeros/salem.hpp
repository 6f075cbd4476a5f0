#pragma once

/*
 * salem.hpp
 * ---------
 * Salem-polynomial candidacy testing on top of the circle counter: a
 * candidate is a monic square-free self-reciprocal integer polynomial of
 * degree >= 4 with exactly deg-2 distinct zeros on the unit circle and
 * two positive real zeros (necessarily a reciprocal pair).  The largest
 * real zero -- the Salem number -- is enclosed by Sturm-guided bisection
 * in exact rational arithmetic, and compared against the smallest Pisot
 * number (the real zero of z^3 - z - 1) by refining both enclosures until
 * they are disjoint.
 *
 * scan_reciprocal enumerates the coefficient lattice of monic
 * self-reciprocal polynomials of a given degree and height.  The lattice
 * points are independent, so the scan fans out with OpenMP; a serial
 * reference implementation is kept for testing and benchmarking.  The
 * sink must tolerate calls from concurrent producers (ordering is not
 * guaranteed).
 */

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circlezeros/numbers.hpp"
#include "circlezeros/polynomial.hpp"
#include "circlezeros/sturm.hpp"

namespace circlezeros {

enum class Irreducibility { Verified, NotVerified, Reducible };

const char* to_string(Irreducibility g);

struct SalemReport {
    bool is_salem_candidate = false;
    std::vector<std::string> reasons;  // failed-criterion tags, empty for candidates
    int circle_zero_count = 0;
    std::optional<RealInterval> salem_number_enclosure;
    std::optional<bool> is_small;
    Irreducibility irreducibility = Irreducibility::NotVerified;
};

// Default enclosure width for candidates is 1e-7.
SalemReport salem_check(const Polynomial& p);
SalemReport salem_check(const Polynomial& p, const Rational& enclosure_width);

// Rational enclosure of the Salem number, hi - lo <= width, lo > 1.
RealInterval salem_number(const Polynomial& p, const Rational& width);

// True iff the Salem number of p lies strictly below the smallest Pisot
// number; decided on exact enclosures refined until disjoint.
bool is_small_salem(const Polynomial& p);

// Sturm-guided bisection enclosure of the largest real zero of a real
// polynomial (must have one).
RealInterval largest_real_root_enclosure(const Polynomial& p, const Rational& width);

// z^3 - z - 1, whose unique real zero is the smallest Pisot number.
Polynomial pisot_polynomial();
RealInterval smallest_pisot_enclosure(const Rational& width);

struct ScanSummary {
    int degree = 0;
    int height = 0;
    long long enumerated = 0;
    long long candidates = 0;
    long long small_candidates = 0;
};

using CandidateSink = std::function<void(const Polynomial&, const SalemReport&)>;

// degree even in [4, 24], height >= 1.  Enumerates the free coefficients
// p_1..p_{n/2} in [-height, height] (p_0 = p_n = 1 are forced), runs
// salem_check on every lattice point and feeds candidates to the sink.
ScanSummary scan_reciprocal(int degree, int height, const CandidateSink& sink);
ScanSummary scan_reciprocal_serial(int degree, int height, const CandidateSink& sink);

}  // namespace circlezeros
