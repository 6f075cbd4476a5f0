#include "circlezeros/json_io.hpp"

#include <nlohmann/json.hpp>

namespace circlezeros {

using nlohmann::json;

namespace {

json extended_json(const ExtendedRational& e) { return e.to_string(); }

double extended_decimal(const ExtendedRational& e) {
    if (e.is_neg_infinity()) return -std::numeric_limits<double>::infinity();
    if (e.is_pos_infinity()) return std::numeric_limits<double>::infinity();
    return e.value().to_double();
}

json gaussian_json(const GaussianRational& w) { return w.to_string(); }

}  // namespace

json to_json(const CountReport& r) {
    json j{
        {"distinct_on_circle", r.distinct_on_circle},
        {"zero_at_one", r.zero_at_one},
        {"zero_at_minus_one", r.zero_at_minus_one},
        {"algorithm_used", to_string(r.algorithm_used)},
        {"transformed_degree", r.transformed_degree},
    };
    if (r.with_multiplicity) j["with_multiplicity"] = *r.with_multiplicity;
    return j;
}

json to_json(const SymmetryReport& r) {
    json j{
        {"self_adjoint", r.self_adjoint},
        {"skew_adjoint", r.skew_adjoint},
        {"self_reciprocal", r.self_reciprocal},
        {"skew_reciprocal", r.skew_reciprocal},
    };
    j["self_conjugate"] = r.self_conjugate
        ? json{{"epsilon", gaussian_json(*r.self_conjugate)}}
        : json(nullptr);
    j["self_inversive"] = r.self_inversive
        ? json{{"epsilon", gaussian_json(*r.self_inversive)}}
        : json(nullptr);
    return j;
}

json to_json(const RealInterval& r) {
    return json{
        {"lo", extended_json(r.lo)},
        {"hi", extended_json(r.hi)},
        {"lo_decimal", extended_decimal(r.lo)},
        {"hi_decimal", extended_decimal(r.hi)},
    };
}

json to_json(const SalemReport& r) {
    json j{
        {"is_salem_candidate", r.is_salem_candidate},
        {"reasons", r.reasons},
        {"circle_zero_count", r.circle_zero_count},
        {"irreducibility", to_string(r.irreducibility)},
    };
    j["salem_number"] = r.salem_number_enclosure ? to_json(*r.salem_number_enclosure) : json(nullptr);
    j["is_small"] = r.is_small ? json(*r.is_small) : json(nullptr);
    return j;
}

json to_json(const IsolationResult& r) {
    json arcs = json::array();
    for (const auto& arc : r.arcs) {
        arcs.push_back(json{
            {"line_lo", extended_json(arc.line_interval.lo)},
            {"line_hi", extended_json(arc.line_interval.hi)},
            {"line_lo_decimal", extended_decimal(arc.line_interval.lo)},
            {"line_hi_decimal", extended_decimal(arc.line_interval.hi)},
            {"circle_from", gaussian_json(arc.circle_from)},
            {"circle_to", gaussian_json(arc.circle_to)},
        });
    }
    return json{
        {"zero_at_one", r.zero_at_one},
        {"arc_count", static_cast<int>(r.arcs.size())},
        {"arcs", std::move(arcs)},
    };
}

json to_json(const PolyExpr& input) {
    json coeffs = json::array();
    for (const auto& c : input.poly.coeffs()) coeffs.push_back(gaussian_json(c));
    return json{
        {"text", input.source},
        {"form", input.form == PolyInputForm::Expression ? "expression" : "coeff-list"},
        {"polynomial", input.poly.to_expression_string()},
        {"coeffs", std::move(coeffs)},
        {"degree", input.poly.is_zero() ? json(nullptr) : json(input.poly.degree())},
    };
}

json scan_candidate_json(const Polynomial& p, const SalemReport& r) {
    json j{
        {"poly", p.to_expression_string()},
        {"degree", p.degree()},
        {"circle_count", r.circle_zero_count},
        {"irreducibility", to_string(r.irreducibility)},
    };
    if (r.salem_number_enclosure) {
        j["salem_lo"] = extended_json(r.salem_number_enclosure->lo);
        j["salem_hi"] = extended_json(r.salem_number_enclosure->hi);
        j["salem_lo_decimal"] = extended_decimal(r.salem_number_enclosure->lo);
        j["salem_hi_decimal"] = extended_decimal(r.salem_number_enclosure->hi);
    } else {
        j["salem_lo"] = nullptr;
        j["salem_hi"] = nullptr;
    }
    j["small"] = r.is_small ? json(*r.is_small) : json(nullptr);
    return j;
}

json to_json(const ScanSummary& s) {
    return json{
        {"degree", s.degree},
        {"height", s.height},
        {"enumerated", s.enumerated},
        {"candidates", s.candidates},
        {"small_candidates", s.small_candidates},
    };
}

}  // namespace circlezeros
