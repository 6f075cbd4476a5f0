#include "circlezeros/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "circlezeros/circle_count.hpp"
#include "circlezeros/errors.hpp"
#include "circlezeros/json_io.hpp"
#include "circlezeros/parse.hpp"
#include "circlezeros/salem.hpp"
#include "circlezeros/symmetry.hpp"
#include "circlezeros/version.hpp"

namespace circlezeros {

namespace {

using nlohmann::json;

struct PolyOptions {
    std::string expression;
    std::string coeffs;
};

void add_poly_options(CLI::App* cmd, PolyOptions& opts) {
    cmd->add_option("polynomial", opts.expression, "polynomial expression in z");
    cmd->add_option("--coeffs", opts.coeffs, "ascending coefficient list c0,c1,...,cn");
}

PolyExpr resolve_polynomial(const PolyOptions& opts, bool allow_zero = false) {
    if (opts.expression.empty() == opts.coeffs.empty())
        throw std::invalid_argument("give the polynomial either as an expression or via --coeffs");
    PolyExpr expr = opts.coeffs.empty() ? parse_polynomial(opts.expression)
                                        : parse_coeff_list(opts.coeffs);
    if (!allow_zero && expr.poly.is_zero())
        throw std::invalid_argument("zero polynomial");
    return expr;
}

struct Emitter {
    std::ostream& out;
    bool json_mode;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const std::string& command, const PolyExpr* input, json flags, json result,
              const std::vector<std::string>& human_lines) {
        if (json_mode) {
            json envelope{
                {"schema", kJsonSchemaVersion},
                {"version", kVersion},
                {"command", command},
                {"flags", std::move(flags)},
                {"result", std::move(result)},
            };
            envelope["input"] = input ? to_json(*input) : json(nullptr);
            auto elapsed = std::chrono::steady_clock::now() - start;
            envelope["timing_ms"] =
                std::chrono::duration<double, std::milli>(elapsed).count();
            out << envelope.dump() << "\n";
        } else {
            for (const auto& line : human_lines) out << line << "\n";
        }
    }
};

CirclePoint resolve_arc_endpoint(const std::string& exact_text, double angle,
                                 bool angle_given, const Rational& tolerance) {
    if (!exact_text.empty() && angle_given)
        throw std::invalid_argument("give an arc endpoint either exactly or as an angle");
    if (!exact_text.empty()) {
        GaussianRational w = parse_gaussian(exact_text);
        return CirclePoint::exact(std::move(w));  // validates |w|^2 = 1
    }
    if (!angle_given)
        throw std::invalid_argument("missing arc endpoint");
    if (angle == 0.0) return CirclePoint::one();
    double half = angle / 2.0;
    double s = std::sin(half);
    if (s == 0.0) return CirclePoint::one();  // 2*pi wraps back to z = 1
    double t = -std::cos(half) / s;
    if (!std::isfinite(t)) throw std::invalid_argument("arc angle out of range");
    return CirclePoint::surrogate(Rational::from_mpq(mpq_class(t)), angle, tolerance);
}

std::string count_human(const CountReport& r) {
    std::string line = "distinct zeros on the unit circle: " +
                       std::to_string(r.distinct_on_circle) + "  [" +
                       to_string(r.algorithm_used) +
                       ", transformed degree " + std::to_string(r.transformed_degree) + "]";
    if (r.with_multiplicity)
        line += "\nzeros with multiplicity: " + std::to_string(*r.with_multiplicity);
    if (r.zero_at_one) line += "\nzero at z=1";
    if (r.zero_at_minus_one) line += "\nzero at z=-1";
    return line;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact counting, location and isolation of polynomial zeros on the unit circle"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable JSON output");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "symmetry class of a polynomial");
    PolyOptions classify_opts;
    add_poly_options(classify_cmd, classify_opts);

    // count-circle
    auto* count_cmd = app.add_subcommand("count-circle", "distinct zeros on the unit circle");
    PolyOptions count_opts;
    add_poly_options(count_cmd, count_opts);
    std::string algorithm = "auto";
    count_cmd->add_option("--algorithm", algorithm, "auto|1a|1b|3|4|5|6")
        ->check(CLI::IsMember({"auto", "1a", "1b", "3", "4", "5", "6"}));
    bool with_multiplicity = false;
    count_cmd->add_flag("--with-multiplicity", with_multiplicity,
                        "also count with multiplicities");
    bool paper_alg6 = false;
    count_cmd->add_flag("--paper-alg6", paper_alg6,
                        "reproduce the published reciprocal route (whole-line count)");

    // count-arc
    auto* arc_cmd = app.add_subcommand("count-arc", "distinct zeros on an arc of the circle");
    PolyOptions arc_opts;
    add_poly_options(arc_cmd, arc_opts);
    std::string from_text, to_text;
    double from_angle = 0.0, to_angle = 0.0;
    std::string arc_tolerance = "1e-12";
    arc_cmd->add_option("--from", from_text, "exact endpoint: 1 or a unit Gaussian rational");
    arc_cmd->add_option("--to", to_text, "exact endpoint: 1 or a unit Gaussian rational");
    auto* from_angle_opt =
        arc_cmd->add_option("--from-angle", from_angle, "endpoint angle in radians (surrogate)");
    auto* to_angle_opt =
        arc_cmd->add_option("--to-angle", to_angle, "endpoint angle in radians (surrogate)");
    arc_cmd->add_option("--tolerance", arc_tolerance, "surrogate collision tolerance");

    // count-real
    auto* real_cmd = app.add_subcommand("count-real", "distinct real zeros in (lo, hi]");
    PolyOptions real_opts;
    add_poly_options(real_cmd, real_opts);
    std::string lo_text = "-inf", hi_text = "inf";
    real_cmd->add_option("--lo", lo_text, "lower endpoint (excluded), rational or -inf");
    real_cmd->add_option("--hi", hi_text, "upper endpoint (included), rational or inf");

    // isolate-circle
    auto* isolate_cmd = app.add_subcommand("isolate-circle", "pairwise-disjoint isolating arcs");
    PolyOptions isolate_opts;
    add_poly_options(isolate_cmd, isolate_opts);
    std::string max_width_text;
    isolate_cmd->add_option("--max-width", max_width_text,
                            "refine line intervals at most this wide");

    // salem-check
    auto* salem_cmd = app.add_subcommand("salem-check", "Salem-polynomial candidacy report");
    PolyOptions salem_opts;
    add_poly_options(salem_cmd, salem_opts);
    std::string salem_width_text = "1e-7";
    salem_cmd->add_option("--width", salem_width_text, "Salem number enclosure width");

    // scan-salem
    auto* scan_cmd = app.add_subcommand("scan-salem", "scan self-reciprocal polynomials");
    int scan_degree = 0;
    int scan_height = 0;
    bool scan_serial = false;
    scan_cmd->add_option("--degree", scan_degree, "even degree in [4, 24]")->required();
    scan_cmd->add_option("--height", scan_height, "coefficient height >= 1")->required();
    scan_cmd->add_flag("--serial", scan_serial, "use the serial reference scan");

    // transform
    auto* transform_cmd = app.add_subcommand("transform", "inspect a Cayley transform");
    PolyOptions transform_opts;
    add_poly_options(transform_cmd, transform_opts);
    std::string map_name;
    transform_cmd->add_option("--map", map_name, "mu|omega")
        ->required()
        ->check(CLI::IsMember({"mu", "omega"}));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Emitter emitter{out, json_mode};
    try {
        if (classify_cmd->parsed()) {
            PolyExpr expr = resolve_polynomial(classify_opts);
            SymmetryReport rep = classify(expr.poly);
            std::vector<std::string> lines;
            auto flag_line = [&lines](const char* name, bool v) {
                lines.push_back(std::string(name) + ": " + (v ? "yes" : "no"));
            };
            if (rep.self_conjugate)
                lines.push_back("self-conjugate: yes (epsilon " + rep.self_conjugate->to_string() + ")");
            else
                lines.push_back("self-conjugate: no");
            if (rep.self_inversive)
                lines.push_back("self-inversive: yes (epsilon " + rep.self_inversive->to_string() + ")");
            else
                lines.push_back("self-inversive: no");
            flag_line("self-adjoint", rep.self_adjoint);
            flag_line("skew-adjoint", rep.skew_adjoint);
            flag_line("self-reciprocal", rep.self_reciprocal);
            flag_line("skew-reciprocal", rep.skew_reciprocal);
            emitter.emit("classify", &expr, json::object(), to_json(rep), lines);
            return 0;
        }

        if (count_cmd->parsed()) {
            PolyExpr expr = resolve_polynomial(count_opts);
            Alg6Mode mode = paper_alg6 ? Alg6Mode::AsPrinted : Alg6Mode::Corrected;
            if (with_multiplicity && algorithm != "auto")
                throw std::invalid_argument("--with-multiplicity implies --algorithm auto");

            CountReport rep;
            if (with_multiplicity) rep = count_with_multiplicity(expr.poly, mode);
            else if (algorithm == "auto") rep = count_on_circle(expr.poly, mode);
            else if (algorithm == "1a") rep = count_general_product(expr.poly);
            else if (algorithm == "1b") rep = count_general_gcd(expr.poly);
            else if (algorithm == "3") rep = count_self_conjugate(expr.poly);
            else if (algorithm == "4") rep = count_self_adjoint(expr.poly);
            else if (algorithm == "5") rep = count_self_inversive(expr.poly);
            else rep = count_reciprocal(expr.poly, mode);

            json flags{{"algorithm", algorithm},
                       {"with_multiplicity", with_multiplicity},
                       {"paper_alg6", paper_alg6}};
            emitter.emit("count-circle", &expr, std::move(flags), to_json(rep),
                         {count_human(rep)});
            return 0;
        }

        if (arc_cmd->parsed()) {
            PolyExpr expr = resolve_polynomial(arc_opts);
            Rational tol = parse_rational(arc_tolerance);
            ArcSpec arc{resolve_arc_endpoint(from_text, from_angle, from_angle_opt->count() > 0, tol),
                        resolve_arc_endpoint(to_text, to_angle, to_angle_opt->count() > 0, tol)};
            ArcCount result = count_arc(expr.poly, arc);
            for (const auto& warning : result.warnings) err << "warning: " << warning << "\n";
            json flags{{"tolerance", tol.to_string()}};
            emitter.emit("count-arc", &expr, std::move(flags),
                         json{{"count", result.count}},
                         {"distinct zeros on the arc: " + std::to_string(result.count)});
            return 0;
        }

        if (real_cmd->parsed()) {
            PolyExpr expr = resolve_polynomial(real_opts);
            RealInterval interval{parse_extended_rational(lo_text),
                                  parse_extended_rational(hi_text)};
            int n = count_real_roots(expr.poly, interval);
            json flags{{"lo", interval.lo.to_string()}, {"hi", interval.hi.to_string()}};
            emitter.emit("count-real", &expr, std::move(flags), json{{"count", n}},
                         {"distinct real zeros in (" + interval.lo.to_string() + ", " +
                          interval.hi.to_string() + "]: " + std::to_string(n)});
            return 0;
        }

        if (isolate_cmd->parsed()) {
            PolyExpr expr = resolve_polynomial(isolate_opts);
            std::optional<Rational> max_width;
            if (!max_width_text.empty()) max_width = parse_rational(max_width_text);
            IsolationResult result = isolate_circle_zeros(expr.poly, max_width);
            std::vector<std::string> lines;
            if (result.zero_at_one) lines.push_back("zero at z=1 (point arc {1})");
            lines.push_back("isolating arcs: " + std::to_string(result.arcs.size()));
            for (const auto& arc : result.arcs)
                lines.push_back("  line (" + arc.line_interval.lo.to_string() + ", " +
                                arc.line_interval.hi.to_string() + "]  arc (" +
                                arc.circle_from.to_string() + ", " + arc.circle_to.to_string() +
                                "]");
            json flags{{"max_width", max_width ? json(max_width->to_string()) : json(nullptr)}};
            emitter.emit("isolate-circle", &expr, std::move(flags), to_json(result), lines);
            return 0;
        }

        if (salem_cmd->parsed()) {
            PolyExpr expr = resolve_polynomial(salem_opts);
            Rational width = parse_rational(salem_width_text);
            SalemReport rep = salem_check(expr.poly, width);
            std::vector<std::string> lines;
            lines.push_back(std::string("salem candidate: ") +
                            (rep.is_salem_candidate ? "yes" : "no"));
            if (!rep.reasons.empty()) {
                std::string r = "failed criteria:";
                for (const auto& reason : rep.reasons) r += " " + reason;
                lines.push_back(r);
            }
            lines.push_back("distinct zeros on the unit circle: " +
                            std::to_string(rep.circle_zero_count));
            lines.push_back(std::string("irreducibility: ") + to_string(rep.irreducibility));
            if (rep.salem_number_enclosure)
                lines.push_back("salem number in (" +
                                rep.salem_number_enclosure->lo.to_string() + ", " +
                                rep.salem_number_enclosure->hi.to_string() + "]  ~" +
                                std::to_string(rep.salem_number_enclosure->hi.value().to_double()));
            if (rep.is_small)
                lines.push_back(std::string("small (below the smallest Pisot number): ") +
                                (*rep.is_small ? "yes" : "no"));
            json flags{{"width", width.to_string()}};
            emitter.emit("salem-check", &expr, std::move(flags), to_json(rep), lines);
            return 0;
        }

        if (scan_cmd->parsed()) {
            std::mutex sink_mutex;
            long long emitted = 0;
            CandidateSink sink = [&](const Polynomial& p, const SalemReport& rep) {
                std::lock_guard<std::mutex> lock(sink_mutex);
                ++emitted;
                if (json_mode) {
                    out << scan_candidate_json(p, rep).dump() << "\n";
                } else {
                    std::string line = "candidate: " + p.to_expression_string();
                    if (rep.salem_number_enclosure)
                        line += "  salem ~" +
                                std::to_string(rep.salem_number_enclosure->hi.value().to_double());
                    if (rep.is_small && *rep.is_small) line += "  [small]";
                    line += "  [" + std::string(to_string(rep.irreducibility)) + "]";
                    out << line << "\n";
                }
            };
            ScanSummary summary = scan_serial
                                      ? scan_reciprocal_serial(scan_degree, scan_height, sink)
                                      : scan_reciprocal(scan_degree, scan_height, sink);
            json flags{{"degree", scan_degree}, {"height", scan_height}, {"serial", scan_serial}};
            emitter.emit("scan-salem", nullptr, std::move(flags), to_json(summary),
                         {"enumerated " + std::to_string(summary.enumerated) +
                          " polynomials, " + std::to_string(summary.candidates) +
                          " candidates (" + std::to_string(summary.small_candidates) +
                          " small)"});
            return 0;
        }

        if (transform_cmd->parsed()) {
            PolyExpr expr = resolve_polynomial(transform_opts);
            Polynomial q = map_name == "mu" ? transform_mu(expr.poly) : transform_omega(expr.poly);
            json coeffs = json::array();
            for (const auto& c : q.coeffs()) coeffs.push_back(c.to_string());
            json result{{"polynomial", q.to_expression_string()},
                        {"coeffs", std::move(coeffs)},
                        {"degree", q.is_zero() ? json(nullptr) : json(q.degree())}};
            json flags{{"map", map_name}};
            emitter.emit("transform", &expr, std::move(flags), std::move(result),
                         {map_name + " transform: " + q.to_expression_string()});
            return 0;
        }

        err << "error: no command given\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace circlezeros
