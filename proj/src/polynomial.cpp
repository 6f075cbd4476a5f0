#include "circlezeros/polynomial.hpp"

#include <algorithm>

#include "gaussian_int.hpp"

namespace circlezeros {

namespace {

const GaussianRational kZero{};

// Clears denominators and strips content: an integer-primitive Gaussian
// polynomial with the same zeros.
detail::GPoly to_gauss_primitive(const Polynomial& p) {
    Integer common_den = 1;
    for (const auto& c : p.coeffs()) {
        common_den = lcm(common_den, c.re().denominator());
        common_den = lcm(common_den, c.im().denominator());
    }
    detail::GPoly g;
    g.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rational re = c.re() * Rational(common_den);
        Rational im = c.im() * Rational(common_den);
        g.push_back({re.numerator(), im.numerator()});
    }
    return detail::gp_primitive(std::move(g));
}

Polynomial from_gauss(const detail::GPoly& g) {
    std::vector<GaussianRational> coeffs;
    coeffs.reserve(g.size());
    for (const auto& c : g) coeffs.emplace_back(Rational(c.re), Rational(c.im));
    return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial::Polynomial(std::vector<GaussianRational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(GaussianRational c) {
    return Polynomial(std::vector<GaussianRational>{std::move(c)});
}

Polynomial Polynomial::monomial(int degree, GaussianRational lead) {
    if (degree < 0) throw std::invalid_argument("monomial of negative degree");
    std::vector<GaussianRational> c(static_cast<size_t>(degree) + 1);
    c.back() = std::move(lead);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_real(std::vector<Rational> ascending_coeffs) {
    std::vector<GaussianRational> c;
    c.reserve(ascending_coeffs.size());
    for (auto& r : ascending_coeffs) c.emplace_back(std::move(r));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_int(const std::vector<long>& ascending_coeffs) {
    std::vector<GaussianRational> c;
    c.reserve(ascending_coeffs.size());
    for (long v : ascending_coeffs) c.emplace_back(Rational(v));
    return Polynomial(std::move(c));
}

int Polynomial::degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<int>(coeffs_.size()) - 1;
}

const GaussianRational& Polynomial::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

const GaussianRational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

GaussianRational Polynomial::evaluate(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<GaussianRational> d;
    d.reserve(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        d.push_back(GaussianRational(Rational(static_cast<long>(k))) * coeffs_[k]);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (coeffs_.empty()) throw std::domain_error("monic form of the zero polynomial");
    if (coeffs_.back().is_one()) return *this;
    GaussianRational inv = coeffs_.back().inverse();
    return inv * *this;
}

bool Polynomial::is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const GaussianRational& c) { return c.is_real(); });
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<GaussianRational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(prod));
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial();
    Polynomial r = p;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Polynomial conj_poly(const Polynomial& p) {
    std::vector<GaussianRational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(x.conjugate());
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero() || a.degree() < b.degree()) return {Polynomial(), a};

    const int db = b.degree();
    const GaussianRational lead_inv = b.leading().inverse();
    std::vector<GaussianRational> rem = a.coeffs();
    std::vector<GaussianRational> quot(static_cast<size_t>(a.degree() - db) + 1);

    for (int k = a.degree(); k >= db; --k) {
        GaussianRational& top = rem[static_cast<size_t>(k)];
        if (top.is_zero()) continue;
        GaussianRational c = top * lead_inv;
        quot[static_cast<size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k - db + j)] -= c * b.coeff(j);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(GaussianRational(1));

    detail::GPoly f = to_gauss_primitive(a);
    detail::GPoly g = to_gauss_primitive(b);
    if (detail::gp_degree(f) < detail::gp_degree(g)) std::swap(f, g);

    while (true) {
        if (g.empty()) return from_gauss(f).monic();
        if (detail::gp_degree(g) == 0) return Polynomial::constant(GaussianRational(1));
        detail::GPoly r = detail::gp_prem(f, g);
        f = std::move(g);
        g = detail::gp_primitive(std::move(r));
    }
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
    if (p.is_constant()) return Polynomial::constant(GaussianRational(1));
    Polynomial g = gcd(p, p.derivative());
    auto [q, r] = divrem(p, g);
    if (!r.is_zero()) throw internal_error("gcd(p, p') does not divide p");
    return q.monic();
}

SquareFreeDecomposition squarefree_decompose(const Polynomial& p) {
    if (p.is_zero() || p.is_constant())
        throw std::domain_error("square-free decomposition needs degree >= 1");

    SquareFreeDecomposition out;
    Polynomial g = gcd(p, p.derivative());
    if (g.is_constant()) {
        out.parts.push_back({p.monic(), 1});
        return out;
    }

    // Yun's recurrence: at step i, gcd(c, d) is the product of the factors
    // of multiplicity exactly i.
    Polynomial c = divrem(p, g).first;
    Polynomial d = divrem(p.derivative(), g).first - c.derivative();
    for (int i = 1; !c.is_constant(); ++i) {
        Polynomial f = gcd(c, d);
        if (!f.is_constant()) out.parts.push_back({f.monic(), i});
        c = divrem(c, f).first;
        d = divrem(d, f).first - c.derivative();
    }
    return out;
}

Polynomial even_part_substitute(const Polynomial& p) {
    if (p.is_zero()) return p;
    for (int k = 1; k <= p.degree(); k += 2)
        if (!p.coeff(k).is_zero())
            throw std::domain_error("polynomial has a nonzero odd coefficient");
    std::vector<GaussianRational> half;
    half.reserve(static_cast<size_t>(p.degree()) / 2 + 1);
    for (int k = 0; k <= p.degree(); k += 2) half.push_back(p.coeff(k));
    return Polynomial(std::move(half));
}

std::string Polynomial::to_expression_string() const {
    if (coeffs_.empty()) return "0";

    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const GaussianRational& c = coeff(k);
        if (c.is_zero()) continue;

        std::string var;
        if (k == 1) var = "z";
        else if (k > 1) var = "z^" + std::to_string(k);

        std::string term;
        if (k == 0) {
            term = c.to_string();
        } else if (c.is_one()) {
            term = var;
        } else if (c == GaussianRational(-1)) {
            term = "-" + var;
        } else if (c.is_real() || c.re().is_zero()) {
            term = c.to_string() + var;
        } else {
            term = "(" + c.to_string() + ")" + var;
        }

        if (out.empty()) out = term;
        else if (term.front() == '-') out += term;
        else out += "+" + term;
    }
    return out;
}

std::string Polynomial::to_coeff_list_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ",";
        out += coeffs_[k].to_string();
    }
    return out;
}

}  // namespace circlezeros
