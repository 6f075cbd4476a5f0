#include "circlezeros/parse.hpp"

#include <cctype>

namespace circlezeros {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    size_t position() {
        skip_ws();
        return pos_;
    }

    [[noreturn]] void fail(const std::string& what) { throw parse_error(what, position()); }

    Integer parse_uint() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a digit");
        return Integer(text_.substr(start, pos_ - start));
    }

    // uint ['/' uint]
    Rational parse_rational_body() {
        Integer num = parse_uint();
        if (consume('/')) {
            size_t den_pos = position();
            Integer den = parse_uint();
            if (sgn(den) == 0) throw parse_error("zero denominator", den_pos);
            return Rational(num, den);
        }
        return Rational(num);
    }

    // 'i' | rational ['i']
    GaussianRational parse_simple() {
        if (consume('i')) return GaussianRational::i();
        Rational r = parse_rational_body();
        if (consume('i')) return {Rational(0), r};
        return {r};
    }

    // ['+'|'-'] simple (('+'|'-') simple)*
    GaussianRational parse_gaussian_sum() {
        GaussianRational acc;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (consume('+')) sign = 1;
            else if (consume('-')) sign = -1;
            else if (!first) break;
            if (first && at_end()) fail("expected a number");
            GaussianRational v = parse_simple();
            acc += sign < 0 ? -v : v;
            first = false;
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') break;
        }
        return acc;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

struct Term {
    GaussianRational coeff;
    int power = 0;
};

Term parse_term(Scanner& sc) {
    Term t;
    t.coeff = GaussianRational(1);
    bool have_coeff = false;

    char c = sc.peek();
    if (c == '(') {
        sc.consume('(');
        t.coeff = sc.parse_gaussian_sum();
        if (!sc.consume(')')) sc.fail("expected ')'");
        have_coeff = true;
    } else if (c == 'i') {
        sc.consume('i');
        t.coeff = GaussianRational::i();
        have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
        Rational r = sc.parse_rational_body();
        if (sc.consume('i')) t.coeff = GaussianRational(Rational(0), r);
        else t.coeff = GaussianRational(r);
        have_coeff = true;
    } else if (c != 'z') {
        sc.fail("expected a term");
    }

    bool starred = have_coeff && sc.consume('*');
    if (sc.peek() == 'z') {
        sc.consume('z');
        t.power = 1;
        if (sc.consume('^')) {
            Integer e = sc.parse_uint();
            if (e > 10000) sc.fail("exponent too large");
            t.power = static_cast<int>(e.get_si());
        }
    } else if (starred) {
        sc.fail("expected 'z' after '*'");
    } else if (!have_coeff) {
        sc.fail("expected a term");
    }
    return t;
}

Polynomial parse_expression(const std::string& text) {
    Scanner sc(text);
    if (sc.at_end()) sc.fail("empty polynomial expression");

    std::vector<GaussianRational> coeffs;
    auto add = [&coeffs](const Term& t) {
        if (coeffs.size() <= static_cast<size_t>(t.power))
            coeffs.resize(static_cast<size_t>(t.power) + 1);
        coeffs[static_cast<size_t>(t.power)] += t.coeff;
    };

    bool first = true;
    for (;;) {
        int sign = 1;
        if (sc.consume('-')) sign = -1;
        else if (sc.consume('+')) sign = 1;
        else if (!first) sc.fail("expected '+' or '-'");
        if (sc.at_end()) sc.fail("expected a term");
        Term t = parse_term(sc);
        if (sign < 0) t.coeff = -t.coeff;
        add(t);
        first = false;
        if (sc.at_end()) break;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

PolyExpr parse_polynomial(const std::string& text) {
    return {text, parse_expression(text), PolyInputForm::Expression};
}

PolyExpr parse_coeff_list(const std::string& text) {
    std::vector<GaussianRational> coeffs;
    size_t start = 0;
    bool any = false;
    for (size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos != text.size() && text[pos] != ',') continue;
        std::string entry = text.substr(start, pos - start);
        Scanner sc(entry);
        if (sc.at_end()) throw parse_error("empty coefficient", start);
        try {
            coeffs.push_back(sc.parse_gaussian_sum());
            if (!sc.at_end()) sc.fail("trailing characters in coefficient");
        } catch (const parse_error& e) {
            throw parse_error("bad coefficient entry", start + e.offset());
        }
        any = true;
        start = pos + 1;
    }
    if (!any) throw parse_error("empty coefficient list", 0);
    return {text, Polynomial(std::move(coeffs)), PolyInputForm::CoeffList};
}

GaussianRational parse_gaussian(const std::string& text) {
    Scanner sc(text);
    if (sc.at_end()) throw parse_error("empty number", 0);
    GaussianRational v = sc.parse_gaussian_sum();
    if (!sc.at_end()) sc.fail("trailing characters");
    return v;
}

Rational parse_rational(const std::string& text) {
    // Try the decimal/scientific form first: [-]digits[.digits][e[+-]digits]
    size_t pos = 0;
    auto fail = [&text](const std::string& what, size_t at) -> parse_error {
        return parse_error(what + " in '" + text + "'", at);
    };

    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    size_t begin = pos;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    std::string int_digits, frac_digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        int_digits += text[pos++];
    if (pos < text.size() && text[pos] == '/') {
        // plain fraction a/b
        ++pos;
        std::string den_digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            den_digits += text[pos++];
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (int_digits.empty() || den_digits.empty() || pos != text.size())
            throw fail("malformed rational", begin);
        Integer den(den_digits);
        if (sgn(den) == 0) throw fail("zero denominator", begin);
        Rational r{Integer(int_digits), den};
        return sign < 0 ? -r : r;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            frac_digits += text[pos++];
    }
    if (int_digits.empty() && frac_digits.empty()) throw fail("malformed number", begin);
    long exp10 = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        int esign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') esign = -1;
            ++pos;
        }
        std::string exp_digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            exp_digits += text[pos++];
        if (exp_digits.empty() || exp_digits.size() > 6) throw fail("malformed exponent", pos);
        exp10 = esign * std::stol(exp_digits);
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw fail("trailing characters", pos);

    Integer mantissa(int_digits.empty() ? "0" : int_digits);
    for (char d : frac_digits) mantissa = mantissa * 10 + (d - '0');
    long shift = exp10 - static_cast<long>(frac_digits.size());
    Integer num = mantissa, den = 1;
    Integer ten(10);
    if (shift >= 0) {
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
        num *= scale;
    } else {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
    }
    Rational r(num, den);
    return sign < 0 ? -r : r;
}

ExtendedRational parse_extended_rational(const std::string& text) {
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "inf" || trimmed == "+inf") return ExtendedRational::pos_infinity();
    if (trimmed == "-inf") return ExtendedRational::neg_infinity();
    return ExtendedRational(parse_rational(text));
}

}  // namespace circlezeros
