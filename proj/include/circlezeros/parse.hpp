#pragma once

/*
 * parse.hpp
 * ---------
 * Text front-end: polynomial expressions in z, coefficient lists, and the
 * scalar forms used by CLI options.
 *
 * Expression grammar (whitespace-insensitive):
 *
 *   poly    := ['+'|'-'] term (('+'|'-') term)*
 *   term    := coef ['*'] [var] | var
 *   var     := 'z' ['^' uint]
 *   coef    := '(' gaussian ')' | simple
 *   simple  := 'i' | rational ['i']
 *   rational:= uint ['/' uint]
 *   gaussian:= ['+'|'-'] simple (('+'|'-') simple)*
 *
 * Scalar parsing also accepts decimal and scientific forms ("0.25",
 * "1e-7"), converted exactly to rationals.
 */

#include <cstddef>
#include <string>

#include "circlezeros/numbers.hpp"
#include "circlezeros/polynomial.hpp"

namespace circlezeros {

class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

enum class PolyInputForm { Expression, CoeffList };

struct PolyExpr {
    std::string source;
    Polynomial poly;
    PolyInputForm form = PolyInputForm::Expression;
};

PolyExpr parse_polynomial(const std::string& text);
// Comma-separated Gaussian rationals, ascending degree ("1,0,1/2+1/2i").
PolyExpr parse_coeff_list(const std::string& text);

GaussianRational parse_gaussian(const std::string& text);

// "7/2", "-3", "0.25", "1e-7" -- all exact.
Rational parse_rational(const std::string& text);
// parse_rational plus "inf" / "+inf" / "-inf".
ExtendedRational parse_extended_rational(const std::string& text);

}  // namespace circlezeros
