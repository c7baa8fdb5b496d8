#ifndef UQP_EXPR_HPP
#define UQP_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "uqp/errors.hpp"
#include "uqp/presentation.hpp"
#include "uqp/ratfunc.hpp"

namespace uqp {

/// Parse tree over integer literals, q, generator names, + - * ^ ( ) with
/// integer exponents. Precedence: ^ > * > unary minus > binary +/-;
/// * is left-associative; factors are only combined with an explicit *.
struct ExprAst {
    enum class Kind { Number, Q, Ident, Neg, Add, Sub, Mul, Pow };
    Kind kind;
    BigRat number;            // Number
    std::string ident;        // Ident
    long exponent = 0;        // Pow
    std::vector<ExprAst> sub; // operands

    std::string str() const;
};

/// Throws SyntaxError with byte offset and expected-token set.
ExprAst parse_expr(const std::string& text);

/// Evaluates a purely scalar expression (no identifiers).
RatFunc eval_scalar(const ExprAst& e);

/// Evaluates over a presentation; identifiers resolve to generators first,
/// then to named elements. Negative powers require localized generators.
AlgebraElement eval_element(const ExprAst& e, const Presentation& p);

} // namespace uqp

#endif
