#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ratinterp/ratfun.hpp"

namespace ratinterp {

// Expression language for the CLI: rational arithmetic over named symbols,
// integer (Laurent) powers, and the builtin poch(a, q, n).
// Precedence: ^  >  unary -  >  * /  >  + -.
struct ExprNode;
using ExpressionAst = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow, Poch };
    Kind kind;
    Rational number;     // Number
    std::string symbol;  // Symbol
    int exponent = 0;    // Pow
    std::vector<ExpressionAst> args;
};

ExpressionAst parse_expression(const std::string& text);

// print is a right inverse of parse: parse(print(ast)) == ast node for node.
std::string print_expression(const ExpressionAst& ast);
bool ast_equal(const ExpressionAst& a, const ExpressionAst& b);

// Names map to variables: a single letter x/c/b followed by digits is the
// indexed family member (x1, c2, b3); anything else is a scalar symbol.
Variable symbol_to_variable(const std::string& name);

// Evaluate the AST in the rational-function field. Throws UnknownSymbol for
// calls other than poch, SyntaxError-free by construction otherwise.
RatFun ast_to_ratfun(const ExpressionAst& ast);

} // namespace ratinterp
