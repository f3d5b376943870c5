#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/polynomial.hpp"

namespace weyl {

// AST for the operator-expression language:
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := base ("^" exponent)?
//   base     := "X" | "P" | "hbar" | "i" | rational | "(" expr ")"
//             | "[" expr "," expr "]" | "{" expr "," expr "}"
//             | "Dx(" expr ")" | "Dp(" expr ")" | "-" factor
//   rational := int ("/" uint)?
// Exponents are non-negative integer literals, except that hbar admits a
// negative one so every Laurent coefficient stays printable and re-parseable.
struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
    enum class Kind {
        Literal,
        SymX,
        SymP,
        SymHbar,
        ImagUnit,
        Neg,
        Add,
        Sub,
        Mul,
        Pow,
        Comm,
        AntiComm,
        DerivX,
        DerivP,
    };

    Kind kind;
    GaussianRational literal;  // Kind::Literal
    long exponent = 0;         // Kind::Pow; negative only over SymHbar
    ExprPtr lhs;
    ExprPtr rhs;

    explicit ExprNode(Kind k) : kind(k) {}
};

struct ParseError : Error {
    enum class Kind { Syntax, NonIntegerExponent, UnbalancedDelimiter };

    Kind kind;
    std::size_t position;                // byte offset into the input
    std::vector<std::string> expected;   // token spellings admissible here

    ParseError(Kind k, std::size_t pos, const std::string& message,
               std::vector<std::string> expected_tokens = {});
};

ExprPtr parse(std::string_view text);

WeylPolynomial eval(const ExprNode& ast);

// Deterministic canonical text: terms sorted by (xpow, ppow) descending,
// hbar powers descending within a term. parse(format(p)) evaluates back to p.
std::string format(const WeylPolynomial& p);

// Convenience: parse then evaluate.
WeylPolynomial parse_polynomial(std::string_view text);

}  // namespace weyl
