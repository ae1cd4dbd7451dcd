#pragma once

// Surface syntax for free-algebra polynomials.
//
//   expr   := "-"? term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" nat)?
//   atom   := rational | var | "(" expr ")" | "[" expr ("," expr)+ "]"
//           | "o(" expr "," expr ")" | "S" nat "(" expr ("," expr)* ")"
//           | "ad(" expr "," expr "," nat ")"
//   var    := "x" nat | "x" | "y"        (x = x1, y = x2)
//   rational := int ("/" posint)?
//
// [a, b, c] is left-normed, o(a, b) = ab + ba, S_k needs exactly k
// arguments and ad(f, g, m) = [g, f, ..., f] with m copies of f.

#include "weakid/freealg.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weakid::expr {

using freealg::NcPoly;

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(Position pos, const std::string& msg);
    Position position() const noexcept { return pos_; }
    /// The message without the position prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Position pos_;
    std::string detail_;
};

struct Expr {
    enum class Kind { Number, Var, Neg, Sum, Diff, Product, Power, Bracket, Circle, Standard, Ad };

    Kind kind = Kind::Number;
    exactla::Rational number;  // Number
    freealg::Letter var = 0;   // Var
    unsigned nat = 0;          // Power exponent, Standard arity, Ad count
    std::vector<Expr> args;
    Position pos;
};

/// Throws ParseError.
Expr parse(std::string_view src);
NcPoly elaborate(const Expr& e);
/// elaborate(parse(src))
NcPoly parse_poly(std::string_view src);

} // namespace weakid::expr
