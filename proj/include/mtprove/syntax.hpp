#pragma once

// Text front end: expressions, goal files and proof scripts.
//
// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := '-' unary | power
// power   := primary ('^' '-'? integer)?
// primary := number | 'pi' | 'x' | 't' | 'z' | fn '(' expr ')' | '(' expr ')'
// fn      := 'sin' | 'cos' | 'atan' | 'asin'
//
// Decimal literals are exact: 1.1 is 11/10.

#include "mtprove/prover.hpp"

#include <optional>
#include <string>

namespace mtprove {

struct ParsedExpr {
    MTPExpr expr;
    std::optional<Var> var;  // absent when no variable occurs
};

ParsedExpr parse_expr(const std::string& text);
// Element of Q[pi] such as "pi/2 - 11/10".
PiPoly parse_constant(const std::string& text);
// Exact decimal or fraction such as "1.1" or "-3/4".
Rational parse_number(const std::string& text);

// "<expr> > 0 on (<lo>, <hi>]"; brackets set endpoint strictness.
Goal parse_goal(const std::string& text);

// Line-oriented proof script; see the README for the directive list.
Script parse_script(const std::string& text);

std::string read_file(const std::string& path);

} // namespace mtprove
