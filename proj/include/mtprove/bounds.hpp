#pragma once

// One-sided Taylor bounds for sin, cos and atan, the secant bound for
// atan(cos t), and their sign-correct application inside an expression.

#include "mtprove/mtp.hpp"

#include <optional>
#include <vector>

namespace mtprove {

enum class Direction { Lower, Upper };
std::string to_string(Direction d);
Direction direction_from_string(const std::string& s);
std::string to_string(Fn f);
Fn fn_from_string(const std::string& s);

struct BoundRule {
    Fn fn = Fn::Cos;
    Direction dir = Direction::Upper;
    int degree = 0;
    friend bool operator==(const BoundRule&, const BoundRule&) = default;
};

// cos: upper for k = 0 mod 4, lower for k = 2 mod 4.
// sin and atan: upper for k = 1 mod 4, lower for k = 3 mod 4.
// Throws on parity mismatch or an unsupported function.
Direction table_direction(Fn fn, int degree);
std::vector<BoundRule> bound_table(int max_degree = 23);

// Maclaurin polynomial in y with rational coefficients.
Poly taylor_poly(Fn fn, int degree);

// m * sup(iv) < sqrt((k+3)(k+4)) decided exactly by squaring, together with
// inf(iv) >= 0 (open at 0).
bool radius_admissible(int degree, int mult, const Interval& iv, const Precision& prec = {});

// Throws Error naming the violated condition.
void check_admissible(const Atom& atom, const BoundRule& rule, const Interval& iv, Var v,
                      const Precision& prec = {});

struct BoundAssignment {
    Atom atom;
    BoundRule rule;
    friend bool operator==(const BoundAssignment&, const BoundAssignment&) = default;
};

// One replaced occurrence group: the terms sharing the bounded atom and the
// same remaining atoms.
struct AppliedBound {
    Atom atom;
    std::map<Atom, int> rest;
    BoundRule rule;
    Poly coefficient;  // polynomial in the variable multiplying atom * rest
    int coefficient_sign = 0;
    std::optional<PositivityCertificate> coefficient_certificate;  // for non-constant coefficients
    friend bool operator==(const AppliedBound&, const AppliedBound&) = default;
};

struct BoundResult {
    MTPExpr expr;
    std::vector<AppliedBound> applied;
};

// Replaces each assigned atom by a Taylor polynomial of the direction
// matching the sign of its coefficient, so that e > result on iv.
BoundResult apply_bounds(const MTPExpr& e, const Interval& iv, Var v, const std::vector<BoundAssignment>& assignment,
                         const Precision& prec = {});

// pi/4 - t/2
MTPExpr secant_line();
// 3 cos t - cos^3 t, positive on (0, pi/2) iff atan(cos t) is concave there.
MTPExpr secant_concavity_expr();
Interval secant_concavity_interval();
// atan(cos 0) = pi/4 and atan(cos pi/2) = 0 agree with the line.
bool secant_endpoints_agree();

struct SecantResult {
    MTPExpr expr;         // e with atan(cos t) replaced by the line
    MTPExpr coefficient;  // multiplier of atan(cos t); must be positive on iv
};

// Throws when iv is not inside [0, pi/2] or atan(cos t) occurs nonlinearly.
SecantResult secant_bound_arctan_cos(const MTPExpr& e, const Interval& iv, const Precision& prec = {});

} // namespace mtprove
