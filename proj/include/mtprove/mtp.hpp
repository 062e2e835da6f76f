#pragma once

// Mixed trigonometric polynomial expressions: sparse sums of
// c * pi^a * v^b * prod(atom^e) with rational c and integer exponents.

#include "mtprove/coeff.hpp"
#include "mtprove/numeric.hpp"
#include "mtprove/poly.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace mtprove {

// Name of the free variable: x before substitution, t after, z after t^2 -> z.
enum class Var { X, T, Z };
char var_name(Var v);
Var var_from_name(char c);

enum class Fn { Sin, Cos, Atan, Asin };
// Inner argument of an atan atom.
enum class Arg { Var, Sin, Cos };

struct Atom {
    Fn fn = Fn::Sin;
    int mult = 1;  // angle multiplier of sin/cos; 1 otherwise
    Arg arg = Arg::Var;

    static Atom sin(int k = 1) { return {Fn::Sin, k, Arg::Var}; }
    static Atom cos(int k = 1) { return {Fn::Cos, k, Arg::Var}; }
    static Atom atan(Arg a = Arg::Var) { return {Fn::Atan, 1, a}; }
    static Atom asin() { return {Fn::Asin, 1, Arg::Var}; }

    auto operator<=>(const Atom&) const = default;
};

std::string format(const Atom& a, Var v);

struct Monomial {
    int pi = 0;
    int var = 0;
    std::map<Atom, int> atoms;  // nonzero exponents only

    auto operator<=>(const Monomial&) const = default;
};

class MTPExpr {
public:
    MTPExpr() = default;
    MTPExpr(const Rational& c);
    MTPExpr(int c) : MTPExpr(Rational(c)) {}

    static MTPExpr pi() { return term(1, Monomial{1, 0, {}}); }
    static MTPExpr variable() { return term(1, Monomial{0, 1, {}}); }
    static MTPExpr atom(const Atom& a, int e = 1) { return term(1, Monomial{0, 0, {{a, e}}}); }
    static MTPExpr term(const Rational& c, Monomial m);
    static MTPExpr from_pipoly(const PiPoly& p);
    static MTPExpr from_poly(const Poly& p);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(Fn f) const;
    std::set<Atom> atoms() const;

    MTPExpr operator-() const;
    MTPExpr& operator+=(const MTPExpr& o);
    MTPExpr& operator-=(const MTPExpr& o);
    friend MTPExpr operator+(MTPExpr a, const MTPExpr& b) { return a += b; }
    friend MTPExpr operator-(MTPExpr a, const MTPExpr& b) { return a -= b; }
    friend MTPExpr operator*(const MTPExpr& a, const MTPExpr& b);
    friend bool operator==(const MTPExpr&, const MTPExpr&) = default;

    // Negative exponents are allowed only for a single-term base.
    MTPExpr pow(int e) const;
    // Exact division by a single-term expression.
    MTPExpr divide(const MTPExpr& d) const;

private:
    std::map<Monomial, Rational> terms_;
};

// Value as an element of Q[pi], when the expression has no variable, no
// atoms and no negative pi powers.
std::optional<PiPoly> as_pipoly(const MTPExpr& e);
// Value as a polynomial in the variable, when there are no atoms and no
// negative exponents.
std::optional<Poly> as_poly(const MTPExpr& e);

// r(t) + sum_k p_k(t) cos(kt) + sum_k q_k(t) sin(kt); keys ascending, k >= 1.
struct FourierForm {
    Poly constant;
    std::map<int, Poly> cos;
    std::map<int, Poly> sin;

    bool is_zero() const { return constant.is_zero() && cos.empty() && sin.empty(); }
    friend bool operator==(const FourierForm&, const FourierForm&) = default;
};

// Product-to-sum reduction of every sin/cos product. Throws on atan or asin
// atoms and on negative exponents.
FourierForm to_fourier_form(const MTPExpr& e);
MTPExpr from_fourier(const FourierForm& f);
inline MTPExpr fourier_normalize(const MTPExpr& e) { return from_fourier(to_fourier_form(e)); }

// t -> pi/2 - t. Throws on multiple-angle atoms, asin, atan of the bare
// variable and negative variable powers.
MTPExpr reflect(const MTPExpr& e);
Interval reflect(const Interval& iv);

// x -> sin t, asin(x) -> t, atan(x) -> atan(sin t).
MTPExpr substitute_sin(const MTPExpr& e);
// Maps endpoints 0, 1/2, 1 to 0, pi/6, pi/2; other endpoints are rejected.
Interval substitute_sin(const Interval& iv);

// Variable strictly positive on the interval.
bool variable_positive(const Interval& iv, const Precision& prec = {});
// Interval inside (0, pi/2) with open ends where it touches 0 or pi/2.
bool in_open_quadrant(const Interval& iv, const Precision& prec = {});
// Single term with positive coefficient whose factors are each positive on
// the interval: pi, the variable, sin t, cos t, atan of the variable,
// sin t or cos t, and asin of the variable.
bool positive_by_pattern(const MTPExpr& e, const Interval& iv, Var v, const Precision& prec = {});

Real eval(const MTPExpr& e, const Real& at);

// Canonical text, e.g. "2*pi*sin(t)^2 - pi*t^2".
std::string format(const MTPExpr& e, Var v);

} // namespace mtprove
