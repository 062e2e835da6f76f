#include <doctest.h>

#include "fixtures.hpp"
#include "mtprove/bounds.hpp"
#include "mtprove/syntax.hpp"

#include <random>

using namespace mtprove;

namespace {

MTPExpr ex(const std::string& s) { return parse_expr(s).expr; }

Interval up_to(const PiPoly& hi, bool hi_open = false) { return Interval::make(PiPoly(), hi, true, hi_open); }

Real taylor_value(Fn fn, int degree, const Real& y) {
    const Poly p = taylor_poly(fn, degree);
    Real v = 0;
    for (int j = p.degree(); j >= 0; --j) v = v * y + to_real(p.coeff(j));
    return v;
}

} // namespace

TEST_CASE("direction table") {
    CHECK(table_direction(Fn::Cos, 0) == Direction::Upper);
    CHECK(table_direction(Fn::Cos, 10) == Direction::Lower);
    CHECK(table_direction(Fn::Cos, 16) == Direction::Upper);
    CHECK(table_direction(Fn::Sin, 9) == Direction::Upper);
    CHECK(table_direction(Fn::Sin, 19) == Direction::Lower);
    CHECK(table_direction(Fn::Atan, 3) == Direction::Lower);
    CHECK(table_direction(Fn::Atan, 5) == Direction::Upper);
    CHECK_THROWS_AS(table_direction(Fn::Cos, 3), Error);
    CHECK_THROWS_AS(table_direction(Fn::Sin, 4), Error);
    CHECK_THROWS_AS(table_direction(Fn::Asin, 1), Error);
    CHECK(bound_table(23).size() == 36);
}

TEST_CASE("Taylor polynomials") {
    CHECK(taylor_poly(Fn::Sin, 3) == Poly({PiPoly(), PiPoly(Rational(1)), PiPoly(), PiPoly(Rational(-1, 6))}));
    CHECK(taylor_poly(Fn::Cos, 4).coeff(4) == PiPoly(Rational(1, 24)));
    CHECK(taylor_poly(Fn::Atan, 5).coeff(5) == PiPoly(Rational(1, 5)));
}

TEST_CASE("admissibility radius") {
    // (8 * 11/10)^2 = 77.44 < (k+3)(k+4) needs k >= 6
    const Interval iv = up_to(PiPoly(Rational(11, 10)));
    CHECK(radius_admissible(16, 8, iv));
    CHECK(radius_admissible(6, 8, iv));
    CHECK(!radius_admissible(5, 8, iv));
    CHECK(!radius_admissible(16, 8, Interval::make(PiPoly(Rational(-1)), PiPoly(Rational(1)), true, true)));
    CHECK_THROWS_AS(check_admissible(Atom::cos(8), {Fn::Cos, Direction::Upper, 4}, iv, Var::T), Error);
    CHECK_NOTHROW(check_admissible(Atom::cos(8), {Fn::Cos, Direction::Upper, 16}, iv, Var::T));
    CHECK_THROWS_AS(check_admissible(Atom::atan(Arg::Sin), {Fn::Atan, Direction::Lower, 3},
                                     up_to(PiPoly::pi() * Rational(1, 2)), Var::T),
                    Error);
    CHECK_NOTHROW(check_admissible(Atom::atan(Arg::Sin), {Fn::Atan, Direction::Lower, 3},
                                   up_to(PiPoly::pi() * Rational(1, 2), true), Var::T));
}

TEST_CASE("bounds are strict on sampled arguments") {
    std::mt19937 rng(3);
    for (const BoundRule& r : bound_table(23)) {
        const double radius = r.fn == Fn::Atan ? 1.0 : std::sqrt(double((r.degree + 3) * (r.degree + 4)));
        std::uniform_real_distribution<double> d(1e-6, radius * (1 - 1e-9));
        for (int i = 0; i < 20; ++i) {
            const Real y(d(rng));
            const Real f = r.fn == Fn::Sin ? Real(sin(y)) : r.fn == Fn::Cos ? Real(cos(y)) : Real(atan(y));
            const Real p = taylor_value(r.fn, r.degree, y);
            if (r.dir == Direction::Upper) CHECK(p > f);
            else CHECK(p < f);
        }
    }
}

TEST_CASE("first bounded polynomial") {
    const Interval iv = up_to(PiPoly(Rational(11, 10)));
    const MTPExpr h = fourier_normalize(ex("2*pi*sin(t)^2 + (pi^2+pi-8)*sin(t)^5*(sin(t) - 1/3*sin(t)^3)"
                                           " - pi*sin(t)*(sin(t) - 1/3*sin(t)^3 + 1/5*sin(t)^5) - pi*t^2"));
    const BoundResult r = apply_bounds(h, iv, Var::T,
                                       {{Atom::cos(8), {Fn::Cos, Direction::Upper, 16}},
                                        {Atom::cos(6), {Fn::Cos, Direction::Upper, 12}},
                                        {Atom::cos(4), {Fn::Cos, Direction::Lower, 10}},
                                        {Atom::cos(2), {Fn::Cos, Direction::Upper, 4}}});
    CHECK(as_poly(r.expr) == fixtures::P16());
    CHECK(r.applied.size() == 4);
    for (const auto& a : r.applied) CHECK(!a.coefficient_certificate);
}

TEST_CASE("second bounded polynomial") {
    const Interval iv = up_to(PiPoly(Rational(13, 10)));
    const MTPExpr h = fourier_normalize(ex("3*pi*sin(t) + (5*pi-12)*sin(t)^4*(sin(t) - 1/3*sin(t)^3)"
                                           " - pi*(sin(t) - 1/3*sin(t)^3 + 1/5*sin(t)^5) - 2*pi*t"));
    const BoundResult r = apply_bounds(h, iv, Var::T,
                                       {{Atom::sin(7), {Fn::Sin, Direction::Lower, 19}},
                                        {Atom::sin(5), {Fn::Sin, Direction::Lower, 15}},
                                        {Atom::sin(3), {Fn::Sin, Direction::Upper, 9}},
                                        {Atom::sin(1), {Fn::Sin, Direction::Lower, 7}}});
    CHECK(as_poly(r.expr) == fixtures::P19());
}

TEST_CASE("bound application errors") {
    const Interval iv = up_to(PiPoly(Rational(1)));
    // wrong direction for a positive coefficient of cos(2t)
    CHECK_THROWS_AS(apply_bounds(ex("cos(2*t) + 3"), iv, Var::T, {{Atom::cos(2), {Fn::Cos, Direction::Upper, 4}}}),
                    Error);
    CHECK_NOTHROW(apply_bounds(ex("cos(2*t) + 3"), iv, Var::T, {{Atom::cos(2), {Fn::Cos, Direction::Lower, 6}}}));
    CHECK_THROWS_AS(apply_bounds(ex("cos(t)^2"), iv, Var::T, {{Atom::cos(1), {Fn::Cos, Direction::Lower, 2}}}), Error);
    CHECK_THROWS_AS(apply_bounds(ex("sin(t)"), iv, Var::T, {{Atom::cos(1), {Fn::Cos, Direction::Lower, 2}}}), Error);
    // coefficient t - 1/2 changes sign on (0, 1]
    CHECK_THROWS_AS(apply_bounds(ex("(t - 1/2)*sin(t)"), iv, Var::T,
                                 {{Atom::sin(1), {Fn::Sin, Direction::Lower, 3}},
                                  {Atom::sin(1), {Fn::Sin, Direction::Upper, 1}}}),
                    Error);
}

TEST_CASE("non-constant coefficients carry a positivity certificate") {
    const Interval iv = up_to(PiPoly(Rational(1)));
    const BoundResult r =
        apply_bounds(ex("(t + 1)*sin(t)"), iv, Var::T, {{Atom::sin(1), {Fn::Sin, Direction::Lower, 3}}});
    REQUIRE(r.applied.size() == 1);
    CHECK(r.applied[0].coefficient_sign == 1);
    REQUIRE(r.applied[0].coefficient_certificate);
    CHECK(check_positivity(*r.applied[0].coefficient_certificate));
    CHECK(r.expr == ex("(t + 1)*(t - 1/6*t^3)"));
}

TEST_CASE("secant bound") {
    CHECK(secant_endpoints_agree());
    const Interval iv = up_to(PiPoly::pi() * Rational(1, 2) - PiPoly(Rational(11, 10)), true);
    const SecantResult r = secant_bound_arctan_cos(ex("2*cos(t)*atan(cos(t)) + t"), iv);
    CHECK(r.coefficient == ex("2*cos(t)"));
    CHECK(r.expr == ex("2*cos(t)*(pi/4 - t/2) + t"));
    CHECK_THROWS_AS(secant_bound_arctan_cos(ex("atan(cos(t))^2"), iv), Error);
    for (double d : {0.1, 0.4, 0.8, 1.2, 1.5}) {
        const Real t(d);
        CHECK(atan(cos(t)) > eval(secant_line(), t));
        CHECK(eval(secant_concavity_expr(), t) > 0);
    }
}
