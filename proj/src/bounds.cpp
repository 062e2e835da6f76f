#include "mtprove/bounds.hpp"

#include <algorithm>

namespace mtprove {

std::string to_string(Direction d) { return d == Direction::Lower ? "lower" : "upper"; }

Direction direction_from_string(const std::string& s) {
    if (s == "lower") return Direction::Lower;
    if (s == "upper") return Direction::Upper;
    throw Error("direction must be lower or upper, got '" + s + "'");
}

std::string to_string(Fn f) {
    switch (f) {
    case Fn::Sin: return "sin";
    case Fn::Cos: return "cos";
    case Fn::Atan: return "atan";
    case Fn::Asin: return "asin";
    }
    return "?";
}

Fn fn_from_string(const std::string& s) {
    if (s == "sin") return Fn::Sin;
    if (s == "cos") return Fn::Cos;
    if (s == "atan") return Fn::Atan;
    if (s == "asin") return Fn::Asin;
    throw Error("unknown function '" + s + "'");
}

Direction table_direction(Fn fn, int degree) {
    if (degree < 0) throw Error("negative bound degree");
    switch (fn) {
    case Fn::Cos:
        if (degree % 2) throw Error("cos bounds have even degree, got " + std::to_string(degree));
        return degree % 4 == 0 ? Direction::Upper : Direction::Lower;
    case Fn::Sin:
    case Fn::Atan:
        if (degree % 2 == 0)
            throw Error(to_string(fn) + " bounds have odd degree, got " + std::to_string(degree));
        return degree % 4 == 1 ? Direction::Upper : Direction::Lower;
    case Fn::Asin: break;
    }
    throw Error("no Taylor bounds for asin");
}

std::vector<BoundRule> bound_table(int max_degree) {
    std::vector<BoundRule> t;
    for (Fn fn : {Fn::Sin, Fn::Cos, Fn::Atan})
        for (int k = fn == Fn::Cos ? 0 : 1; k <= max_degree; k += 2) t.push_back({fn, table_direction(fn, k), k});
    return t;
}

Poly taylor_poly(Fn fn, int degree) {
    table_direction(fn, degree);
    std::vector<PiPoly> c(static_cast<std::size_t>(degree) + 1);
    Integer fact = 1;
    for (int i = 0; i <= degree; ++i) {
        if (i > 0) fact *= i;
        const int sign = (i / 2) % 2 ? -1 : 1;
        if (fn == Fn::Cos && i % 2 == 0) c[static_cast<std::size_t>(i)] = PiPoly(Rational(Integer(sign), fact));
        if (fn == Fn::Sin && i % 2 == 1) c[static_cast<std::size_t>(i)] = PiPoly(Rational(Integer(sign), fact));
        if (fn == Fn::Atan && i % 2 == 1) c[static_cast<std::size_t>(i)] = PiPoly(Rational(sign, i));
    }
    return Poly(c);
}

bool radius_admissible(int degree, int mult, const Interval& iv, const Precision& prec) {
    if (!variable_positive(iv, prec)) return false;
    const PiPoly sup = iv.hi * Rational(mult);
    return pipoly_sign(PiPoly(Rational((degree + 3) * (degree + 4))) - sup * sup, prec) > 0;
}

void check_admissible(const Atom& atom, const BoundRule& rule, const Interval& iv, Var v, const Precision& prec) {
    if (rule.fn != atom.fn) throw Error("a " + to_string(rule.fn) + " bound cannot replace " + format(atom, v));
    if (table_direction(rule.fn, rule.degree) != rule.dir)
        throw Error(to_string(rule.fn) + " bound of degree " + std::to_string(rule.degree) + " is not a " +
                    to_string(rule.dir) + " bound");
    switch (atom.fn) {
    case Fn::Sin:
    case Fn::Cos:
        if (!radius_admissible(rule.degree, atom.mult, iv, prec))
            throw Error("argument of " + format(atom, v) + " leaves the validity range (0, sqrt(" +
                        std::to_string((rule.degree + 3) * (rule.degree + 4)) + ")) of the degree " +
                        std::to_string(rule.degree) + " bound");
        return;
    case Fn::Atan:
        if (atom.arg == Arg::Var) {
            const int s = pipoly_sign(PiPoly(1) - iv.hi, prec);
            if (variable_positive(iv, prec) && (s > 0 || (s == 0 && iv.hi_open))) return;
        } else if (v == Var::T && in_open_quadrant(iv, prec)) {
            return;
        }
        throw Error("argument of " + format(atom, v) + " is not inside (0, 1) on the interval");
    case Fn::Asin: break;
    }
    throw Error("no Taylor bounds for asin");
}

namespace {

MTPExpr bound_argument(const Atom& a) {
    switch (a.fn) {
    case Fn::Sin:
    case Fn::Cos: return MTPExpr(a.mult) * MTPExpr::variable();
    default:
        if (a.arg == Arg::Sin) return MTPExpr::atom(Atom::sin());
        if (a.arg == Arg::Cos) return MTPExpr::atom(Atom::cos());
        return MTPExpr::variable();
    }
}

MTPExpr substitute(const Poly& p, const MTPExpr& y) {
    MTPExpr out, power(1);
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0) power = power * y;
        if (!p.coeff(i).is_zero()) out += MTPExpr::from_pipoly(p.coeff(i)) * power;
    }
    return out;
}

int coefficient_sign(const Poly& c, const Interval& iv, const Precision& prec,
                     std::optional<PositivityCertificate>& cert) {
    if (c.degree() <= 0) return pipoly_sign(c.coeff(0), prec);
    try {
        cert = prove_positive(c, iv, prec);
        return 1;
    } catch (const NotPositive&) {
    }
    try {
        cert = prove_positive(-c, iv, prec);
        return -1;
    } catch (const NotPositive&) {
    }
    return 0;
}

} // namespace

BoundResult apply_bounds(const MTPExpr& e, const Interval& iv, Var v, const std::vector<BoundAssignment>& assignment,
                         const Precision& prec) {
    std::map<Atom, std::vector<BoundRule>> rules;
    for (const auto& a : assignment) {
        check_admissible(a.atom, a.rule, iv, v, prec);
        rules[a.atom].push_back(a.rule);
    }

    std::map<std::pair<Atom, std::map<Atom, int>>, MTPExpr> groups;
    BoundResult out;
    std::set<Atom> seen;
    for (const auto& [m, c] : e.terms()) {
        std::optional<Atom> hit;
        for (const auto& [a, x] : m.atoms) {
            if (!rules.count(a)) continue;
            if (hit) throw Error("a term contains both " + format(*hit, v) + " and " + format(a, v));
            if (x != 1) throw Error(format(a, v) + " occurs with exponent " + std::to_string(x));
            hit = a;
        }
        if (!hit) {
            out.expr += MTPExpr::term(c, m);
            continue;
        }
        seen.insert(*hit);
        Monomial rest = m;
        rest.atoms.erase(*hit);
        std::map<Atom, int> rest_atoms = rest.atoms;
        rest.atoms.clear();
        groups[{*hit, rest_atoms}] += MTPExpr::term(c, rest);
    }
    for (const auto& [a, r] : rules)
        if (!seen.count(a)) throw Error(format(a, v) + " does not occur in the expression");

    for (const auto& [key, coeff_expr] : groups) {
        const auto& [atom, rest] = key;
        const MTPExpr rest_expr = MTPExpr::term(1, Monomial{0, 0, rest});
        if (!rest.empty() && !positive_by_pattern(rest_expr, iv, v, prec))
            throw Error("no positivity pattern for the factor " + format(rest_expr, v) + " beside " + format(atom, v));
        auto poly = as_poly(coeff_expr);
        if (!poly) throw Error("coefficient of " + format(atom, v) + " is not a polynomial");
        AppliedBound ab{atom, rest, {}, *poly, 0, std::nullopt};
        ab.coefficient_sign = coefficient_sign(*poly, iv, prec, ab.coefficient_certificate);
        if (ab.coefficient_sign == 0)
            throw Error("coefficient of " + format(atom, v) + " changes sign on the interval");
        const Direction want = ab.coefficient_sign > 0 ? Direction::Lower : Direction::Upper;
        const auto& candidates = rules.at(atom);
        auto it = std::find_if(candidates.begin(), candidates.end(), [&](const BoundRule& r) { return r.dir == want; });
        if (it == candidates.end())
            throw Error("coefficient of " + format(atom, v) + " is " + (ab.coefficient_sign > 0 ? "positive" : "negative") +
                        " but no " + to_string(want) + " bound is assigned");
        ab.rule = *it;
        out.expr += coeff_expr * rest_expr * substitute(taylor_poly(atom.fn, ab.rule.degree), bound_argument(atom));
        out.applied.push_back(std::move(ab));
    }
    return out;
}

MTPExpr secant_line() { return MTPExpr::pi() * Rational(1, 4) - MTPExpr::variable() * Rational(1, 2); }

MTPExpr secant_concavity_expr() {
    MTPExpr c = MTPExpr::atom(Atom::cos());
    return MTPExpr(3) * c - c.pow(3);
}

Interval secant_concavity_interval() { return Interval::make(PiPoly(), PiPoly::pi() * Rational(1, 2), true, true); }

bool secant_endpoints_agree() {
    const Poly line = *as_poly(secant_line());
    // atan(cos 0) = atan 1 = pi/4, atan(cos pi/2) = atan 0 = 0
    return line.eval(PiPoly()) == PiPoly::pi() * Rational(1, 4) &&
           line.eval(PiPoly::pi() * Rational(1, 2)) == PiPoly();
}

SecantResult secant_bound_arctan_cos(const MTPExpr& e, const Interval& iv, const Precision& prec) {
    if (pipoly_sign(iv.lo, prec) < 0 || pipoly_sign(PiPoly::pi() * Rational(1, 2) - iv.hi, prec) < 0)
        throw Error("secant bound needs an interval inside [0, pi/2]");
    const Atom a = Atom::atan(Arg::Cos);
    SecantResult r;
    bool found = false;
    for (const auto& [m, c] : e.terms()) {
        auto it = m.atoms.find(a);
        if (it == m.atoms.end()) {
            r.expr += MTPExpr::term(c, m);
            continue;
        }
        if (it->second != 1) throw Error("atan(cos(t)) occurs with exponent " + std::to_string(it->second));
        Monomial rest = m;
        rest.atoms.erase(a);
        r.coefficient += MTPExpr::term(c, rest);
        found = true;
    }
    if (!found) throw Error("atan(cos(t)) does not occur in the expression");
    r.expr += r.coefficient * secant_line();
    return r;
}

} // namespace mtprove
