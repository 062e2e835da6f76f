#include "mtprove/prover.hpp"

#include <algorithm>
#include <future>
#include <random>

namespace mtprove {

std::string step_name(const Step& s) {
    static const char* names[] = {"substitute-sin", "mul-positive", "split", "reflect", "bound", "secant-arctan-cos",
                                  "to-fourier", "factor-monomial", "subst-square", "sturm", "pattern"};
    return names[s.index()];
}

std::string format(const Interval& iv, Var v) {
    return std::string(iv.lo_open ? "(" : "[") + format(MTPExpr::from_pipoly(iv.lo), v) + ", " +
           format(MTPExpr::from_pipoly(iv.hi), v) + (iv.hi_open ? ")" : "]");
}

std::string format(const Goal& g) { return format(g.expr, g.var) + " > 0 on " + format(g.interval, g.var); }

namespace {

void stats_walk(const ProofNode& n, Stats& s) {
    ++s.nodes;
    auto note_digits = [&](const PositivityCertificate& c) { s.max_digits = std::max(s.max_digits, c.digits); };
    if (auto* st = std::get_if<step::Sturm>(&n.step)) {
        ++s.sturm_leaves;
        s.max_poly_degree = std::max(s.max_poly_degree, st->certificate.poly.degree());
        note_digits(st->certificate);
    }
    if (auto* b = std::get_if<step::ApplyBounds>(&n.step))
        for (const auto& a : b->applied)
            if (a.coefficient_certificate) note_digits(*a.coefficient_certificate);
    for (const auto& c : n.side) stats_walk(c, s);
    for (const auto& c : n.children) stats_walk(c, s);
}

Poly require_poly(const Goal& g) {
    auto p = as_poly(g.expr);
    if (!p) throw Error("goal is not a polynomial in " + std::string(1, var_name(g.var)));
    return *p;
}

} // namespace

Stats compute_stats(const ProofNode& root) {
    Stats s;
    stats_walk(root, s);
    return s;
}

// --- single steps ----------------------------------------------------------

Goal substitute_sin(const Goal& g) {
    if (g.var != Var::X) throw Error("x = sin t substitution needs a goal in x");
    return {substitute_sin(g.expr), substitute_sin(g.interval), Var::T};
}

Goal multiply(const Goal& g, const MTPExpr& m) { return {g.expr * m, g.interval, g.var}; }

Goal multiplier_goal(const Goal& g, const MTPExpr& m) { return {m, g.interval, g.var}; }

std::pair<Goal, Goal> split(const Goal& g, const Rational& point, const Precision& prec) {
    const PiPoly p(point);
    if (pipoly_sign(p - g.interval.lo, prec) <= 0 || pipoly_sign(g.interval.hi - p, prec) <= 0)
        throw Error("split point " + format(point) + " is not inside " + format(g.interval, g.var));
    Goal left{g.expr, Interval::make(g.interval.lo, p, g.interval.lo_open, false, prec), g.var};
    Goal right{g.expr, Interval::make(p, g.interval.hi, true, g.interval.hi_open, prec), g.var};
    return {left, right};
}

Goal reflect(const Goal& g) {
    if (g.var != Var::T) throw Error("reflection needs a goal in t");
    return {reflect(g.expr), reflect(g.interval), Var::T};
}

std::pair<std::optional<Goal>, step::ApplyBounds> apply_bounds(const Goal& g, std::vector<BoundAssignment> assignment,
                                                               const Precision& prec) {
    if (assignment.empty()) throw Error("no bounds assigned");
    BoundResult r = apply_bounds(g.expr, g.interval, g.var, assignment, prec);
    step::ApplyBounds s{std::move(assignment), std::move(r.applied)};
    if (r.expr.is_zero()) return {std::nullopt, std::move(s)};
    return {Goal{std::move(r.expr), g.interval, g.var}, std::move(s)};
}

SecantGoals secant_bound(const Goal& g, const Precision& prec) {
    if (g.var != Var::T) throw Error("secant bound needs a goal in t");
    if (!secant_endpoints_agree()) throw Error("secant line does not match atan(cos t) at 0 and pi/2");
    SecantResult r = secant_bound_arctan_cos(g.expr, g.interval, prec);
    return {Goal{r.expr, g.interval, Var::T}, Goal{r.coefficient, g.interval, Var::T},
            Goal{secant_concavity_expr(), secant_concavity_interval(), Var::T}, r.coefficient};
}

Goal to_fourier(const Goal& g) { return {fourier_normalize(g.expr), g.interval, g.var}; }

std::pair<Goal, step::FactorMonomial> factor_monomial(const Goal& g, const Precision& prec) {
    const Poly p = require_poly(g);
    if (p.is_zero()) throw Error("goal polynomial is zero");
    MonomialFactor f = factor_monomial(p);
    if (f.multiplicity > 0 && !variable_positive(g.interval, prec))
        throw Error("the variable is not positive on " + format(g.interval, g.var));
    IntegerNormalized n = normalize_integer(f.quotient);
    return {Goal{MTPExpr::from_poly(n.poly), g.interval, g.var}, step::FactorMonomial{f.multiplicity, n.scale}};
}

Goal substitute_square(const Goal& g, const Precision& prec) {
    const Poly p = require_poly(g);
    if (pipoly_sign(g.interval.lo, prec) < 0) throw Error("square substitution needs a nonnegative interval");
    const Interval& iv = g.interval;
    return {MTPExpr::from_poly(substitute_square(p)),
            Interval::make(iv.lo * iv.lo, iv.hi * iv.hi, iv.lo_open, iv.hi_open, prec), Var::Z};
}

step::Sturm sturm(const Goal& g, const Precision& prec) {
    const Poly p = require_poly(g);
    try {
        return {prove_positive(p, g.interval, prec)};
    } catch (const NotPositive& e) {
        std::string w = e.what();
        if (e.witness()) w += " (value sign " + std::to_string(e.witness_sign()) + " at " + format(*e.witness()) + ")";
        throw Error(w);
    }
}

void reject_degenerate(const Goal& g) {
    if (g.expr.is_zero()) throw Error("goal expression is zero");
    try {
        if (fourier_normalize(g.expr).is_zero()) throw Error("goal expression is identically zero");
    } catch (const Error& e) {
        if (std::string(e.what()).find("identically zero") != std::string::npos) throw;
    }
}

// --- automatic mode --------------------------------------------------------

namespace {

ProofNode node(std::string label, Goal g, Step s) { return {std::move(label), std::move(g), std::move(s), {}, {}}; }

ProofNode pattern_leaf(const Goal& g) { return node("pattern", g, step::PatternPositive{}); }

// Chains stages so that each becomes the single child of the previous one.
ProofNode chain(std::vector<ProofNode> stages) {
    for (std::size_t i = stages.size() - 1; i > 0; --i) stages[i - 1].children.push_back(std::move(stages[i]));
    return std::move(stages.front());
}

bool numerically_positive(const Poly& p, const Interval& iv) {
    const Real lo = to_real(iv.lo), hi = to_real(iv.hi);
    const int n = 48;
    for (int i = 0; i <= n; ++i) {
        Real t = lo + (hi - lo) * (Real(i) + Real(1) / 2) / (n + 1);
        Real v = 0;
        for (int j = p.degree(); j >= 0; --j) v = v * t + to_real(p.coeff(j));
        if (v <= 0) return false;
    }
    return true;
}

// Smallest admissible degree of the right residue for the direction, else -1.
int minimal_degree(Fn fn, Direction dir, int mult, const Interval& iv, int cap, const Precision& prec) {
    for (int k = fn == Fn::Cos ? 0 : 1; k <= cap; k += 2)
        if (table_direction(fn, k) == dir && radius_admissible(k, mult, iv, prec)) return k;
    return -1;
}

// minimal + 4*level, lowered in steps of 4 to stay within the cap.
int escalated_degree(Fn fn, Direction dir, int mult, const Interval& iv, int level, int cap, const Precision& prec) {
    const int k = minimal_degree(fn, dir, mult, iv, cap, prec);
    if (k < 0) return -1;
    int d = k + 4 * level;
    while (d > cap) d -= 4;
    return d;
}

// (lower, upper) atan degree pairs in order of increasing cost.
std::vector<std::pair<int, int>> atan_pairs(int cap) {
    std::vector<std::pair<int, int>> out;
    for (int lo = 3; lo <= cap; lo += 4)
        for (int up : {lo - 2, lo + 2})
            if (up >= 1 && up <= cap) out.emplace_back(lo, up);
    return out;
}

std::optional<ProofNode> try_direct(const Goal& g, std::pair<int, int> atan, int level, const ProverConfig& cfg) {
    const Precision& prec = cfg.prec;
    const std::string tag = "auto level " + std::to_string(level) + ": ";
    std::vector<ProofNode> stages;
    Goal cur = g;
    try {
        if (cur.expr.contains(Fn::Atan)) {
            std::vector<BoundAssignment> as;
            for (const Atom& a : cur.expr.atoms()) {
                if (a.fn != Fn::Atan) continue;
                as.push_back({a, {Fn::Atan, Direction::Lower, atan.first}});
                as.push_back({a, {Fn::Atan, Direction::Upper, atan.second}});
            }
            auto [child, s] = apply_bounds(cur, as, prec);
            stages.push_back(node(tag + "bound", cur, s));
            if (!child) return chain(std::move(stages));
            cur = *child;
        }
        if (cur.expr.contains(Fn::Asin) || cur.expr.contains(Fn::Atan)) return std::nullopt;
        Goal f = to_fourier(cur);
        if (!(f.expr == cur.expr)) {
            stages.push_back(node(tag + "to-fourier", cur, step::ToFourier{}));
            cur = f;
        }
        if (!cur.expr.atoms().empty()) {
            std::vector<BoundAssignment> as;
            for (const Atom& a : cur.expr.atoms())
                for (Direction d : {Direction::Lower, Direction::Upper}) {
                    int k = escalated_degree(a.fn, d, a.mult, cur.interval, level, cfg.max_degree, prec);
                    if (k >= 0) as.push_back({a, {a.fn, d, k}});
                }
            auto [child, s] = apply_bounds(cur, as, prec);
            stages.push_back(node(tag + "bound", cur, s));
            if (!child) return chain(std::move(stages));
            cur = *child;
        }
        auto p = as_poly(cur.expr);
        if (!p || !numerically_positive(*p, cur.interval)) return std::nullopt;
        stages.push_back(node(tag + "sturm", cur, sturm(cur, prec)));
        return chain(std::move(stages));
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<ProofNode> try_levels(const Goal& g, const ProverConfig& cfg) {
    const auto pairs = g.expr.contains(Fn::Atan) ? atan_pairs(cfg.max_degree) : std::vector<std::pair<int, int>>{{0, 0}};
    for (const auto& ap : pairs)
        for (int level = 0; 4 * level <= cfg.max_degree; ++level)
            if (auto n = try_direct(g, ap, level, cfg)) return n;
    return std::nullopt;
}

ProofNode auto_t(const Goal& g, int depth, const ProverConfig& cfg);

std::optional<ProofNode> try_secant(const Goal& g, int depth, const ProverConfig& cfg) {
    if (!g.expr.atoms().count(Atom::atan(Arg::Cos))) return std::nullopt;
    try {
        SecantGoals s = secant_bound(g, cfg.prec);
        if (numeric_falsify(s.coefficient, 64) || numeric_falsify(s.child, 64)) return std::nullopt;
        auto body = try_levels(s.child, cfg);
        if (!body) return std::nullopt;
        ProofNode n = node("auto secant-arctan-cos", g, step::SecantBound{s.coefficient_expr});
        n.side.push_back(auto_t(s.coefficient, depth + 1, cfg));
        n.side.push_back(auto_t(s.concavity, depth + 1, cfg));
        n.children.push_back(std::move(*body));
        return n;
    } catch (const Error&) {
        return std::nullopt;
    }
}

ProofNode auto_t(const Goal& g, int depth, const ProverConfig& cfg) {
    if (positive_by_pattern(g.expr, g.interval, g.var, cfg.prec)) return pattern_leaf(g);
    if (auto c = numeric_falsify(g, 64))
        throw Disproved("goal is false: value " + c->value.str(6) + " at " + c->point.str(20) + " for " + format(g));
    if (auto n = try_levels(g, cfg)) return *n;
    if (g.var == Var::T && g.interval.hi == PiPoly::pi() * Rational(1, 2)) {
        Goal r = reflect(g);
        auto n = try_levels(r, cfg);
        if (!n) n = try_secant(r, depth, cfg);
        if (n) {
            ProofNode top = node("auto reflect", g, step::Reflect{});
            top.children.push_back(std::move(*n));
            return top;
        }
    }
    if (depth >= cfg.max_split_depth)
        throw ProofFailure("no certificate within the split depth for " + format(g));
    const Rational point = interior_sample(g.interval, cfg.prec);
    auto [left, right] = split(g, point, cfg.prec);
    ProofNode top = node("auto split", g, step::Split{point});
    if (cfg.parallel && depth < 3) {
        auto fl = std::async(std::launch::async, [&, l = left] { return auto_t(l, depth + 1, cfg); });
        ProofNode r = auto_t(right, depth + 1, cfg);
        top.children.push_back(fl.get());
        top.children.push_back(std::move(r));
    } else {
        top.children.push_back(auto_t(left, depth + 1, cfg));
        top.children.push_back(auto_t(right, depth + 1, cfg));
    }
    return top;
}

// pi^a * t^b * sin(t)^c clearing every negative power left by x = sin t.
MTPExpr clearing_multiplier(const MTPExpr& e) {
    int a = 0, b = 0, c = 0;
    for (const auto& [m, x] : e.terms()) {
        a = std::max(a, -m.pi);
        b = std::max(b, -m.var);
        for (const auto& [atom, k] : m.atoms)
            if (atom == Atom::sin()) c = std::max(c, -k);
    }
    return MTPExpr::term(1, Monomial{a, b, c ? std::map<Atom, int>{{Atom::sin(), c}} : std::map<Atom, int>{}});
}

} // namespace

ProofNode auto_prove(const Goal& g, const ProverConfig& cfg) {
    reject_degenerate(g);
    if (g.var != Var::X) return auto_t(g, 0, cfg);
    Goal t = substitute_sin(g);
    ProofNode top = node("auto substitute-sin", g, step::SubstituteSin{});
    const MTPExpr m = clearing_multiplier(t.expr);
    if (m == MTPExpr(1)) {
        top.children.push_back(auto_t(t, 0, cfg));
        return top;
    }
    ProofNode mul = node("auto mul-positive", t, step::MulPositive{m});
    mul.side.push_back(pattern_leaf(multiplier_goal(t, m)));
    mul.children.push_back(auto_t(multiply(t, m), 0, cfg));
    top.children.push_back(std::move(mul));
    return top;
}

Certificate auto_certificate(const Goal& g, const ProverConfig& cfg) {
    Certificate c;
    c.goal = g;
    c.proof = auto_prove(g, cfg);
    c.stats = compute_stats(c.proof);
    return c;
}

std::optional<Counterexample> numeric_falsify(const Goal& g, int samples, unsigned seed) {
    if (samples < 1) throw Error("sample count must be positive");
    const Real lo = to_real(g.interval.lo), hi = to_real(g.interval.hi);
    std::vector<Real> pts;
    if (!g.interval.lo_open) pts.push_back(lo);
    if (!g.interval.hi_open) pts.push_back(hi);
    const int equi = std::max(1, samples / 2);
    for (int i = 1; i < equi; ++i) pts.push_back(lo + (hi - lo) * i / equi);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (static_cast<int>(pts.size()) < samples) {
        double r = u(rng);
        if (r > 0.0) pts.push_back(lo + (hi - lo) * r);
    }
    for (const Real& t : pts) {
        Real v = eval(g.expr, t);
        if (v <= 0) return Counterexample{t, v};
    }
    return std::nullopt;
}

// --- scripts ---------------------------------------------------------------

namespace {

ProofNode side_proof(const Goal& g, const ProverConfig& cfg) {
    if (positive_by_pattern(g.expr, g.interval, g.var, cfg.prec)) return pattern_leaf(g);
    return auto_prove(g, cfg);
}

ProofNode run_block(const Goal& g, const std::vector<Directive>& steps, std::size_t i, const ProverConfig& cfg,
                    int depth, int last_line) {
    if (i == steps.size())
        throw ScriptFailure(last_line, "end of block", format(g), "script ended before the goal was closed");
    const Directive& d = steps[i];
    auto closes = [&] {
        if (i + 1 != steps.size())
            throw ScriptFailure(steps[i + 1].line, steps[i + 1].text, format(g), "the goal was already closed");
    };
    auto next = [&](const Goal& child) { return run_block(child, steps, i + 1, cfg, depth, d.line); };
    ProofNode n = node(d.text, g, step::Sturm{});
    try {
        switch (d.kind) {
        case Directive::Kind::SubstituteSin:
            n.step = step::SubstituteSin{};
            n.children.push_back(next(substitute_sin(g)));
            break;
        case Directive::Kind::MulPositive:
            n.step = step::MulPositive{d.multiplier};
            n.side.push_back(side_proof(multiplier_goal(g, d.multiplier), cfg));
            n.children.push_back(next(multiply(g, d.multiplier)));
            break;
        case Directive::Kind::Split: {
            if (d.branches.size() != 2) throw Error("split needs a left and a right branch");
            closes();
            auto [left, right] = split(g, d.point, cfg.prec);
            n.step = step::Split{d.point};
            auto run = [&](const Goal& sub, const Script& s) {
                return run_block(sub, s.steps, 0, cfg, depth + 1, d.line);
            };
            if (cfg.parallel && depth < 3) {
                auto fl = std::async(std::launch::async, [&, l = left] { return run(l, d.branches[0]); });
                ProofNode r = run(right, d.branches[1]);
                n.children.push_back(fl.get());
                n.children.push_back(std::move(r));
            } else {
                n.children.push_back(run(left, d.branches[0]));
                n.children.push_back(run(right, d.branches[1]));
            }
            break;
        }
        case Directive::Kind::Reflect:
            n.step = step::Reflect{};
            n.children.push_back(next(reflect(g)));
            break;
        case Directive::Kind::Bound: {
            auto [child, s] = apply_bounds(g, d.bounds, cfg.prec);
            n.step = std::move(s);
            if (child) n.children.push_back(next(*child));
            else closes();
            break;
        }
        case Directive::Kind::Secant: {
            SecantGoals s = secant_bound(g, cfg.prec);
            n.step = step::SecantBound{s.coefficient_expr};
            n.side.push_back(side_proof(s.coefficient, cfg));
            n.side.push_back(side_proof(s.concavity, cfg));
            n.children.push_back(next(s.child));
            break;
        }
        case Directive::Kind::ToFourier:
            n.step = step::ToFourier{};
            n.children.push_back(next(to_fourier(g)));
            break;
        case Directive::Kind::FactorMonomial: {
            auto [child, s] = factor_monomial(g, cfg.prec);
            n.step = s;
            n.children.push_back(next(child));
            break;
        }
        case Directive::Kind::SubstSquare:
            n.step = step::SubstituteSquare{};
            n.children.push_back(next(substitute_square(g, cfg.prec)));
            break;
        case Directive::Kind::Sturm:
            closes();
            n.step = sturm(g, cfg.prec);
            break;
        case Directive::Kind::Auto: {
            closes();
            ProofNode a = auto_prove(g, cfg);
            a.label = d.text + ": " + a.label;
            return a;
        }
        }
    } catch (const ScriptFailure&) {
        throw;
    } catch (const Error& e) {
        throw ScriptFailure(d.line, d.text, format(g), e.what());
    }
    return n;
}

} // namespace

Certificate run_script(const Goal& g, const Script& s, const ProverConfig& cfg) {
    reject_degenerate(g);
    Certificate c;
    c.goal = g;
    c.notes = s.notes;
    c.proof = run_block(g, s.steps, 0, cfg, 0, 0);
    c.stats = compute_stats(c.proof);
    return c;
}

// --- checking --------------------------------------------------------------

namespace {

struct Reject {
    std::string why;
};

void expect(bool ok, const std::string& why) {
    if (!ok) throw Reject{why};
}

void verify_node(const ProofNode& n, const Goal& expected, const Precision& prec, const std::string& path);

void verify_children(const ProofNode& n, const std::vector<Goal>& goals, const Precision& prec, const std::string& path) {
    expect(n.children.size() == goals.size(), path + ": expected " + std::to_string(goals.size()) + " subgoals");
    for (std::size_t i = 0; i < goals.size(); ++i)
        verify_node(n.children[i], goals[i], prec, path + "/" + std::to_string(i));
}

void verify_side(const ProofNode& n, const std::vector<Goal>& goals, const Precision& prec, const std::string& path) {
    expect(n.side.size() == goals.size(), path + ": expected " + std::to_string(goals.size()) + " side proofs");
    for (std::size_t i = 0; i < goals.size(); ++i)
        verify_node(n.side[i], goals[i], prec, path + "/side" + std::to_string(i));
}

void verify_node(const ProofNode& n, const Goal& expected, const Precision& prec, const std::string& path) {
    const Goal& g = n.goal;
    expect(g == expected, path + ": goal differs from the one derived by the parent step");
    const std::string at = path + " (" + step_name(n.step) + ")";
    try {
        std::visit(
            [&](const auto& s) {
                using S = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<S, step::SubstituteSin>) {
                    verify_side(n, {}, prec, at);
                    verify_children(n, {substitute_sin(g)}, prec, path);
                } else if constexpr (std::is_same_v<S, step::MulPositive>) {
                    verify_side(n, {multiplier_goal(g, s.multiplier)}, prec, at);
                    verify_children(n, {multiply(g, s.multiplier)}, prec, path);
                } else if constexpr (std::is_same_v<S, step::Split>) {
                    verify_side(n, {}, prec, at);
                    auto [l, r] = split(g, s.point, prec);
                    verify_children(n, {l, r}, prec, path);
                } else if constexpr (std::is_same_v<S, step::Reflect>) {
                    verify_side(n, {}, prec, at);
                    verify_children(n, {reflect(g)}, prec, path);
                } else if constexpr (std::is_same_v<S, step::ApplyBounds>) {
                    verify_side(n, {}, prec, at);
                    auto [child, rec] = apply_bounds(g, s.assignment, prec);
                    expect(rec.applied == s.applied, at + ": recorded bound applications differ");
                    verify_children(n, child ? std::vector<Goal>{*child} : std::vector<Goal>{}, prec, path);
                } else if constexpr (std::is_same_v<S, step::SecantBound>) {
                    SecantGoals sg = secant_bound(g, prec);
                    expect(sg.coefficient_expr == s.coefficient, at + ": recorded secant coefficient differs");
                    verify_side(n, {sg.coefficient, sg.concavity}, prec, at);
                    verify_children(n, {sg.child}, prec, path);
                } else if constexpr (std::is_same_v<S, step::ToFourier>) {
                    verify_side(n, {}, prec, at);
                    verify_children(n, {to_fourier(g)}, prec, path);
                } else if constexpr (std::is_same_v<S, step::FactorMonomial>) {
                    verify_side(n, {}, prec, at);
                    auto [child, rec] = factor_monomial(g, prec);
                    expect(rec == s, at + ": recorded factorization differs");
                    verify_children(n, {child}, prec, path);
                } else if constexpr (std::is_same_v<S, step::SubstituteSquare>) {
                    verify_side(n, {}, prec, at);
                    verify_children(n, {substitute_square(g, prec)}, prec, path);
                } else if constexpr (std::is_same_v<S, step::Sturm>) {
                    verify_side(n, {}, prec, at);
                    verify_children(n, {}, prec, path);
                    auto p = as_poly(g.expr);
                    expect(p && *p == s.certificate.poly, at + ": certificate polynomial differs from the goal");
                    expect(s.certificate.interval == g.interval, at + ": certificate interval differs from the goal");
                    expect(check_positivity(s.certificate, prec), at + ": positivity certificate does not re-verify");
                } else if constexpr (std::is_same_v<S, step::PatternPositive>) {
                    verify_side(n, {}, prec, at);
                    verify_children(n, {}, prec, path);
                    expect(positive_by_pattern(g.expr, g.interval, g.var, prec), at + ": no positivity pattern applies");
                }
            },
            n.step);
    } catch (const Reject&) {
        throw;
    } catch (const std::exception& e) {
        throw Reject{at + ": " + e.what()};
    }
}

} // namespace

CheckResult verify_certificate(const Certificate& c, const Precision& prec) {
    try {
        expect(c.schema == kSchema, "unknown schema '" + c.schema + "'");
        expect(c.proof.goal == c.goal, "proof root does not prove the stated goal");
        reject_degenerate(c.goal);
        verify_node(c.proof, c.goal, prec, "root");
    } catch (const Reject& r) {
        return {false, r.why};
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    return {true, "accepted"};
}

} // namespace mtprove
