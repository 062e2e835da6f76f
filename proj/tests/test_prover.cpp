#include <doctest.h>

#include "fixtures.hpp"
#include "mtprove/syntax.hpp"

#include <functional>
#include <random>

using namespace mtprove;

namespace {

const PiPoly kHalfPi = PiPoly::pi() * Rational(1, 2);

std::string source(const std::string& rel) { return read_file(MTPROVE_SOURCE_DIR "/" + rel); }

Certificate conjecture(int n) {
    const std::string base = "proofs/conjecture" + std::to_string(n);
    return run_script(parse_goal(source(base + ".goal")), parse_script(source(base + ".script")));
}

template <class S>
std::vector<const ProofNode*> find_steps(const ProofNode& root) {
    std::vector<const ProofNode*> out;
    std::function<void(const ProofNode&)> walk = [&](const ProofNode& n) {
        if (std::holds_alternative<S>(n.step)) out.push_back(&n);
        for (const auto& c : n.children) walk(c);
    };
    walk(root);
    return out;
}

const ProofNode& only_child(const ProofNode& n) {
    REQUIRE(n.children.size() == 1);
    return n.children[0];
}

Goal goal(const std::string& s) { return parse_goal(s); }

ProverConfig quick() {
    ProverConfig c;
    c.max_split_depth = 2;
    c.parallel = false;
    return c;
}

} // namespace

TEST_CASE("split") {
    const Goal g{parse_expr("t").expr, Interval::make(PiPoly(), kHalfPi, true, true), Var::T};
    auto [l, r] = split(g, Rational(11, 10));
    CHECK(l.interval.lo == PiPoly());
    CHECK(l.interval.hi == PiPoly(Rational(11, 10)));
    CHECK(l.interval.lo_open);
    CHECK(!l.interval.hi_open);
    CHECK(r.interval.lo == PiPoly(Rational(11, 10)));
    CHECK(r.interval.hi == kHalfPi);
    CHECK(r.interval.lo_open);
    CHECK(r.interval.hi_open);
    const Goal closed{g.expr, Interval::make(PiPoly(), PiPoly(Rational(2)), false, false), Var::T};
    CHECK(!split(closed, Rational(1)).first.interval.lo_open);
    CHECK(!split(closed, Rational(1)).second.interval.hi_open);
    CHECK_THROWS_AS(split(closed, Rational(2)), Error);
    CHECK_THROWS_AS(split(closed, Rational(0)), Error);
    CHECK_THROWS_AS(split(g, Rational(8, 5)), Error);
}

TEST_CASE("first conjecture script") {
    const Certificate c = conjecture(1);
    CHECK(verify_certificate(c).accepted);
    CHECK(c.notes.size() == 1);

    const auto factors = find_steps<step::FactorMonomial>(c.proof);
    REQUIRE(factors.size() == 1);
    const auto& fm = std::get<step::FactorMonomial>(factors[0]->step);
    CHECK(fm.multiplicity == 6);
    CHECK(fm.scale == Rational(1, 30648618000));
    CHECK(as_poly(factors[0]->goal.expr) == fixtures::P16());
    const ProofNode& p10 = only_child(*factors[0]);
    CHECK(as_poly(p10.goal.expr) == fixtures::P10());
    CHECK(as_poly(only_child(p10).goal.expr) == fixtures::P5());
    CHECK(only_child(p10).goal.interval.hi == PiPoly(Rational(121, 100)));

    const auto leaves = find_steps<step::Sturm>(c.proof);
    bool cubic = false;
    for (const auto* n : leaves) cubic = cubic || as_poly(n->goal.expr) == fixtures::conj1_cubic();
    CHECK(cubic);
}

TEST_CASE("first conjecture chain g > h > P16") {
    const Certificate c = conjecture(1);
    const auto splits = find_steps<step::Split>(c.proof);
    REQUIRE(splits.size() == 1);
    const ProofNode& g = splits[0]->children.at(0);
    REQUIRE(std::holds_alternative<step::ApplyBounds>(g.step));
    const ProofNode& h = only_child(g);
    CHECK(std::holds_alternative<step::ToFourier>(h.step));
    CHECK(h.goal.expr == parse_expr("2*pi*sin(t)^2 + (pi^2+pi-8)*sin(t)^5*(sin(t) - 1/3*sin(t)^3)"
                                    " - pi*sin(t)*(sin(t) - 1/3*sin(t)^3 + 1/5*sin(t)^5) - pi*t^2")
                             .expr);
    const ProofNode& bound = only_child(h);
    CHECK(std::holds_alternative<step::ApplyBounds>(bound.step));
    CHECK(as_poly(only_child(bound).goal.expr) == fixtures::P16());
}

TEST_CASE("second conjecture script") {
    const Certificate c = conjecture(2);
    CHECK(verify_certificate(c).accepted);
    CHECK(c.notes.size() == 2);
    const auto factors = find_steps<step::FactorMonomial>(c.proof);
    REQUIRE(factors.size() == 1);
    const auto& fm = std::get<step::FactorMonomial>(factors[0]->step);
    CHECK(fm.multiplicity == 5);
    CHECK(fm.scale == Rational(1, Integer("23355859278495744000")));
    CHECK(as_poly(factors[0]->goal.expr) == fixtures::P19());
    const ProofNode& p14 = only_child(*factors[0]);
    CHECK(as_poly(p14.goal.expr) == fixtures::P14());
    CHECK(as_poly(only_child(p14).goal.expr) == fixtures::P7());
    CHECK(only_child(p14).goal.interval.hi == PiPoly(Rational(169, 100)));
    bool cubic = false;
    for (const auto* n : find_steps<step::Sturm>(c.proof)) cubic = cubic || as_poly(n->goal.expr) == fixtures::conj2_cubic();
    CHECK(cubic);
}

TEST_CASE("script without the split fails at the Sturm step") {
    const std::string script = "substitute-sin\n"
                               "mul-positive pi*sin(t)^2\n"
                               "bound atan lower 3 @ sin(t)\n"
                               "bound atan upper 5 @ sin(t)\n"
                               "to-fourier\n"
                               "bound cos upper 16 @ 8t\n"
                               "bound cos upper 12 @ 6t\n"
                               "bound cos lower 10 @ 4t\n"
                               "bound cos upper 4 @ 2t\n"
                               "factor-monomial\n"
                               "subst-square\n"
                               "sturm\n";
    try {
        run_script(parse_goal(source("proofs/conjecture1.goal")), parse_script(script));
        FAIL("expected a failure");
    } catch (const ScriptFailure& e) {
        CHECK(e.line() == 12);
        CHECK(std::string(e.what()).find("(sturm)") != std::string::npos);
    }
}

TEST_CASE("script step failures name the line") {
    const Goal g = goal("t - sin(t) > 0 on (0, 1]");
    try {
        run_script(g, parse_script("to-fourier\nbound sin lower 3 @ t\nsturm\n"));
        FAIL("expected a failure");
    } catch (const ScriptFailure& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(run_script(g, parse_script("to-fourier\n")), ScriptFailure);
    CHECK_THROWS_AS(run_script(g, parse_script("reflect\nsturm\n")), ScriptFailure);
    CHECK(verify_certificate(run_script(g, parse_script("bound sin upper 1 @ t\n"))).accepted);
    CHECK(verify_certificate(run_script(g, parse_script("auto\n"))).accepted);
}

TEST_CASE("automatic proofs of small goals") {
    const Certificate a = auto_certificate(goal("t - sin(t) > 0 on (0, 1]"));
    CHECK(verify_certificate(a).accepted);
    const auto& b = std::get<step::ApplyBounds>(a.proof.step);
    REQUIRE(b.applied.size() == 1);
    CHECK(b.applied[0].rule == BoundRule{Fn::Sin, Direction::Upper, 1});

    CHECK_THROWS_AS(auto_prove(goal("sin(t) - t > 0 on (0, 1]")), Disproved);
    CHECK_THROWS_AS(auto_prove(goal("sin(t)^2 + cos(t)^2 - 1 > 0 on (0, 1)")), Error);

    const Goal cosine = goal("cos(t) > 0 on (0, pi/2)");
    CHECK(verify_certificate(auto_certificate(cosine)).accepted);
    const Goal x = goal("asin(x) - x > 0 on (0, 1)");
    CHECK(verify_certificate(auto_certificate(x)).accepted);
}

TEST_CASE("automatic proof of the first bounded goal on (0, 1.1]") {
    const Goal g = goal("2*pi*sin(t)^2 + (pi^2+pi-8)*sin(t)^5*atan(sin(t)) - pi*sin(t)*atan(sin(t)) - pi*t^2 > 0"
                        " on (0, 1.1]");
    CHECK(verify_certificate(auto_certificate(g)).accepted);
}

TEST_CASE("numeric falsification") {
    const Goal g = goal("2*pi*sin(t)^2 + (pi^2+pi-8)*sin(t)^5*atan(sin(t)) - pi*sin(t)*atan(sin(t)) - pi*t^2 > 0"
                        " on (0, pi/2)");
    CHECK(!numeric_falsify(g, 1000));
    const Goal neg{-g.expr, g.interval, g.var};
    CHECK(numeric_falsify(neg, 1000));
    const auto c = numeric_falsify(goal("(t-1)^2*sin(t) > 0 on (0, 2)"), 1000);
    REQUIRE(c);
    CHECK(abs(c->point - 1) < Real("1e-30"));
    CHECK(c->value == 0);
}

TEST_CASE("certificates for split pieces assemble") {
    const ProverConfig cfg = quick();
    const Goal whole = goal("t - sin(t) + t^2 - t^3/2 > 0 on (0, 2)");
    auto [l, r] = split(whole, Rational(1));
    ProofNode top{"split 1", whole, step::Split{Rational(1)}, {}, {auto_prove(l, cfg), auto_prove(r, cfg)}};
    Certificate c;
    c.goal = whole;
    c.proof = top;
    c.stats = compute_stats(top);
    CHECK(verify_certificate(c).accepted);
}

TEST_CASE("checker rejects tampering") {
    Certificate c = conjecture(1);
    auto factors = find_steps<step::FactorMonomial>(c.proof);
    ProofNode& p10 = const_cast<ProofNode&>(only_child(*factors[0]));
    Poly p = *as_poly(p10.goal.expr);
    std::vector<PiPoly> cs;
    for (int i = 0; i <= p.degree(); ++i) cs.push_back(p.coeff(i));
    cs[0] += PiPoly(Rational(1));
    Certificate bumped = c;
    const_cast<ProofNode&>(only_child(*find_steps<step::FactorMonomial>(bumped.proof)[0])).goal.expr =
        MTPExpr::from_poly(Poly(cs));
    CHECK(!verify_certificate(bumped).accepted);

    Certificate empty;
    empty.goal = c.goal;
    empty.proof = ProofNode{"", c.goal, step::PatternPositive{}, {}, {}};
    CHECK(!verify_certificate(empty).accepted);

    Certificate wrong_root = c;
    wrong_root.goal.interval = Interval::make(PiPoly(), PiPoly(Rational(1, 2)), true, true);
    CHECK(!verify_certificate(wrong_root).accepted);

    Certificate schema = c;
    schema.schema = "mtp-certificate/0";
    CHECK(!verify_certificate(schema).accepted);
}

TEST_CASE("automatic mode never yields a rejected certificate") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-3, 6), mult(1, 3), deg(0, 3);
    const char* atoms[] = {"sin", "cos"};
    int proved = 0;
    for (int i = 0; i < 25; ++i) {
        std::string e = std::to_string(coef(rng) + 3);
        for (int j = 0; j < 3; ++j)
            e += " + " + std::to_string(coef(rng)) + "/4*t^" + std::to_string(deg(rng)) + "*" + atoms[j % 2] + "(" +
                 std::to_string(mult(rng)) + "*t)";
        const Goal g = goal(e + " > 0 on (0, 1]");
        CAPTURE(e);
        try {
            const Certificate c = auto_certificate(g, quick());
            CHECK(verify_certificate(c).accepted);
            ++proved;
        } catch (const ProofFailure&) {
        }
    }
    CHECK(proved > 5);
}

TEST_CASE("certificates do not depend on the precision cap") {
    ProverConfig tight;
    tight.prec = Precision{20, 20};
    const Goal g = parse_goal(source("proofs/conjecture1.goal"));
    const Certificate c = run_script(g, parse_script(source("proofs/conjecture1.script")), tight);
    CHECK(verify_certificate(c).accepted);
    CHECK(c == conjecture(1));
    CHECK_THROWS_AS(pipoly_sign(PiPoly::pi(), Precision{30, 20}), Error);
}
