#include <doctest.h>

#include "fixtures.hpp"
#include "mtprove/poly.hpp"
#include "sturm_oracle.hpp"

#include <random>

using namespace mtprove;
using fixtures::pp;

namespace {

Poly ipoly(std::initializer_list<long> cs) {
    std::vector<PiPoly> v;
    for (long c : cs) v.emplace_back(Rational(c));
    return Poly(v);
}

Interval iv(Rational lo, Rational hi, bool lo_open = true, bool hi_open = true) {
    return Interval::make(PiPoly(lo), PiPoly(hi), lo_open, hi_open);
}

const PiPoly kPi = PiPoly::pi();

} // namespace

TEST_CASE("derivative") {
    CHECK(derivative(ipoly({0, 0, 0, 1})) == ipoly({0, 0, 3}));
    CHECK(derivative(Poly(kPi * kPi)).is_zero());
    Poly d = derivative(fixtures::P5());
    CHECK(d.degree() == 4);
    CHECK(d.coeff(0) == pp({"326415889800", "-32614832250", "-40801986225"}));
}

TEST_CASE("derivative is linear and obeys the product rule") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-50, 50), deg(0, 6);
    auto rnd = [&] {
        std::vector<PiPoly> v(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : v) x = PiPoly(std::vector<Rational>{Rational(c(rng)), Rational(c(rng), 7)});
        return Poly(v);
    };
    for (int i = 0; i < 50; ++i) {
        Poly a = rnd(), b = rnd();
        PiPoly k = PiPoly(std::vector<Rational>{Rational(c(rng)), Rational(1)});
        CHECK(derivative(a * Poly(k) + b) == derivative(a) * Poly(k) + derivative(b));
        CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
    }
}

TEST_CASE("eval_sign") {
    PiPoly z = PiPoly(Rational(169, 100));
    Poly p7 = fixtures::P7();
    CHECK(eval_sign(derivative(derivative(p7)), z) == 1);
    CHECK(eval_sign(derivative(p7), z) == -1);
    CHECK(eval_sign(p7, z) == 1);
    CHECK(eval_sign(ipoly({-2, 0, 1}), PiPoly()) == -1);
}

TEST_CASE("sturm chain examples") {
    auto c = sturm_chain(ipoly({-1, 0, 1}));
    REQUIRE(c.chain.size() == 3);
    CHECK(c.chain[1] == ipoly({0, 1}));
    CHECK(c.chain[2].degree() == 0);
    CHECK(sign_variations(c, PiPoly(-2)) - sign_variations(c, PiPoly(2)) == 2);
    CHECK(count_roots(c) == 2);

    auto none = sturm_chain(ipoly({1, 0, 1}));
    CHECK(count_roots(none) == 0);
    CHECK(count_roots(none, iv(-5, 5)) == 0);

    Poly p7 = fixtures::P7();
    CHECK(count_roots(sturm_chain(derivative(derivative(derivative(p7))))) == 0);
    CHECK_THROWS_AS(sturm_chain(Poly()), Error);
}

TEST_CASE("root counts for the conjecture polynomials") {
    Poly p5 = fixtures::P5();
    CHECK(count_roots(sturm_chain(p5)) == 1);
    CHECK(count_roots(sturm_chain(p5), iv(0, Rational(121, 100), true, false)) == 0);
    // the unique root lies just above 1.21
    CHECK(count_roots(sturm_chain(p5), iv(Rational(121, 100), Rational(124, 100))) == 1);

    Poly p7 = fixtures::P7();
    CHECK(count_roots(sturm_chain(p7), iv(0, Rational(169, 100), true, false)) == 0);
    CHECK(count_roots(sturm_chain(p7), iv(Rational(187, 100), Rational(188, 100))) == 1);
    CHECK(count_roots(sturm_chain(derivative(derivative(p7)))) == 1);
    CHECK(count_roots(sturm_chain(derivative(derivative(p7))), iv(0, Rational(169, 100), true, false)) == 0);
    CHECK(count_roots(sturm_chain(derivative(derivative(p7))), iv(Rational(183, 100), Rational(184, 100))) == 1);
}

TEST_CASE("count_roots refuses endpoint roots") {
    auto c = sturm_chain(ipoly({-1, 0, 1}));
    CHECK_THROWS_AS(count_roots(c, iv(1, 3)), Error);
}

TEST_CASE("squarefree reduction keeps distinct roots") {
    // (t-1)^2 (t+2)
    Poly p = ipoly({2, -3, 0, 1});
    CHECK(squarefree_part(p).degree() == 2);
    CHECK(count_roots(sturm_chain(p)) == 2);
    CHECK(count_roots(sturm_chain(p), iv(0, 3)) == 1);
    // (t - pi)^2 (t + 1)
    Poly q = (Poly::variable() - Poly(kPi)).pow(2) * ipoly({1, 1});
    CHECK(count_roots(sturm_chain(q)) == 2);
}

TEST_CASE("Sturm counts match bisection isolation on random integer polynomials") {
    std::mt19937_64 rng(20240601);
    int compared = 0;
    while (compared < 200) {
        auto c = oracle::random_case(rng);
        if (!c) continue;
        const int sturm = count_roots(sturm_chain(c->poly), c->interval);
        CHECK(sturm == c->oracle);
        CHECK(sturm == c->known);
        ++compared;
    }
}

TEST_CASE("prove_positive examples") {
    auto c10 = prove_positive(fixtures::P10(), iv(0, Rational(11, 10), true, false));
    CHECK(c10.root_count == 0);
    CHECK(c10.sample_sign == 1);
    CHECK(c10.hi_sign == 1);
    CHECK(check_positivity(c10));

    auto c14 = prove_positive(fixtures::P14(), iv(0, Rational(13, 10), true, false));
    CHECK(check_positivity(c14));

    try {
        prove_positive(ipoly({-2, 1}), iv(0, 1, true, false));
        FAIL("expected NotPositive");
    } catch (const NotPositive& e) {
        REQUIRE(e.witness().has_value());
        CHECK(*e.witness() > 0);
        CHECK(*e.witness() < 1);
        CHECK(e.witness_sign() == -1);
    }
}

TEST_CASE("prove_positive divides out roots at open endpoints") {
    // t (1 - t) on (0, 1)
    auto c = prove_positive(ipoly({0, 1, -1}), iv(0, 1));
    CHECK(c.lo_multiplicity == 1);
    CHECK(c.hi_multiplicity == 1);
    // the conjecture-one cubic vanishes at t = 0 and the interval ends at pi/2 - 11/10
    Interval right = Interval::make(PiPoly(), kPi * Rational(1, 2) - PiPoly(Rational(11, 10)), true, true);
    auto cubic = prove_positive(fixtures::conj1_cubic(), right);
    CHECK(cubic.lo_multiplicity == 1);
    CHECK(check_positivity(cubic));
    Interval right2 = Interval::make(PiPoly(), kPi * Rational(1, 2) - PiPoly(Rational(13, 10)), true, true);
    CHECK(check_positivity(prove_positive(fixtures::conj2_cubic(), right2)));
    // closed endpoint root is a failure
    CHECK_THROWS_AS(prove_positive(ipoly({0, 1}), iv(0, 1, false, false)), NotPositive);
}

TEST_CASE("check_positivity rejects altered certificates") {
    auto c = prove_positive(fixtures::P10(), iv(0, Rational(11, 10), true, false));
    auto bad = c;
    bad.variations_lo += 1;
    CHECK_FALSE(check_positivity(bad));
    bad = c;
    bad.sample = Rational(1, 3);
    CHECK_FALSE(check_positivity(bad));
    bad = c;
    bad.interval.hi = PiPoly(Rational(13, 10));
    CHECK_FALSE(check_positivity(bad));
    bad = c;
    bad.poly = -bad.poly;
    CHECK_FALSE(check_positivity(bad));
    bad = c;
    bad.root_count = 1;
    CHECK_FALSE(check_positivity(bad));
}

TEST_CASE("factor_monomial and normalize_integer recover P10 and P14") {
    auto f = factor_monomial(fixtures::P16());
    CHECK(f.multiplicity == 6);
    auto n = normalize_integer(f.quotient);
    CHECK(n.scale == Rational(1, Integer("30648618000")));
    CHECK(n.poly == fixtures::P10());
    CHECK(n.poly.coeff(10) == pp({"8589934592", "-1073741824", "-1073741824"}));

    auto g = factor_monomial(fixtures::P19());
    CHECK(g.multiplicity == 5);
    auto m = normalize_integer(g.quotient);
    CHECK(m.scale == Rational(1, Integer("23355859278495744000")));
    CHECK(m.poly == fixtures::P14());
    CHECK(m.poly.coeff(0) == pp({"-280270311341948928000", "108604745645005209600"}));

    auto sq = factor_monomial(ipoly({0, 0, 1}));
    CHECK(sq.multiplicity == 2);
    CHECK(sq.quotient == ipoly({1}));

    auto half = normalize_integer(Poly(std::vector<PiPoly>{PiPoly(Rational(1, 2)), PiPoly(Rational(1, 2))}));
    CHECK(half.scale == Rational(1, 2));
    CHECK(half.poly == ipoly({1, 1}));
}

TEST_CASE("factor_monomial reassembles exactly") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-9, 9), shift(0, 5), deg(0, 5);
    for (int i = 0; i < 50; ++i) {
        std::vector<PiPoly> v(static_cast<std::size_t>(shift(rng)));
        int d = deg(rng);
        for (int j = 0; j <= d; ++j) v.push_back(PiPoly(std::vector<Rational>{Rational(c(rng)), Rational(c(rng))}));
        if (v.back().is_zero()) v.back() = PiPoly(1);
        if (v[static_cast<std::size_t>(v.size() - static_cast<std::size_t>(d) - 1)].is_zero()) continue;
        Poly p(v);
        auto f = factor_monomial(p);
        CHECK(Poly::monomial(PiPoly(1), f.multiplicity) * f.quotient == p);
        CHECK_FALSE(f.quotient.coeff(0).is_zero());
    }
}

TEST_CASE("substitute_square") {
    CHECK(substitute_square(fixtures::P10()) == fixtures::P5());
    CHECK(substitute_square(fixtures::P14()) == fixtures::P7());
    CHECK(substitute_square(ipoly({0, 0, 1, 0, 1})) == ipoly({0, 1, 1}));
    CHECK_THROWS_AS(substitute_square(ipoly({0, 1})), Error);
    Poly p5 = substitute_square(fixtures::P10());
    CHECK(p5.compose(ipoly({0, 0, 1})) == fixtures::P10());
}
