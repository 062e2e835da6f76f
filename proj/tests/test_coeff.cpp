#include <doctest.h>

#include "mtprove/coeff.hpp"
#include "mtprove/error.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <random>

using namespace mtprove;
using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>>;

namespace {

// pi from MPFR's own constant routine, independent of the Machin code.
Big mpfr_pi() { return boost::math::constants::pi<Big>(); }

Big to_big(const Rational& r) { return Big(numerator(r)) / Big(denominator(r)); }

Big eval_big(const PiPoly& p) {
    Big acc = 0, pi = mpfr_pi();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * pi + to_big(*it);
    return acc;
}

PiPoly random_pipoly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-(1L << 30), 1L << 30);
    std::uniform_int_distribution<long> den(1, 1L << 20);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return PiPoly(c);
}

} // namespace

TEST_CASE("pi enclosure brackets pi with the requested width") {
    auto e2 = pi_enclosure(2);
    CHECK(e2.lo >= Rational(314, 100));
    CHECK(e2.hi <= Rational(315, 100));
    CHECK(e2.lo < e2.hi);

    auto e15 = pi_enclosure(15);
    CHECK(to_big(e15.lo) < mpfr_pi());
    CHECK(to_big(e15.hi) > mpfr_pi());
    CHECK(e15.hi - e15.lo <= Rational(1, Integer("1000000000000000")));
    CHECK(to_big(e15.lo) > Big("3.141592653589793"));
    CHECK(to_big(e15.hi) < Big("3.141592653589794"));
}

TEST_CASE("pi enclosures nest as precision grows") {
    std::vector<int> ds = {1, 2, 5, 17, 20, 40, 50, 63, 64, 65, 80, 200, 300};
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j) {
            auto a = pi_enclosure(ds[i]), b = pi_enclosure(ds[j]);
            CHECK(a.lo <= b.lo);
            CHECK(b.hi <= a.hi);
        }
    CHECK_THROWS_AS(pi_enclosure(0), Error);
}

TEST_CASE("pipoly sign examples") {
    PiPoly pi = PiPoly::pi();
    CHECK(pipoly_sign(pi * pi + pi - PiPoly(8)) == 1);
    CHECK(pipoly_sign(PiPoly()) == 0);
    CHECK(pipoly_sign(PiPoly(Rational(355, 113)) - pi) == 1);
    CHECK(pipoly_sign(PiPoly(Rational(22, 7)) - pi) == 1);
    CHECK(pipoly_sign(PiPoly(Rational(333, 106)) - pi) == -1);
    CHECK(pipoly_sign(PiPoly(-3)) == -1);
}

TEST_CASE("pipoly sign reports an explicit error at the precision cap") {
    // 355/113 - pi ~ 2.7e-7 cannot be separated with 3 digits
    PiPoly p = PiPoly(Rational(355, 113)) - PiPoly::pi();
    CHECK_THROWS_AS(pipoly_sign(p, Precision{2, 3}), SignUndecided);
    CHECK(pipoly_sign(p, Precision{2, 10}) == 1);
    auto r = pipoly_sign_ex(p, Precision{2, 100});
    CHECK(r.digits == 8);
}

TEST_CASE("pipoly sign agrees with 80-digit evaluation on random inputs") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        PiPoly p = random_pipoly(rng, 4);
        Big v = eval_big(p);
        if (abs(v) < Big("1e-40")) continue;
        CHECK(pipoly_sign(p) == (v > 0 ? 1 : -1));
        ++checked;
    }
    CHECK(checked > 250);
}

TEST_CASE("ring operations") {
    PiPoly pi = PiPoly::pi();
    CHECK(pi * Rational(1, 2) + pi * Rational(1, 2) == pi);
    CHECK((pi - PiPoly(3)) * (pi + PiPoly(3)) == pi * pi - PiPoly(9));
    CHECK((pi * pi + pi - PiPoly(8)) * Rational(1, 3) ==
          PiPoly({Rational(-8, 3), Rational(1, 3), Rational(1, 3)}));
    CHECK((pi - pi).is_zero());
    CHECK(PiPoly::gcd(pi * pi - PiPoly(1), (pi - PiPoly(1)) * Rational(5)) == pi - PiPoly(1));
    CHECK((pi * pi * pi).shift(-2) == pi);
    CHECK_THROWS_AS((pi + PiPoly(1)).shift(-1), Error);
}

TEST_CASE("ring axioms hold on random elements") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        PiPoly a = random_pipoly(rng, 3), b = random_pipoly(rng, 3), c = random_pipoly(rng, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("rational strings") {
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(4)) == "4/1");
    CHECK(rational_from_string("-10/4") == Rational(-5, 2));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("1.5"), Error);
    CHECK(format(PiPoly({Rational(31, 12), Rational(-43, 48), Rational(-31, 96)})) == "-31/96*pi^2 - 43/48*pi + 31/12");
}
