#include "mtprove/poly.hpp"

#include <algorithm>

namespace mtprove {

Poly::Poly(PiPoly c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<PiPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(PiPoly c, int power) {
    if (c.is_zero()) return {};
    std::vector<PiPoly> v(static_cast<std::size_t>(power) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PiPoly Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(i)];
}

int Poly::pi_degree() const {
    int d = -1;
    for (const auto& c : coeffs_) d = std::max(d, c.degree());
    return d;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const PiPoly& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<PiPoly> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::pow(int e) const {
    if (e < 0) throw Error("Poly::pow: negative exponent");
    Poly result(PiPoly(1)), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

PiPoly Poly::eval(const PiPoly& at) const {
    PiPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::compose(const Poly& q) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Poly(*it);
    return acc;
}

Poly derivative(const Poly& p) {
    if (p.degree() < 1) return {};
    std::vector<PiPoly> d(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) d[static_cast<std::size_t>(i - 1)] = p.coeff(i) * Rational(i);
    return Poly(std::move(d));
}

int eval_sign(const Poly& p, const PiPoly& at, const Precision& prec) { return pipoly_sign(p.eval(at), prec); }

// ---------------------------------------------------------------------------

Interval Interval::make(PiPoly lo, PiPoly hi, bool lo_open, bool hi_open, const Precision& prec) {
    if (compare(hi, lo, prec) <= 0) throw Error("empty interval: (" + format(lo) + ", " + format(hi) + ")");
    return {std::move(lo), std::move(hi), lo_open, hi_open};
}

bool Interval::contains(const PiPoly& x, const Precision& prec) const {
    int a = compare(x, lo, prec), b = compare(hi, x, prec);
    return (a > 0 || (a == 0 && !lo_open)) && (b > 0 || (b == 0 && !hi_open));
}

// ---------------------------------------------------------------------------
// Sturm machinery

namespace {

// Sign decisions made while building one certificate report the largest
// precision they needed.
struct SignMeter {
    const Precision& prec;
    int digits = 0;

    int operator()(const PiPoly& p) {
        auto r = pipoly_sign_ex(p, prec);
        digits = std::max(digits, r.digits);
        return r.sign;
    }
};

// Divide out the Q[pi]-content and a positive rational factor; flips the
// overall sign if the content is negative at pi, so the result is a positive
// multiple of p.
Poly primitive(const Poly& p, SignMeter& sign) {
    if (p.is_zero()) return p;
    PiPoly g;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) g = PiPoly::gcd(g, c);
    std::vector<PiPoly> cs = p.coeffs();
    if (g.degree() > 0) {
        for (auto& c : cs) c = c.exact_div(g);
        if (sign(g) < 0)
            for (auto& c : cs) c = -c;
    }
    Integer den = 1, num = 0;
    for (const auto& c : cs)
        for (const auto& r : c.coeffs()) {
            if (r == 0) continue;
            den = lcm(den, denominator(r));
            num = boost::multiprecision::gcd(num, numerator(r));
        }
    Rational scale(den, num);  // positive
    for (auto& c : cs) c *= scale;
    return Poly(std::move(cs));
}

struct PseudoDivision {
    Poly quotient;
    Poly remainder;
    int steps = 0;  // lc(b)^steps * a = quotient * b + remainder
};

PseudoDivision pseudo_divide(const Poly& a, const Poly& b) {
    PseudoDivision d;
    d.remainder = a;
    const PiPoly lb = b.leading();
    while (!d.remainder.is_zero() && d.remainder.degree() >= b.degree()) {
        int shift = d.remainder.degree() - b.degree();
        Poly term = Poly::monomial(d.remainder.leading(), shift);
        d.quotient = d.quotient * Poly(lb) + term;
        d.remainder = d.remainder * lb - term * b;
        ++d.steps;
    }
    return d;
}

Poly prs_gcd(const Poly& a0, const Poly& b0, SignMeter& sign) {
    Poly a = primitive(a0, sign), b = primitive(b0, sign);
    while (!b.is_zero()) {
        Poly r = pseudo_divide(a, b).remainder;
        a = std::move(b);
        b = primitive(r, sign);
    }
    return a;
}

Poly squarefree_impl(const Poly& p, SignMeter& sign) {
    if (p.degree() < 1) return primitive(p, sign);
    Poly g = prs_gcd(p, derivative(p), sign);
    if (g.degree() < 1) return primitive(p, sign);
    auto d = pseudo_divide(p, g);
    if (!d.remainder.is_zero()) throw Error("squarefree_part: inexact division by gcd");
    return primitive(d.quotient, sign);
}

SturmChain sturm_impl(const Poly& p, SignMeter& sign) {
    if (p.is_zero()) throw Error("sturm_chain: zero polynomial");
    SturmChain sc;
    sc.source = p;
    Poly a = squarefree_impl(p, sign);
    sc.chain.push_back(a);
    if (a.degree() < 1) return sc;
    Poly b = primitive(derivative(a), sign);
    sc.chain.push_back(b);
    while (b.degree() > 0) {
        auto d = pseudo_divide(a, b);
        if (d.remainder.is_zero()) break;
        // next = -rem(a, b) = -remainder / lc(b)^steps
        bool flip = (d.steps % 2 == 1) && sign(b.leading()) < 0;
        Poly next = primitive(flip ? d.remainder : -d.remainder, sign);
        sc.chain.push_back(next);
        a = std::move(b);
        b = std::move(next);
    }
    return sc;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const SturmChain& c, const PiPoly& at, SignMeter& sign) {
    std::vector<int> s;
    s.reserve(c.chain.size());
    for (const auto& q : c.chain) s.push_back(sign(q.eval(at)));
    return variations(s);
}

int leading_sign(const Poly& p) {
    // Leading coefficients of chain elements are evaluated at pi.
    return pipoly_sign(p.leading());
}

} // namespace

SturmChain sturm_chain(const Poly& p, const Precision& prec) {
    SignMeter sign{prec};
    return sturm_impl(p, sign);
}

Poly squarefree_part(const Poly& p, const Precision& prec) {
    SignMeter sign{prec};
    return squarefree_impl(p, sign);
}

int sign_variations(const SturmChain& c, const PiPoly& at, const Precision& prec) {
    SignMeter sign{prec};
    return variations_at(c, at, sign);
}

int sign_variations_at_infinity(const SturmChain& c, bool positive) {
    std::vector<int> s;
    for (const auto& q : c.chain) {
        int ls = leading_sign(q);
        if (!positive && q.degree() % 2 == 1) ls = -ls;
        s.push_back(ls);
    }
    return variations(s);
}

int count_roots(const SturmChain& c, const Interval& iv, const Precision& prec) {
    const Poly& sq = c.chain.front();
    if (sq.eval(iv.lo).is_zero()) throw Error("interval endpoint " + format(iv.lo) + " is a root");
    if (sq.eval(iv.hi).is_zero()) throw Error("interval endpoint " + format(iv.hi) + " is a root");
    return sign_variations(c, iv.lo, prec) - sign_variations(c, iv.hi, prec);
}

int count_roots(const SturmChain& c) {
    return sign_variations_at_infinity(c, false) - sign_variations_at_infinity(c, true);
}

// ---------------------------------------------------------------------------

Rational interior_sample(const Interval& iv, const Precision& prec) {
    Rational mid = (approximate(iv.lo, 30) + approximate(iv.hi, 30)) / 2;
    Integer scale = 1;
    for (int d = 0; d <= 60; ++d, scale *= 10) {
        Integer n = numerator(mid) * scale * 2 + denominator(mid);  // round half up
        Integer q = n / (denominator(mid) * 2);
        if (n < 0 && n % (denominator(mid) * 2) != 0) q -= 1;
        Rational cand(q, scale);
        if (compare(PiPoly(cand), iv.lo, prec) > 0 && compare(iv.hi, PiPoly(cand), prec) > 0) return cand;
    }
    return mid;
}

namespace {

std::optional<Rational> find_nonpositive(const Poly& p, const Interval& iv, const Precision& prec) {
    Rational lo = approximate(iv.lo, 30), hi = approximate(iv.hi, 30);
    const int n = 256;
    for (int i = 1; i < n; ++i) {
        Rational x = lo + (hi - lo) * Rational(i, n);
        if (pipoly_sign(p.eval(PiPoly(x)), prec) <= 0) return x;
    }
    return std::nullopt;
}

[[noreturn]] void fail_at(const std::string& why, const Poly& p, const Interval& iv, const Precision& prec) {
    auto w = find_nonpositive(p, iv, prec);
    int s = w ? pipoly_sign(p.eval(PiPoly(*w)), prec) : 0;
    throw NotPositive(why, w, s);
}

} // namespace

PositivityCertificate prove_positive(const Poly& p, const Interval& iv, const Precision& prec) {
    SignMeter sign{prec};
    PositivityCertificate c;
    c.poly = p;
    c.interval = iv;
    if (p.is_zero()) throw NotPositive("polynomial is identically zero", std::nullopt, 0);

    Poly q = p;
    if (iv.lo_open)
        while (q.eval(iv.lo).is_zero()) {
            q = divide_linear(q, iv.lo);
            ++c.lo_multiplicity;
        }
    if (iv.hi_open)
        while (q.eval(iv.hi).is_zero()) {
            q = divide_linear(q, iv.hi);
            ++c.hi_multiplicity;
        }
    if (c.hi_multiplicity % 2 == 1) q = -q;
    if (!iv.lo_open && p.eval(iv.lo).is_zero())
        throw NotPositive("polynomial vanishes at closed endpoint " + format(iv.lo), std::nullopt, 0);
    if (!iv.hi_open && p.eval(iv.hi).is_zero())
        throw NotPositive("polynomial vanishes at closed endpoint " + format(iv.hi), std::nullopt, 0);

    SturmChain chain = sturm_impl(q, sign);
    c.chain_length = static_cast<int>(chain.chain.size());
    c.variations_lo = variations_at(chain, iv.lo, sign);
    c.variations_hi = variations_at(chain, iv.hi, sign);
    c.root_count = c.variations_lo - c.variations_hi;
    if (c.root_count != 0)
        fail_at(std::to_string(c.root_count) + " root(s) inside the interval", p, iv, prec);

    c.sample = interior_sample(iv, prec);
    c.sample_sign = sign(p.eval(PiPoly(c.sample)));
    if (c.sample_sign <= 0)
        throw NotPositive("polynomial is not positive at sample " + format(c.sample), c.sample, c.sample_sign);
    if (!iv.lo_open) {
        c.lo_sign = sign(p.eval(iv.lo));
        if (c.lo_sign < 0) throw NotPositive("negative at closed endpoint " + format(iv.lo), std::nullopt, -1);
    }
    if (!iv.hi_open) {
        c.hi_sign = sign(p.eval(iv.hi));
        if (c.hi_sign < 0) throw NotPositive("negative at closed endpoint " + format(iv.hi), std::nullopt, -1);
    }
    c.digits = sign.digits;
    return c;
}

bool check_positivity(const PositivityCertificate& c, const Precision& prec) {
    if (c.root_count != 0 || c.sample_sign != 1) return false;
    if (!c.interval.lo_open && c.lo_sign != 1) return false;
    if (!c.interval.hi_open && c.hi_sign != 1) return false;
    try {
        if (compare(c.interval.hi, c.interval.lo, prec) <= 0) return false;
        return prove_positive(c.poly, c.interval, prec) == c;
    } catch (const Error&) {
        return false;
    }
}

// ---------------------------------------------------------------------------

MonomialFactor factor_monomial(const Poly& p) {
    if (p.is_zero()) throw Error("factor_monomial: zero polynomial");
    int m = 0;
    while (p.coeff(m).is_zero()) ++m;
    std::vector<PiPoly> q(p.coeffs().begin() + m, p.coeffs().end());
    return {m, Poly(std::move(q))};
}

IntegerNormalized normalize_integer(const Poly& p) {
    if (p.is_zero()) throw Error("normalize_integer: zero polynomial");
    Integer den = 1, num = 0;
    for (const auto& c : p.coeffs())
        for (const auto& r : c.coeffs()) {
            if (r == 0) continue;
            den = lcm(den, denominator(r));
            num = boost::multiprecision::gcd(num, numerator(r));
        }
    Rational scale(num, den);
    Poly q = p * PiPoly(Rational(1 / scale));
    return {scale, q};
}

Poly substitute_square(const Poly& p) {
    std::vector<PiPoly> q;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i % 2 == 1) {
            if (!p.coeff(i).is_zero()) throw Error("substitute_square: odd power t^" + std::to_string(i) + " present");
            continue;
        }
        q.push_back(p.coeff(i));
    }
    return Poly(std::move(q));
}

Poly divide_linear(const Poly& p, const PiPoly& a) {
    if (p.degree() < 1) throw Error("divide_linear: degree too small");
    int n = p.degree();
    std::vector<PiPoly> b(static_cast<std::size_t>(n));
    b[static_cast<std::size_t>(n - 1)] = p.coeff(n);
    for (int i = n - 1; i >= 1; --i) b[static_cast<std::size_t>(i - 1)] = p.coeff(i) + a * b[static_cast<std::size_t>(i)];
    if (!(p.coeff(0) + a * b[0]).is_zero()) throw Error("divide_linear: " + format(a) + " is not a root");
    return Poly(std::move(b));
}

} // namespace mtprove
