#pragma once

// Univariate polynomials over Q[pi] and the Sturm-sequence positivity kernel.

#include "mtprove/coeff.hpp"
#include "mtprove/error.hpp"

#include <optional>
#include <vector>

namespace mtprove {

// Dense polynomial in one real variable; coefficient i multiplies t^i.
class Poly {
public:
    Poly() = default;
    Poly(PiPoly c);
    explicit Poly(std::vector<PiPoly> coeffs);

    static Poly variable() { return Poly(std::vector<PiPoly>{PiPoly(), PiPoly(1)}); }
    static Poly monomial(PiPoly c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<PiPoly>& coeffs() const { return coeffs_; }
    PiPoly coeff(int i) const;
    PiPoly leading() const { return coeffs_.empty() ? PiPoly() : coeffs_.back(); }
    // Largest pi-degree among the coefficients.
    int pi_degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const PiPoly& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const PiPoly& c) { return a *= c; }
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly pow(int e) const;
    PiPoly eval(const PiPoly& at) const;
    // p(q(t))
    Poly compose(const Poly& q) const;

private:
    void trim();
    std::vector<PiPoly> coeffs_;
};

Poly derivative(const Poly& p);

// Sign of p(at), decided exactly.
int eval_sign(const Poly& p, const PiPoly& at, const Precision& prec = {});

// Interval with endpoints in Q[pi]; lo < hi is enforced on construction.
struct Interval {
    PiPoly lo;
    PiPoly hi;
    bool lo_open = true;
    bool hi_open = true;

    static Interval make(PiPoly lo, PiPoly hi, bool lo_open, bool hi_open, const Precision& prec = {});
    bool contains(const PiPoly& x, const Precision& prec = {}) const;
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct SturmChain {
    Poly source;               // the polynomial the chain was requested for
    std::vector<Poly> chain;   // squarefree part of source, its derivative, ...
};

// Primitive pseudo-remainder Sturm sequence; every element is a positive
// Q(pi)-multiple of the corresponding element of the classical sequence.
SturmChain sturm_chain(const Poly& p, const Precision& prec = {});

// Number of sign variations of the chain evaluated at a point, or at -inf/+inf.
int sign_variations(const SturmChain& c, const PiPoly& at, const Precision& prec = {});
int sign_variations_at_infinity(const SturmChain& c, bool positive);

// Distinct real roots inside the interval (endpoints excluded). Throws when
// an endpoint is itself a root.
int count_roots(const SturmChain& c, const Interval& iv, const Precision& prec = {});
int count_roots(const SturmChain& c);  // whole real line

// Squarefree part (up to a nonzero Q(pi) scalar).
Poly squarefree_part(const Poly& p, const Precision& prec = {});

// Certificate that p > 0 on an interval.
struct PositivityCertificate {
    Poly poly;
    Interval interval;
    int lo_multiplicity = 0;  // factors (t - lo) removed at an open lower endpoint
    int hi_multiplicity = 0;  // factors (t - hi) removed at an open upper endpoint
    int chain_length = 0;
    int variations_lo = 0;
    int variations_hi = 0;
    int root_count = 0;
    Rational sample;
    int sample_sign = 0;
    int lo_sign = 0;  // sign of poly at lo when lo is closed, else 0
    int hi_sign = 0;
    int digits = 0;   // largest precision needed by any sign decision

    friend bool operator==(const PositivityCertificate&, const PositivityCertificate&) = default;
};

class NotPositive : public Error {
public:
    NotPositive(const std::string& what, std::optional<Rational> witness, int witness_sign)
        : Error(what), witness_(std::move(witness)), witness_sign_(witness_sign) {}
    const std::optional<Rational>& witness() const { return witness_; }
    int witness_sign() const { return witness_sign_; }

private:
    std::optional<Rational> witness_;
    int witness_sign_;
};

// Deterministic rational strictly inside the interval.
Rational interior_sample(const Interval& iv, const Precision& prec = {});

// Decides p > 0 on the interval (respecting endpoint strictness). Throws
// NotPositive on failure.
PositivityCertificate prove_positive(const Poly& p, const Interval& iv, const Precision& prec = {});

// Re-derives every field of a positivity certificate from its polynomial and
// interval; returns false on any mismatch.
bool check_positivity(const PositivityCertificate& c, const Precision& prec = {});

struct MonomialFactor {
    int multiplicity = 0;
    Poly quotient;
};
// p = t^m * q with q(0) != 0.
MonomialFactor factor_monomial(const Poly& p);

struct IntegerNormalized {
    Rational scale;
    Poly poly;
};
// p = scale * q, scale > 0, q has integer rational parts with content 1.
IntegerNormalized normalize_integer(const Poly& p);

// q(z) = p(sqrt z); throws when p has an odd power.
Poly substitute_square(const Poly& p);

// Exact quotient by (t - a); throws when a is not a root.
Poly divide_linear(const Poly& p, const PiPoly& a);

} // namespace mtprove
