#pragma once

// Exact coefficient arithmetic: rationals and the ring Q[pi], plus rigorous
// sign determination of Q[pi] elements through rational enclosures of pi.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <vector>

namespace mtprove {

using Integer = boost::multiprecision::mpz_int;
// Always canonical (reduced, positive denominator).
using Rational = boost::multiprecision::mpq_rational;

std::string to_string(const Rational& r);
// Accepts "n", "-n" and "n/d".
Rational rational_from_string(const std::string& s);

// Precision policy for sign decisions.
struct Precision {
    int start_digits = 20;
    int max_digits = 10000;
};

struct PiEnclosure {
    Rational lo;
    Rational hi;
    int digits = 0;
};

// Rational interval of width <= 10^-digits containing pi, from Machin's
// formula with directed rounding and the alternating-series tail bound.
// Results are memoized in a mutex-protected cache.
PiEnclosure pi_enclosure(int digits);

// Element of Q[pi]; coefficient i multiplies pi^i.
class PiPoly {
public:
    PiPoly() = default;
    PiPoly(int c) : PiPoly(Rational(c)) {}
    PiPoly(const Rational& c);
    explicit PiPoly(std::vector<Rational> coeffs);

    static PiPoly pi() { return PiPoly(std::vector<Rational>{0, 1}); }
    static PiPoly monomial(const Rational& c, int pi_power);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // -1 for the zero element.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    Rational constant() const { return coeff(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    // Number of nonzero coefficients.
    int term_count() const;
    // Largest k with pi^k dividing this element (0 for the zero element).
    int pi_valuation() const;

    PiPoly operator-() const;
    PiPoly& operator+=(const PiPoly& o);
    PiPoly& operator-=(const PiPoly& o);
    PiPoly& operator*=(const PiPoly& o);
    PiPoly& operator*=(const Rational& c);
    friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
    friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
    friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
    friend PiPoly operator*(PiPoly a, const Rational& c) { return a *= c; }
    friend PiPoly operator*(const Rational& c, PiPoly a) { return a *= c; }
    friend bool operator==(const PiPoly&, const PiPoly&) = default;

    PiPoly pow(int e) const;
    // Multiply by pi^k (k >= 0) or divide by pi^-k when exactly divisible.
    PiPoly shift(int k) const;

    // Euclidean division over Q.
    static void divmod(const PiPoly& a, const PiPoly& b, PiPoly& q, PiPoly& r);
    // Exact quotient; throws Error when b does not divide a.
    PiPoly exact_div(const PiPoly& b) const;
    // Monic gcd (zero only when both are zero).
    static PiPoly gcd(const PiPoly& a, const PiPoly& b);

    // Value at a rational point.
    Rational eval(const Rational& x) const;
    // Rational interval enclosing the value at pi, given an enclosure of pi.
    std::pair<Rational, Rational> enclose(const PiEnclosure& e) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct SignResult {
    int sign = 0;
    int digits = 0;  // precision at which the sign was separated (0 for the zero element)
};

// Exact sign of p(pi). Tries start_digits * 2^j digits for j = 0, 1, ...
// while within max_digits, so the recorded precision does not depend on the
// cap; throws SignUndecided when the next level would exceed it.
SignResult pipoly_sign_ex(const PiPoly& p, const Precision& prec = {});
int pipoly_sign(const PiPoly& p, const Precision& prec = {});

// Sign of a - b.
inline int compare(const PiPoly& a, const PiPoly& b, const Precision& prec = {}) {
    return pipoly_sign(a - b, prec);
}

// Rational approximation of p(pi) within about 10^-digits.
Rational approximate(const PiPoly& p, int digits = 30);

// Human-readable form, e.g. "-31/96*pi^2 - 43/48*pi + 31/12".
std::string format(const PiPoly& p);
std::string format(const Rational& r);  // "n" or "n/d"

std::vector<std::string> to_strings(const PiPoly& p);
PiPoly pipoly_from_strings(const std::vector<std::string>& s);

} // namespace mtprove
