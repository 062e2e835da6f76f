#include "mtprove/numeric.hpp"

namespace mtprove {

Real to_real(const Rational& r) { return Real(numerator(r)) / Real(denominator(r)); }

Real pi_real() {
    static const Real pi = [] {
        PiEnclosure e = pi_enclosure(90);
        return to_real((e.lo + e.hi) / 2);
    }();
    return pi;
}

Real to_real(const PiPoly& p) {
    Real acc = 0;
    const Real pi = pi_real();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * pi + to_real(*it);
    return acc;
}

} // namespace mtprove
