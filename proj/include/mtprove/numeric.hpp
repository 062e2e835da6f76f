#pragma once

// High-precision floating evaluation used for sampling, pre-checks and limits.

#include "mtprove/coeff.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace mtprove {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>>;

Real to_real(const Rational& r);
// pi is taken from a 90-digit enclosure.
Real pi_real();
Real to_real(const PiPoly& p);

} // namespace mtprove
