#pragma once

// Numeric limit estimates and sample tables.

#include "mtprove/prover.hpp"

#include <string>
#include <vector>

namespace mtprove {

struct LimitRow {
    int k = 0;         // x = 1 - 10^-k
    Real x;
    Real value;        // ratio at x
    Real error;        // |value - expected|
    Real extrapolated; // linear extrapolation in sqrt(1 - x) from rows k-1 and k
    Real extrapolated_error;
};

struct LimitReport {
    std::string name;
    MTPExpr expected;  // constant, may contain negative powers of pi
    std::vector<LimitRow> rows;
};

// numerator(x) / denominator(x) at x = 1 - 10^-k for k = k_lo..k_hi, both
// expressions in x.
LimitReport limit_check(const std::string& name, const MTPExpr& numerator, const MTPExpr& denominator,
                        const MTPExpr& expected, int k_lo = 3, int k_hi = 8);

// The two conjecture ratios and their expected limits at x -> 1-.
std::vector<LimitReport> conjecture_limits();

// Extrapolated error below tol at k and non-increasing errors throughout.
bool limit_converges(const LimitReport& r, int k, const Real& tol);

std::string format_report(const LimitReport& r);

// CSV with header "<var>,value" and n rows at the midpoints of n equal cells.
std::string sample_plot_data(const Goal& g, int n);

} // namespace mtprove
