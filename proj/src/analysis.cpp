#include "mtprove/analysis.hpp"

#include "mtprove/syntax.hpp"

#include <algorithm>
#include <sstream>

namespace mtprove {

LimitReport limit_check(const std::string& name, const MTPExpr& numerator, const MTPExpr& denominator,
                        const MTPExpr& expected, int k_lo, int k_hi) {
    if (k_lo < 2 || k_hi < k_lo) throw Error("limit check needs 2 <= k_lo <= k_hi");
    LimitReport r{name, expected, {}};
    if (expected.atoms().size() || std::any_of(expected.terms().begin(), expected.terms().end(),
                                               [](const auto& t) { return t.first.var != 0; }))
        throw Error("expected limit must be a constant");
    const Real want = eval(expected, Real(0));
    auto ratio = [&](int k, Real& x) {
        x = 1 - boost::multiprecision::pow(Real(10), -k);
        const Real d = eval(denominator, x);
        if (d == 0) throw Error("denominator vanishes at x = " + x.str(20));
        return Real(eval(numerator, x) / d);
    };
    Real x_prev;
    Real prev = ratio(k_lo - 1, x_prev);
    for (int k = k_lo; k <= k_hi; ++k) {
        LimitRow row;
        row.k = k;
        row.value = ratio(k, row.x);
        row.error = abs(row.value - want);
        const Real s0 = sqrt(1 - x_prev), s1 = sqrt(1 - row.x);
        row.extrapolated = (s0 * row.value - s1 * prev) / (s0 - s1);
        row.extrapolated_error = abs(row.extrapolated - want);
        r.rows.push_back(row);
        prev = row.value;
        x_prev = row.x;
    }
    return r;
}

std::vector<LimitReport> conjecture_limits() {
    auto x = [](const char* s) { return parse_expr(s).expr; };
    const MTPExpr den = x("x^3*atan(x)");
    return {limit_check("((asin(x)/x)^2 + atan(x)/x - 2)/(x^3*atan(x)) -> (pi^2+pi-8)/pi",
                        x("(asin(x)/x)^2 + atan(x)/x - 2"), den, x("(pi^2 + pi - 8)/pi")),
            limit_check("(2*asin(x)/x + atan(x)/x - 3)/(x^3*atan(x)) -> (5*pi-12)/pi",
                        x("2*asin(x)/x + atan(x)/x - 3"), den, x("(5*pi - 12)/pi"))};
}

bool limit_converges(const LimitReport& r, int k, const Real& tol) {
    bool ok = false;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (i > 0 && r.rows[i].error > r.rows[i - 1].error) return false;
        if (i > 0 && r.rows[i].extrapolated_error > r.rows[i - 1].extrapolated_error) return false;
        if (r.rows[i].k == k) ok = r.rows[i].extrapolated_error < tol;
    }
    return ok;
}

std::string format_report(const LimitReport& r) {
    std::ostringstream out;
    out << r.name << "\n  expected " << format(r.expected, Var::X) << " = " << eval(r.expected, Real(0)).str(20) << "\n";
    out << "  k  ratio                      |error|      extrapolated               |error|\n";
    for (const auto& row : r.rows) {
        out << "  " << row.k << "  " << row.value.str(22) << "  " << row.error.str(4, std::ios::scientific) << "  "
            << row.extrapolated.str(22) << "  " << row.extrapolated_error.str(4, std::ios::scientific) << "\n";
    }
    return out.str();
}

std::string sample_plot_data(const Goal& g, int n) {
    if (n < 2) throw Error("sample count must be at least 2");
    const Real lo = to_real(g.interval.lo), hi = to_real(g.interval.hi);
    std::ostringstream out;
    out << var_name(g.var) << ",value\n";
    for (int i = 0; i < n; ++i) {
        const Real t = lo + (hi - lo) * (Real(i) + Real(1) / 2) / n;
        out << t.str(25) << "," << eval(g.expr, t).str(25) << "\n";
    }
    return out.str();
}

} // namespace mtprove
