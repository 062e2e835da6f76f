#include "mtprove/coeff.hpp"

#include "mtprove/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace mtprove {

std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(i), part.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw Error("malformed rational literal '" + s + "'");
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw Error("malformed rational literal '" + s + "'");
    Integer d(den);
    if (d == 0) throw Error("zero denominator in '" + s + "'");
    return Rational(Integer(num), d);
}

// ---------------------------------------------------------------------------
// pi enclosures

namespace {

Integer pow10(int n) {
    Integer r = 1;
    for (int i = 0; i < n; ++i) r *= 10;
    return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

// Scaled bounds [lo, hi] / scale on arctan(1/x), summing the alternating
// series with directed rounding and adding the first omitted term as tail.
std::pair<Integer, Integer> arctan_inv_bounds(int x, const Integer& scale) {
    Integer lo = 0, hi = 0;
    Integer power = x;  // x^(2k+1)
    const Integer x2 = Integer(x) * x;
    for (long k = 0;; ++k) {
        Integer den = power * (2 * k + 1);
        if (den > scale) {
            Integer tail = ceil_div(scale, den);
            lo -= tail;
            hi += tail;
            break;
        }
        if (k % 2 == 0) {
            lo += floor_div(scale, den);
            hi += ceil_div(scale, den);
        } else {
            lo -= ceil_div(scale, den);
            hi -= floor_div(scale, den);
        }
        power *= x2;
    }
    return {lo, hi};
}

// pi/4 = 4 arctan(1/5) - arctan(1/239).
std::pair<Rational, Rational> machin_enclosure(int digits) {
    for (int guard = 10;; guard += 10) {
        Integer scale = pow10(digits + guard);
        auto [a_lo, a_hi] = arctan_inv_bounds(5, scale);
        auto [b_lo, b_hi] = arctan_inv_bounds(239, scale);
        Rational lo(Integer(16 * a_lo - 4 * b_hi), scale);
        Rational hi(Integer(16 * a_hi - 4 * b_lo), scale);
        if (hi - lo <= Rational(Integer(1), pow10(digits))) return {lo, hi};
    }
}

// Master enclosures are computed at a fixed ladder of precisions and each
// is intersected with the previous rung, so rounding any of them outward
// yields enclosures that nest as digits grow.
int master_rung(int digits) {
    int rung = 64;
    while (rung < digits + 4) rung *= 4;
    return rung;
}

std::mutex cache_mutex;
std::map<int, std::pair<Rational, Rational>> master_cache;

std::pair<Rational, Rational> master(int rung) {
    {
        std::lock_guard lock(cache_mutex);
        auto it = master_cache.find(rung);
        if (it != master_cache.end()) return it->second;
    }
    auto enc = machin_enclosure(rung);
    if (rung > 64) {
        auto prev = master(rung / 4);
        enc.first = std::max(enc.first, prev.first);
        enc.second = std::min(enc.second, prev.second);
    }
    std::lock_guard lock(cache_mutex);
    master_cache.emplace(rung, enc);
    return enc;
}

} // namespace

PiEnclosure pi_enclosure(int digits) {
    if (digits < 1) throw Error("pi_enclosure: digits must be positive");
    auto [mlo, mhi] = master(master_rung(digits));
    Integer grid = pow10(digits + 1);
    Integer lo_num = floor_div(numerator(mlo) * grid, denominator(mlo));
    Integer hi_num = ceil_div(numerator(mhi) * grid, denominator(mhi));
    return {Rational(lo_num, grid), Rational(hi_num, grid), digits};
}

// ---------------------------------------------------------------------------
// PiPoly

PiPoly::PiPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

PiPoly::PiPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PiPoly PiPoly::monomial(const Rational& c, int pi_power) {
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(pi_power) + 1);
    v.back() = c;
    return PiPoly(std::move(v));
}

void PiPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PiPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

int PiPoly::term_count() const {
    return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

int PiPoly::pi_valuation() const {
    int k = 0;
    while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
    return coeffs_.empty() ? 0 : k;
}

PiPoly PiPoly::operator-() const {
    PiPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PiPoly(std::move(r));
}

PiPoly& PiPoly::operator*=(const PiPoly& o) { return *this = *this * o; }

PiPoly& PiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PiPoly PiPoly::pow(int e) const {
    if (e < 0) throw Error("PiPoly::pow: negative exponent");
    PiPoly result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

PiPoly PiPoly::shift(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k > 0) {
        std::vector<Rational> v(static_cast<std::size_t>(k));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return PiPoly(std::move(v));
    }
    if (pi_valuation() < -k) throw Error("PiPoly::shift: not divisible by pi^" + std::to_string(-k));
    return PiPoly(std::vector<Rational>(coeffs_.begin() - k, coeffs_.end()));
}

void PiPoly::divmod(const PiPoly& a, const PiPoly& b, PiPoly& q, PiPoly& r) {
    if (b.is_zero()) throw Error("PiPoly::divmod: division by zero");
    r = a;
    std::vector<Rational> qc(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
    const Rational& lb = b.coeffs_.back();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational f = r.coeffs_.back() / lb;
        qc[static_cast<std::size_t>(shift)] = f;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[j + static_cast<std::size_t>(shift)] -= f * b.coeffs_[j];
        r.coeffs_.back() = 0;
        r.trim();
    }
    q = PiPoly(std::move(qc));
}

PiPoly PiPoly::exact_div(const PiPoly& b) const {
    PiPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw Error("PiPoly::exact_div: inexact division");
    return q;
}

PiPoly PiPoly::gcd(const PiPoly& a, const PiPoly& b) {
    PiPoly x = a, y = b;
    while (!y.is_zero()) {
        PiPoly q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * Rational(1 / x.leading());
}

Rational PiPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Rational, Rational> PiPoly::enclose(const PiEnclosure& e) const {
    if (coeffs_.empty()) return {0, 0};
    Rational lo = coeffs_.back(), hi = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        // [lo, hi] * [e.lo, e.hi] with e.lo > 0
        Rational nlo, nhi;
        if (lo >= 0) {
            nlo = lo * e.lo;
            nhi = hi * e.hi;
        } else if (hi <= 0) {
            nlo = lo * e.hi;
            nhi = hi * e.lo;
        } else {
            nlo = lo * e.hi;
            nhi = hi * e.hi;
        }
        lo = nlo + *it;
        hi = nhi + *it;
    }
    return {lo, hi};
}

SignResult pipoly_sign_ex(const PiPoly& p, const Precision& prec) {
    if (p.is_zero()) return {0, 0};
    if (p.is_constant()) return {p.constant() > 0 ? 1 : -1, 0};
    if (prec.start_digits < 1 || prec.start_digits > prec.max_digits)
        throw Error("precision cap " + std::to_string(prec.max_digits) + " is below the starting precision " +
                    std::to_string(prec.start_digits));
    for (int digits = prec.start_digits;; digits *= 2) {
        auto [lo, hi] = p.enclose(pi_enclosure(digits));
        if (lo > 0) return {1, digits};
        if (hi < 0) return {-1, digits};
        if (2 * digits > prec.max_digits) throw SignUndecided(digits);
    }
}

int pipoly_sign(const PiPoly& p, const Precision& prec) { return pipoly_sign_ex(p, prec).sign; }

Rational approximate(const PiPoly& p, int digits) {
    auto [lo, hi] = p.enclose(pi_enclosure(digits + 2 * std::max(0, p.degree())));
    return (lo + hi) / 2;
}

std::string format(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string format(const PiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0) {
            out += format(mag);
            continue;
        }
        if (mag != 1) out += format(mag) + "*";
        out += "pi";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::vector<std::string> to_strings(const PiPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

PiPoly pipoly_from_strings(const std::vector<std::string>& s) {
    std::vector<Rational> v;
    v.reserve(s.size());
    for (const auto& x : s) v.push_back(rational_from_string(x));
    if (!v.empty() && v.back() == 0) throw Error("Q[pi] coefficient array has a trailing zero");
    return PiPoly(std::move(v));
}

} // namespace mtprove
