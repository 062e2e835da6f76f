#include "mtprove/mtp.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace mtprove {

char var_name(Var v) {
    switch (v) {
    case Var::X: return 'x';
    case Var::T: return 't';
    case Var::Z: return 'z';
    }
    return '?';
}

Var var_from_name(char c) {
    switch (c) {
    case 'x': return Var::X;
    case 't': return Var::T;
    case 'z': return Var::Z;
    }
    throw Error(std::string("unknown variable '") + c + "'");
}

std::string format(const Atom& a, Var v) {
    const std::string x(1, var_name(v));
    auto angle = [&](int k) { return k == 1 ? x : std::to_string(k) + "*" + x; };
    switch (a.fn) {
    case Fn::Sin: return "sin(" + angle(a.mult) + ")";
    case Fn::Cos: return "cos(" + angle(a.mult) + ")";
    case Fn::Asin: return "asin(" + x + ")";
    case Fn::Atan:
        switch (a.arg) {
        case Arg::Var: return "atan(" + x + ")";
        case Arg::Sin: return "atan(sin(" + x + "))";
        case Arg::Cos: return "atan(cos(" + x + "))";
        }
    }
    return "?";
}

// --- MTPExpr ---------------------------------------------------------------

MTPExpr::MTPExpr(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MTPExpr MTPExpr::term(const Rational& c, Monomial m) {
    MTPExpr e;
    for (auto it = m.atoms.begin(); it != m.atoms.end();) it = it->second == 0 ? m.atoms.erase(it) : std::next(it);
    if (c != 0) e.terms_.emplace(std::move(m), c);
    return e;
}

MTPExpr MTPExpr::from_pipoly(const PiPoly& p) {
    MTPExpr e;
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) e.terms_.emplace(Monomial{i, 0, {}}, p.coeff(i));
    return e;
}

MTPExpr MTPExpr::from_poly(const Poly& p) {
    MTPExpr e;
    for (int j = 0; j <= p.degree(); ++j) {
        const PiPoly c = p.coeff(j);
        for (int i = 0; i <= c.degree(); ++i)
            if (c.coeff(i) != 0) e.terms_.emplace(Monomial{i, j, {}}, c.coeff(i));
    }
    return e;
}

bool MTPExpr::contains(Fn f) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [a, e] : m.atoms)
            if (a.fn == f) return true;
    return false;
}

std::set<Atom> MTPExpr::atoms() const {
    std::set<Atom> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [a, e] : m.atoms) s.insert(a);
    return s;
}

MTPExpr MTPExpr::operator-() const {
    MTPExpr r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MTPExpr& MTPExpr::operator+=(const MTPExpr& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MTPExpr& MTPExpr::operator-=(const MTPExpr& o) { return *this += -o; }

static Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial m{a.pi + b.pi, a.var + b.var, a.atoms};
    for (const auto& [atom, e] : b.atoms) {
        int& x = m.atoms[atom];
        x += e;
        if (x == 0) m.atoms.erase(atom);
    }
    return m;
}

MTPExpr operator*(const MTPExpr& a, const MTPExpr& b) {
    MTPExpr r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r += MTPExpr::term(ca * cb, multiply(ma, mb));
    return r;
}

MTPExpr MTPExpr::pow(int e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw Error("negative power of an expression with more than one term");
        const auto& [m, c] = *terms_.begin();
        Monomial inv{-m.pi, -m.var, {}};
        for (const auto& [a, x] : m.atoms) inv.atoms[a] = -x;
        return term(1 / c, inv).pow(-e);
    }
    MTPExpr r(1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MTPExpr MTPExpr::divide(const MTPExpr& d) const {
    if (d.is_zero()) throw Error("division by zero");
    if (d.size() != 1) throw Error("division by an expression with more than one term");
    return *this * d.pow(-1);
}

std::optional<PiPoly> as_pipoly(const MTPExpr& e) {
    std::vector<Rational> c;
    for (const auto& [m, x] : e.terms()) {
        if (m.var != 0 || !m.atoms.empty() || m.pi < 0) return std::nullopt;
        if (static_cast<int>(c.size()) <= m.pi) c.resize(static_cast<std::size_t>(m.pi) + 1);
        c[static_cast<std::size_t>(m.pi)] += x;
    }
    return PiPoly(c);
}

std::optional<Poly> as_poly(const MTPExpr& e) {
    std::vector<PiPoly> c;
    for (const auto& [m, x] : e.terms()) {
        if (m.var < 0 || !m.atoms.empty() || m.pi < 0) return std::nullopt;
        if (static_cast<int>(c.size()) <= m.var) c.resize(static_cast<std::size_t>(m.var) + 1);
        c[static_cast<std::size_t>(m.var)] += PiPoly::monomial(x, m.pi);
    }
    return Poly(c);
}

// --- Fourier reduction -----------------------------------------------------

namespace {

// Linear combination of cos(kt) (kind 'c', k >= 0) and sin(kt) (kind 's', k >= 1).
using Basis = std::map<std::pair<char, int>, Rational>;

void add(Basis& b, char kind, int k, const Rational& c) {
    if (k < 0) {
        k = -k;
        if (kind == 's') return add(b, kind, k, -c);
    }
    if (kind == 's' && k == 0) return;
    Rational& x = b[{kind, k}];
    x += c;
    if (x == 0) b.erase({kind, k});
}

Basis times(const Basis& in, const Atom& a) {
    const Rational h(1, 2);
    const int m = a.mult;
    Basis out;
    for (const auto& [key, c] : in) {
        const auto [kind, k] = key;
        if (a.fn == Fn::Cos && kind == 'c') {
            add(out, 'c', k - m, h * c);
            add(out, 'c', k + m, h * c);
        } else if (a.fn == Fn::Sin && kind == 'c') {
            add(out, 's', m + k, h * c);
            add(out, 's', m - k, h * c);
        } else if (a.fn == Fn::Cos && kind == 's') {
            add(out, 's', k + m, h * c);
            add(out, 's', k - m, h * c);
        } else {
            add(out, 'c', k - m, h * c);
            add(out, 'c', k + m, -h * c);
        }
    }
    return out;
}

} // namespace

FourierForm to_fourier_form(const MTPExpr& e) {
    std::map<std::map<Atom, int>, Basis> cache;
    std::map<std::pair<char, int>, Poly> acc;
    for (const auto& [m, c] : e.terms()) {
        if (m.pi < 0) throw Error("negative power of pi in Fourier reduction");
        if (m.var < 0) throw Error("negative power of the variable in Fourier reduction");
        auto it = cache.find(m.atoms);
        if (it == cache.end()) {
            Basis b{{{'c', 0}, Rational(1)}};
            for (const auto& [a, x] : m.atoms) {
                if (a.fn == Fn::Atan || a.fn == Fn::Asin)
                    throw Error("inverse trigonometric atom present in Fourier reduction; apply bounds first");
                if (x < 0) throw Error("negative power of a trigonometric atom in Fourier reduction");
                for (int i = 0; i < x; ++i) b = times(b, a);
            }
            it = cache.emplace(m.atoms, std::move(b)).first;
        }
        for (const auto& [key, bc] : it->second) acc[key] += Poly::monomial(PiPoly::monomial(c * bc, m.pi), m.var);
    }
    FourierForm f;
    for (auto& [key, p] : acc) {
        if (p.is_zero()) continue;
        if (key.second == 0) f.constant = p;
        else if (key.first == 'c') f.cos.emplace(key.second, p);
        else f.sin.emplace(key.second, p);
    }
    return f;
}

MTPExpr from_fourier(const FourierForm& f) {
    MTPExpr e = MTPExpr::from_poly(f.constant);
    for (const auto& [k, p] : f.cos) e += MTPExpr::from_poly(p) * MTPExpr::atom(Atom::cos(k));
    for (const auto& [k, p] : f.sin) e += MTPExpr::from_poly(p) * MTPExpr::atom(Atom::sin(k));
    return e;
}

// --- substitutions ---------------------------------------------------------

MTPExpr reflect(const MTPExpr& e) {
    const MTPExpr image = MTPExpr::pi() * Rational(1, 2) - MTPExpr::variable();
    MTPExpr out;
    for (const auto& [m, c] : e.terms()) {
        if (m.var < 0) throw Error("cannot reflect a negative power of the variable");
        Monomial rest{m.pi, 0, {}};
        for (const auto& [a, x] : m.atoms) {
            Atom b = a;
            if (a.fn == Fn::Sin || a.fn == Fn::Cos) {
                if (a.mult != 1) throw Error("cannot reflect the multiple-angle atom " + format(a, Var::T));
                b.fn = a.fn == Fn::Sin ? Fn::Cos : Fn::Sin;
            } else if (a.fn == Fn::Atan && a.arg != Arg::Var) {
                b.arg = a.arg == Arg::Sin ? Arg::Cos : Arg::Sin;
            } else {
                throw Error("cannot reflect " + format(a, Var::T));
            }
            rest.atoms[b] = x;
        }
        out += MTPExpr::term(c, rest) * image.pow(m.var);
    }
    return out;
}

Interval reflect(const Interval& iv) {
    const PiPoly half_pi = PiPoly::pi() * Rational(1, 2);
    return Interval::make(half_pi - iv.hi, half_pi - iv.lo, iv.hi_open, iv.lo_open);
}

MTPExpr substitute_sin(const MTPExpr& e) {
    MTPExpr out;
    for (const auto& [m, c] : e.terms()) {
        Monomial r{m.pi, 0, {}};
        if (m.var != 0) r.atoms[Atom::sin()] = m.var;
        for (const auto& [a, x] : m.atoms) {
            if (a.fn == Fn::Asin) r.var += x;
            else if (a.fn == Fn::Atan && a.arg == Arg::Var) r.atoms[Atom::atan(Arg::Sin)] += x;
            else throw Error("cannot substitute x = sin t into " + format(a, Var::X));
        }
        out += MTPExpr::term(c, r);
    }
    return out;
}

Interval substitute_sin(const Interval& iv) {
    auto map = [](const PiPoly& x) {
        if (x == PiPoly(0)) return PiPoly(0);
        if (x == PiPoly(Rational(1, 2))) return PiPoly::pi() * Rational(1, 6);
        if (x == PiPoly(1)) return PiPoly::pi() * Rational(1, 2);
        throw Error("x = sin t substitution supports endpoints 0, 1/2 and 1 only, got " + format(x));
    };
    return Interval::make(map(iv.lo), map(iv.hi), iv.lo_open, iv.hi_open);
}

// --- positivity patterns ---------------------------------------------------

bool variable_positive(const Interval& iv, const Precision& prec) {
    int s = pipoly_sign(iv.lo, prec);
    return s > 0 || (s == 0 && iv.lo_open);
}

bool in_open_quadrant(const Interval& iv, const Precision& prec) {
    int s = pipoly_sign(PiPoly::pi() * Rational(1, 2) - iv.hi, prec);
    return variable_positive(iv, prec) && (s > 0 || (s == 0 && iv.hi_open));
}

bool positive_by_pattern(const MTPExpr& e, const Interval& iv, Var v, const Precision& prec) {
    if (e.size() != 1) return false;
    const auto& [m, c] = *e.terms().begin();
    if (c <= 0) return false;
    if (m.var != 0 && !variable_positive(iv, prec)) return false;
    for (const auto& [a, x] : m.atoms) {
        bool ok = false;
        switch (a.fn) {
        case Fn::Sin:
        case Fn::Cos: ok = v == Var::T && a.mult == 1 && in_open_quadrant(iv, prec); break;
        case Fn::Atan:
            ok = a.arg == Arg::Var ? variable_positive(iv, prec) : v == Var::T && in_open_quadrant(iv, prec);
            break;
        case Fn::Asin: ok = variable_positive(iv, prec); break;
        }
        if (!ok) return false;
    }
    return true;
}

// --- evaluation and printing -----------------------------------------------

Real eval(const MTPExpr& e, const Real& at) {
    const Real pi = pi_real();
    std::map<Atom, Real> values;
    Real sum = 0;
    for (const auto& [m, c] : e.terms()) {
        Real v = to_real(c);
        if (m.pi) v *= boost::multiprecision::pow(pi, m.pi);
        if (m.var) v *= boost::multiprecision::pow(at, m.var);
        for (const auto& [a, x] : m.atoms) {
            auto it = values.find(a);
            if (it == values.end()) {
                Real y;
                switch (a.fn) {
                case Fn::Sin: y = sin(at * a.mult); break;
                case Fn::Cos: y = cos(at * a.mult); break;
                case Fn::Asin: y = asin(at); break;
                case Fn::Atan: y = atan(a.arg == Arg::Var ? at : a.arg == Arg::Sin ? Real(sin(at)) : Real(cos(at))); break;
                }
                it = values.emplace(a, y).first;
            }
            v *= boost::multiprecision::pow(it->second, x);
        }
        sum += v;
    }
    return sum;
}

std::string format(const MTPExpr& e, Var v) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        std::vector<std::string> factors;
        auto power = [](std::string base, int x) { return x == 1 ? base : base + "^" + std::to_string(x); };
        if (m.pi) factors.push_back(power("pi", m.pi));
        if (m.var) factors.push_back(power(std::string(1, var_name(v)), m.var));
        for (const auto& [a, x] : m.atoms) factors.push_back(power(format(a, v), x));
        const Rational mag = abs(c);
        if (mag != 1 || factors.empty()) factors.insert(factors.begin(), format(mag));
        std::string body;
        for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
        if (first) out += (c < 0 ? "-" : "") + body;
        else out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

} // namespace mtprove
