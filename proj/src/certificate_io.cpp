#include "mtprove/certificate_io.hpp"

#include <json.hpp>

#include <set>

namespace mtprove {

using Json = nlohmann::ordered_json;

namespace {

// --- writing ---------------------------------------------------------------

Json rat(const Rational& r) { return to_string(r); }

Json pipoly(const PiPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(rat(c));
    return a;
}

Json poly(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(pipoly(c));
    return a;
}

Json interval(const Interval& iv) {
    return {{"lo", pipoly(iv.lo)}, {"hi", pipoly(iv.hi)}, {"lo_open", iv.lo_open}, {"hi_open", iv.hi_open}};
}

const char* arg_name(Arg a) { return a == Arg::Var ? "var" : a == Arg::Sin ? "sin" : "cos"; }

Json atom(const Atom& a) { return {{"fn", to_string(a.fn)}, {"mult", a.mult}, {"arg", arg_name(a.arg)}}; }

Json atom_powers(const std::map<Atom, int>& atoms) {
    Json a = Json::array();
    for (const auto& [at, e] : atoms) {
        Json j = atom(at);
        j["exp"] = e;
        a.push_back(j);
    }
    return a;
}

Json expr(const MTPExpr& e, Var v) {
    Json terms = Json::array();
    for (const auto& [m, c] : e.terms())
        terms.push_back({{"coeff", rat(c)}, {"pi", m.pi}, {"var", m.var}, {"atoms", atom_powers(m.atoms)}});
    return {{"text", format(e, v)}, {"terms", terms}};
}

Json goal(const Goal& g) {
    return {{"var", std::string(1, var_name(g.var))}, {"expr", expr(g.expr, g.var)}, {"interval", interval(g.interval)}};
}

Json rule(const BoundRule& r) { return {{"fn", to_string(r.fn)}, {"dir", to_string(r.dir)}, {"degree", r.degree}}; }

Json positivity(const PositivityCertificate& c) {
    return {{"poly", poly(c.poly)},
            {"interval", interval(c.interval)},
            {"lo_multiplicity", c.lo_multiplicity},
            {"hi_multiplicity", c.hi_multiplicity},
            {"chain_length", c.chain_length},
            {"variations_lo", c.variations_lo},
            {"variations_hi", c.variations_hi},
            {"root_count", c.root_count},
            {"sample", rat(c.sample)},
            {"sample_sign", c.sample_sign},
            {"lo_sign", c.lo_sign},
            {"hi_sign", c.hi_sign},
            {"digits", c.digits}};
}

Json step_json(const Step& s, Var v) {
    Json j = {{"kind", step_name(s)}};
    std::visit(
        [&](const auto& x) {
            using S = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<S, step::MulPositive>) {
                j["multiplier"] = expr(x.multiplier, v);
            } else if constexpr (std::is_same_v<S, step::Split>) {
                j["point"] = rat(x.point);
            } else if constexpr (std::is_same_v<S, step::ApplyBounds>) {
                Json as = Json::array();
                for (const auto& a : x.assignment) as.push_back({{"atom", atom(a.atom)}, {"rule", rule(a.rule)}});
                Json ap = Json::array();
                for (const auto& a : x.applied)
                    ap.push_back({{"atom", atom(a.atom)},
                                  {"rest", atom_powers(a.rest)},
                                  {"rule", rule(a.rule)},
                                  {"coefficient", poly(a.coefficient)},
                                  {"coefficient_sign", a.coefficient_sign},
                                  {"coefficient_certificate",
                                   a.coefficient_certificate ? positivity(*a.coefficient_certificate) : Json(nullptr)}});
                j["assignment"] = as;
                j["applied"] = ap;
            } else if constexpr (std::is_same_v<S, step::SecantBound>) {
                j["coefficient"] = expr(x.coefficient, v);
            } else if constexpr (std::is_same_v<S, step::FactorMonomial>) {
                j["multiplicity"] = x.multiplicity;
                j["scale"] = rat(x.scale);
            } else if constexpr (std::is_same_v<S, step::Sturm>) {
                j["certificate"] = positivity(x.certificate);
            }
        },
        s);
    return j;
}

Json node(const ProofNode& n) {
    Json side = Json::array(), children = Json::array();
    for (const auto& c : n.side) side.push_back(node(c));
    for (const auto& c : n.children) children.push_back(node(c));
    return {{"label", n.label}, {"goal", goal(n.goal)}, {"step", step_json(n.step, n.goal.var)}, {"side", side},
            {"children", children}};
}

// --- reading ---------------------------------------------------------------

[[noreturn]] void bad(const std::string& where, const std::string& why) { throw FormatError(where + ": " + why); }

void keys(const Json& j, const std::string& where, std::initializer_list<const char*> want) {
    if (!j.is_object()) bad(where, "expected an object");
    std::set<std::string> allowed(want.begin(), want.end());
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) bad(where, "unexpected key '" + k + "'");
    for (const char* k : want)
        if (!j.contains(k)) bad(where, std::string("missing key '") + k + "'");
}

const Json& arr(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    return j;
}

int integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where, "expected an integer");
    const auto v = j.get<long long>();
    if (v < -1000000 || v > 1000000) bad(where, "integer out of range");
    return static_cast<int>(v);
}

bool boolean(const Json& j, const std::string& where) {
    if (!j.is_boolean()) bad(where, "expected a boolean");
    return j.get<bool>();
}

std::string str(const Json& j, const std::string& where) {
    if (!j.is_string()) bad(where, "expected a string");
    return j.get<std::string>();
}

Rational read_rat(const Json& j, const std::string& where) {
    const std::string s = str(j, where);
    Rational r;
    try {
        r = rational_from_string(s);
    } catch (const Error& e) {
        bad(where, e.what());
    }
    if (to_string(r) != s) bad(where, "rational '" + s + "' is not in canonical n/d form");
    return r;
}

PiPoly read_pipoly(const Json& j, const std::string& where) {
    std::vector<Rational> c;
    for (const auto& x : arr(j, where)) c.push_back(read_rat(x, where));
    PiPoly p(c);
    if (p.coeffs().size() != c.size()) bad(where, "trailing zero coefficient");
    return p;
}

Poly read_poly(const Json& j, const std::string& where) {
    std::vector<PiPoly> c;
    for (const auto& x : arr(j, where)) c.push_back(read_pipoly(x, where));
    Poly p(c);
    if (p.coeffs().size() != c.size()) bad(where, "trailing zero coefficient");
    return p;
}

Interval read_interval(const Json& j, const std::string& where) {
    keys(j, where, {"lo", "hi", "lo_open", "hi_open"});
    Interval iv{read_pipoly(j["lo"], where + ".lo"), read_pipoly(j["hi"], where + ".hi"),
                boolean(j["lo_open"], where + ".lo_open"), boolean(j["hi_open"], where + ".hi_open")};
    try {
        return Interval::make(iv.lo, iv.hi, iv.lo_open, iv.hi_open);
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

Atom read_atom_fields(const Json& j, const std::string& where) {
    Atom a;
    try {
        a.fn = fn_from_string(str(j["fn"], where + ".fn"));
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        bad(where, e.what());
    }
    a.mult = integer(j["mult"], where + ".mult");
    const std::string arg = str(j["arg"], where + ".arg");
    if (arg == "var") a.arg = Arg::Var;
    else if (arg == "sin") a.arg = Arg::Sin;
    else if (arg == "cos") a.arg = Arg::Cos;
    else bad(where, "unknown atom argument '" + arg + "'");
    const bool trig = a.fn == Fn::Sin || a.fn == Fn::Cos;
    if (a.mult < 1 || (!trig && a.mult != 1)) bad(where, "invalid angle multiplier");
    if (a.fn != Fn::Atan && a.arg != Arg::Var) bad(where, "only atan takes sin or cos arguments");
    return a;
}

Atom read_atom(const Json& j, const std::string& where) {
    keys(j, where, {"fn", "mult", "arg"});
    return read_atom_fields(j, where);
}

std::map<Atom, int> read_atom_powers(const Json& j, const std::string& where) {
    std::map<Atom, int> out;
    std::optional<Atom> prev;
    for (const auto& x : arr(j, where)) {
        keys(x, where, {"fn", "mult", "arg", "exp"});
        Atom a = read_atom_fields(x, where);
        const int e = integer(x["exp"], where + ".exp");
        if (e == 0) bad(where, "zero exponent");
        if (prev && !(*prev < a)) bad(where, "atoms not in canonical order");
        prev = a;
        out[a] = e;
    }
    return out;
}

MTPExpr read_expr(const Json& j, Var v, const std::string& where) {
    keys(j, where, {"text", "terms"});
    MTPExpr e;
    std::optional<Monomial> prev;
    for (const auto& t : arr(j["terms"], where + ".terms")) {
        keys(t, where + ".terms", {"coeff", "pi", "var", "atoms"});
        const Rational c = read_rat(t["coeff"], where + ".coeff");
        if (c == 0) bad(where, "zero coefficient");
        Monomial m{integer(t["pi"], where + ".pi"), integer(t["var"], where + ".var"),
                   read_atom_powers(t["atoms"], where + ".atoms")};
        if (prev && !(*prev < m)) bad(where, "terms not in canonical order");
        prev = m;
        e += MTPExpr::term(c, m);
    }
    if (format(e, v) != str(j["text"], where + ".text")) bad(where, "text does not match the terms");
    return e;
}

Var read_var(const Json& j, const std::string& where) {
    const std::string s = str(j, where);
    if (s.size() != 1) bad(where, "unknown variable '" + s + "'");
    try {
        return var_from_name(s[0]);
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

Goal read_goal(const Json& j, const std::string& where) {
    keys(j, where, {"var", "expr", "interval"});
    const Var v = read_var(j["var"], where + ".var");
    return {read_expr(j["expr"], v, where + ".expr"), read_interval(j["interval"], where + ".interval"), v};
}

BoundRule read_rule(const Json& j, const std::string& where) {
    keys(j, where, {"fn", "dir", "degree"});
    BoundRule r;
    try {
        r.fn = fn_from_string(str(j["fn"], where + ".fn"));
        r.dir = direction_from_string(str(j["dir"], where + ".dir"));
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        bad(where, e.what());
    }
    r.degree = integer(j["degree"], where + ".degree");
    return r;
}

int read_sign(const Json& j, const std::string& where) {
    const int s = integer(j, where);
    if (s < -1 || s > 1) bad(where, "sign must be -1, 0 or 1");
    return s;
}

PositivityCertificate read_positivity(const Json& j, const std::string& where) {
    keys(j, where,
         {"poly", "interval", "lo_multiplicity", "hi_multiplicity", "chain_length", "variations_lo", "variations_hi",
          "root_count", "sample", "sample_sign", "lo_sign", "hi_sign", "digits"});
    PositivityCertificate c;
    c.poly = read_poly(j["poly"], where + ".poly");
    c.interval = read_interval(j["interval"], where + ".interval");
    c.lo_multiplicity = integer(j["lo_multiplicity"], where);
    c.hi_multiplicity = integer(j["hi_multiplicity"], where);
    c.chain_length = integer(j["chain_length"], where);
    c.variations_lo = integer(j["variations_lo"], where);
    c.variations_hi = integer(j["variations_hi"], where);
    c.root_count = integer(j["root_count"], where);
    c.sample = read_rat(j["sample"], where + ".sample");
    c.sample_sign = read_sign(j["sample_sign"], where);
    c.lo_sign = read_sign(j["lo_sign"], where);
    c.hi_sign = read_sign(j["hi_sign"], where);
    c.digits = integer(j["digits"], where);
    return c;
}

Step read_step(const Json& j, Var v, const std::string& where) {
    if (!j.is_object() || !j.contains("kind")) bad(where, "step needs a kind");
    const std::string kind = str(j["kind"], where + ".kind");
    if (kind == "substitute-sin") return keys(j, where, {"kind"}), Step{step::SubstituteSin{}};
    if (kind == "reflect") return keys(j, where, {"kind"}), Step{step::Reflect{}};
    if (kind == "to-fourier") return keys(j, where, {"kind"}), Step{step::ToFourier{}};
    if (kind == "subst-square") return keys(j, where, {"kind"}), Step{step::SubstituteSquare{}};
    if (kind == "pattern") return keys(j, where, {"kind"}), Step{step::PatternPositive{}};
    if (kind == "mul-positive") {
        keys(j, where, {"kind", "multiplier"});
        return step::MulPositive{read_expr(j["multiplier"], v, where + ".multiplier")};
    }
    if (kind == "split") {
        keys(j, where, {"kind", "point"});
        return step::Split{read_rat(j["point"], where + ".point")};
    }
    if (kind == "secant-arctan-cos") {
        keys(j, where, {"kind", "coefficient"});
        return step::SecantBound{read_expr(j["coefficient"], v, where + ".coefficient")};
    }
    if (kind == "factor-monomial") {
        keys(j, where, {"kind", "multiplicity", "scale"});
        return step::FactorMonomial{integer(j["multiplicity"], where), read_rat(j["scale"], where + ".scale")};
    }
    if (kind == "sturm") {
        keys(j, where, {"kind", "certificate"});
        return step::Sturm{read_positivity(j["certificate"], where + ".certificate")};
    }
    if (kind == "bound") {
        keys(j, where, {"kind", "assignment", "applied"});
        step::ApplyBounds b;
        for (const auto& a : arr(j["assignment"], where + ".assignment")) {
            keys(a, where + ".assignment", {"atom", "rule"});
            b.assignment.push_back({read_atom(a["atom"], where + ".atom"), read_rule(a["rule"], where + ".rule")});
        }
        for (const auto& a : arr(j["applied"], where + ".applied")) {
            keys(a, where + ".applied",
                 {"atom", "rest", "rule", "coefficient", "coefficient_sign", "coefficient_certificate"});
            AppliedBound ab;
            ab.atom = read_atom(a["atom"], where + ".atom");
            ab.rest = read_atom_powers(a["rest"], where + ".rest");
            ab.rule = read_rule(a["rule"], where + ".rule");
            ab.coefficient = read_poly(a["coefficient"], where + ".coefficient");
            ab.coefficient_sign = read_sign(a["coefficient_sign"], where);
            if (!a["coefficient_certificate"].is_null())
                ab.coefficient_certificate = read_positivity(a["coefficient_certificate"], where + ".coefficient_certificate");
            b.applied.push_back(std::move(ab));
        }
        return b;
    }
    bad(where, "unknown step kind '" + kind + "'");
}

ProofNode read_node(const Json& j, const std::string& where, int depth) {
    if (depth > 200) bad(where, "proof tree too deep");
    keys(j, where, {"label", "goal", "step", "side", "children"});
    ProofNode n;
    n.label = str(j["label"], where + ".label");
    n.goal = read_goal(j["goal"], where + ".goal");
    n.step = read_step(j["step"], n.goal.var, where + ".step");
    int i = 0;
    for (const auto& c : arr(j["side"], where + ".side")) n.side.push_back(read_node(c, where + ".side" + std::to_string(i++), depth + 1));
    i = 0;
    for (const auto& c : arr(j["children"], where + ".children"))
        n.children.push_back(read_node(c, where + "." + std::to_string(i++), depth + 1));
    return n;
}

} // namespace

std::string to_json(const Certificate& c) {
    Json notes = Json::array();
    for (const auto& n : c.notes) notes.push_back(n);
    Json doc = {{"schema", c.schema},
                {"goal", goal(c.goal)},
                {"proof", node(c.proof)},
                {"notes", notes},
                {"stats",
                 {{"nodes", c.stats.nodes},
                  {"sturm_leaves", c.stats.sturm_leaves},
                  {"max_poly_degree", c.stats.max_poly_degree},
                  {"max_digits", c.stats.max_digits}}}};
    return doc.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    keys(j, "document", {"schema", "goal", "proof", "notes", "stats"});
    Certificate c;
    c.schema = str(j["schema"], "schema");
    if (c.schema != kSchema) bad("schema", "unsupported schema '" + c.schema + "'");
    c.goal = read_goal(j["goal"], "goal");
    c.proof = read_node(j["proof"], "proof", 0);
    for (const auto& n : arr(j["notes"], "notes")) c.notes.push_back(str(n, "notes"));
    const Json& s = j["stats"];
    keys(s, "stats", {"nodes", "sturm_leaves", "max_poly_degree", "max_digits"});
    c.stats = {integer(s["nodes"], "stats"), integer(s["sturm_leaves"], "stats"), integer(s["max_poly_degree"], "stats"),
               integer(s["max_digits"], "stats")};
    return c;
}

CheckOutcome check_document(const std::string& text, const Precision& prec) {
    Certificate c;
    try {
        c = certificate_from_json(text);
    } catch (const ParseError& e) {
        return {CheckOutcome::InputError, e.what()};
    } catch (const std::exception& e) {
        return {CheckOutcome::Rejected, e.what()};
    }
    CheckResult r = verify_certificate(c, prec);
    return {r.accepted ? CheckOutcome::Accepted : CheckOutcome::Rejected, r.reason};
}

} // namespace mtprove
