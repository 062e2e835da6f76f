#include "mtprove/syntax.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mtprove {

namespace {

struct Token {
    enum Kind { Number, Ident, Sym, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s, std::size_t base) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '.') {
                ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            }
            out.push_back({Token::Number, s.substr(i, j - i), base + i});
            i = j;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), base + i});
            i = j;
        } else if (std::string("+-*/^(),[]>@").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Token::Sym, std::string(1, static_cast<char>(c)), base + i});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", base + i);
        }
    }
    out.push_back({Token::End, "", base + s.size()});
    return out;
}

Rational decimal(const std::string& s, std::size_t pos) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(Integer(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty()) throw ParseError("malformed number", pos);
    Integer den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(Integer(digits), den);
}

class Parser {
public:
    Parser(const std::string& text, std::size_t base = 0) : toks_(tokenize(text, base)) {}

    MTPExpr expr() {
        MTPExpr e = term();
        while (is_sym("+") || is_sym("-")) {
            const bool minus = take().text == "-";
            MTPExpr r = term();
            e = minus ? e - r : e + r;
        }
        return e;
    }

    const Token& peek() const { return toks_[i_]; }
    bool is_sym(const char* s) const { return peek().kind == Token::Sym && peek().text == s; }
    bool is_ident(const char* s) const { return peek().kind == Token::Ident && peek().text == s; }
    Token take() { return toks_[i_++]; }
    void expect_sym(const char* s) {
        if (!is_sym(s)) throw ParseError(std::string("expected '") + s + "'" + found(), peek().pos);
        ++i_;
    }
    bool at_end() const { return peek().kind == Token::End; }
    std::optional<Var> var() const { return var_; }

    std::string found() const {
        return peek().kind == Token::End ? " but reached the end of input" : " but found '" + peek().text + "'";
    }

private:
    MTPExpr term() {
        MTPExpr e = unary();
        while (is_sym("*") || is_sym("/")) {
            const Token op = take();
            const std::size_t pos = peek().pos;
            MTPExpr r = unary();
            if (op.text == "*") {
                e = e * r;
            } else {
                if (r.is_zero()) throw ParseError("division by zero", pos);
                if (r.size() != 1) throw ParseError("division by an expression with more than one term", pos);
                e = e.divide(r);
            }
        }
        return e;
    }

    MTPExpr unary() {
        if (is_sym("-")) {
            take();
            return -unary();
        }
        return power();
    }

    MTPExpr power() {
        MTPExpr base = primary();
        if (!is_sym("^")) return base;
        take();
        bool neg = false;
        if (is_sym("-")) {
            take();
            neg = true;
        }
        const Token t = take();
        if (t.kind != Token::Number || t.text.find('.') != std::string::npos)
            throw ParseError("exponent must be an integer", t.pos);
        if (t.text.size() > 4) throw ParseError("exponent too large", t.pos);
        const int e = std::stoi(t.text);
        if (neg && base.size() != 1) throw ParseError("negative power of an expression with more than one term", t.pos);
        if (neg && base.is_zero()) throw ParseError("negative power of zero", t.pos);
        return base.pow(neg ? -e : e);
    }

    void use_var(char c, std::size_t pos) {
        const Var v = var_from_name(c);
        if (var_ && *var_ != v)
            throw ParseError(std::string("mixed variables ") + var_name(*var_) + " and " + c, pos);
        var_ = v;
    }

    MTPExpr primary() {
        const Token t = take();
        if (t.kind == Token::Number) return MTPExpr(decimal(t.text, t.pos));
        if (t.kind == Token::Sym && t.text == "(") {
            MTPExpr e = expr();
            expect_sym(")");
            return e;
        }
        if (t.kind == Token::Ident) {
            if (t.text == "pi") return MTPExpr::pi();
            if (t.text == "x" || t.text == "t" || t.text == "z") {
                use_var(t.text[0], t.pos);
                return MTPExpr::variable();
            }
            if (t.text == "sin" || t.text == "cos" || t.text == "atan" || t.text == "asin") {
                expect_sym("(");
                const std::size_t pos = peek().pos;
                MTPExpr arg = expr();
                expect_sym(")");
                return apply(t.text, arg, pos);
            }
            throw ParseError("unsupported name '" + t.text + "'", t.pos);
        }
        if (t.kind == Token::End) throw ParseError("unexpected end of input", t.pos);
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }

    MTPExpr apply(const std::string& fn, const MTPExpr& arg, std::size_t pos) {
        auto single = [&]() -> const std::pair<const Monomial, Rational>* {
            return arg.size() == 1 ? &*arg.terms().begin() : nullptr;
        };
        const auto* s = single();
        const bool is_var = s && s->second == 1 && s->first == Monomial{0, 1, {}};
        if (fn == "sin" || fn == "cos") {
            if (s && s->first == Monomial{0, 1, {}} && s->second > 0 && denominator(s->second) == 1 &&
                s->second < 100000) {
                const int k = static_cast<int>(numerator(s->second));
                return MTPExpr::atom(fn == "sin" ? Atom::sin(k) : Atom::cos(k));
            }
            throw ParseError(fn + " needs an argument k*" + std::string(var_ ? std::string(1, var_name(*var_)) : "t") +
                                 " with a positive integer k",
                             pos);
        }
        if (fn == "asin") {
            if (is_var) return MTPExpr::atom(Atom::asin());
            throw ParseError("asin is supported only of the variable", pos);
        }
        if (is_var) return MTPExpr::atom(Atom::atan(Arg::Var));
        if (s && s->second == 1 && s->first.pi == 0 && s->first.var == 0 && s->first.atoms.size() == 1) {
            const auto& [a, e] = *s->first.atoms.begin();
            if (e == 1 && a == Atom::sin()) return MTPExpr::atom(Atom::atan(Arg::Sin));
            if (e == 1 && a == Atom::cos()) return MTPExpr::atom(Atom::atan(Arg::Cos));
        }
        throw ParseError("atan is supported only of the variable, its sine or its cosine", pos);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    std::optional<Var> var_;
};

PiPoly constant_of(const ParsedExpr& p, std::size_t pos) {
    auto c = as_pipoly(p.expr);
    if (!c || p.var) throw ParseError("expected a constant in Q[pi]", pos);
    return *c;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

} // namespace

ParsedExpr parse_expr(const std::string& text) {
    Parser p(text);
    MTPExpr e = p.expr();
    if (!p.at_end()) throw ParseError("unexpected '" + p.peek().text + "'", p.peek().pos);
    return {e, p.var()};
}

PiPoly parse_constant(const std::string& text) { return constant_of(parse_expr(text), 0); }

Rational parse_number(const std::string& text) {
    Parser p(text);
    ParsedExpr e{p.expr(), p.var()};
    if (!p.at_end()) throw ParseError("unexpected '" + p.peek().text + "'", p.peek().pos);
    PiPoly c = constant_of(e, 0);
    if (!c.is_constant()) throw ParseError("expected a rational number", 0);
    return c.constant();
}

Goal parse_goal(const std::string& text) {
    Parser p(text);
    const MTPExpr e = p.expr();
    std::optional<Var> v = p.var();
    p.expect_sym(">");
    const Token zero = p.take();
    if (zero.kind != Token::Number || decimal(zero.text, zero.pos) != 0)
        throw ParseError("goals have the form '<expr> > 0 on <interval>'", zero.pos);
    if (!p.is_ident("on")) throw ParseError("expected 'on'" + p.found(), p.peek().pos);
    p.take();
    bool lo_open;
    if (p.is_sym("(")) lo_open = true;
    else if (p.is_sym("[")) lo_open = false;
    else throw ParseError("expected '(' or '['" + p.found(), p.peek().pos);
    p.take();
    std::size_t pos = p.peek().pos;
    const PiPoly lo = constant_of({p.expr(), std::nullopt}, pos);
    p.expect_sym(",");
    pos = p.peek().pos;
    const PiPoly hi = constant_of({p.expr(), std::nullopt}, pos);
    bool hi_open;
    if (p.is_sym(")")) hi_open = true;
    else if (p.is_sym("]")) hi_open = false;
    else throw ParseError("expected ')' or ']'" + p.found(), p.peek().pos);
    p.take();
    if (!p.at_end()) throw ParseError("unexpected '" + p.peek().text + "'", p.peek().pos);
    if (p.var() != v) throw ParseError("interval endpoints must be constants", pos);
    Interval iv;
    try {
        iv = Interval::make(lo, hi, lo_open, hi_open);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        throw ParseError(err.what(), pos);
    }
    return {e, iv, v.value_or(Var::T)};
}

// --- scripts ---------------------------------------------------------------

namespace {

struct Line {
    int number;
    std::size_t offset;
    std::string text;
};

class ScriptParser {
public:
    explicit ScriptParser(const std::string& text) {
        std::size_t off = 0;
        int n = 0;
        while (off <= text.size()) {
            std::size_t nl = text.find('\n', off);
            if (nl == std::string::npos) nl = text.size();
            std::string raw = text.substr(off, nl - off);
            ++n;
            const auto hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::string t = trim(raw);
            if (!t.empty()) lines_.push_back({n, off + raw.find(t.front()), t});
            off = nl + 1;
        }
    }

    Script parse() {
        Script s;
        s.steps = block(false);
        s.notes = std::move(notes_);
        return s;
    }

private:
    [[noreturn]] void fail(const Line& l, const std::string& why) {
        throw ParseError("line " + std::to_string(l.number) + ": " + why, l.offset);
    }

    static std::pair<std::string, std::string> head(const std::string& t) {
        const auto sp = t.find_first_of(" \t");
        if (sp == std::string::npos) return {t, ""};
        return {t.substr(0, sp), trim(t.substr(sp + 1))};
    }

    std::vector<Directive> block(bool in_branch) {
        std::vector<Directive> out;
        bool previous_bound = false;
        while (i_ < lines_.size()) {
            const Line& l = lines_[i_];
            auto [cmd, rest] = head(l.text);
            if (cmd == "end") {
                if (!in_branch) fail(l, "'end' without a branch");
                return out;
            }
            ++i_;
            if (cmd == "note") {
                if (rest.empty()) fail(l, "empty note");
                notes_.push_back(rest);
                continue;
            }
            if (cmd == "bound") {
                auto bounds = parse_bound(l, rest);
                if (previous_bound) {
                    out.back().bounds.insert(out.back().bounds.end(), bounds.begin(), bounds.end());
                    out.back().text += "; " + l.text;
                } else {
                    Directive d = make(Directive::Kind::Bound, l);
                    d.bounds = std::move(bounds);
                    out.push_back(std::move(d));
                }
                previous_bound = true;
                continue;
            }
            previous_bound = false;
            auto simple = [&](Directive::Kind k) {
                if (!rest.empty()) fail(l, "'" + cmd + "' takes no arguments");
                out.push_back(make(k, l));
            };
            if (cmd == "substitute-sin") simple(Directive::Kind::SubstituteSin);
            else if (cmd == "reflect") simple(Directive::Kind::Reflect);
            else if (cmd == "secant-arctan-cos") simple(Directive::Kind::Secant);
            else if (cmd == "to-fourier") simple(Directive::Kind::ToFourier);
            else if (cmd == "factor-monomial") simple(Directive::Kind::FactorMonomial);
            else if (cmd == "subst-square") simple(Directive::Kind::SubstSquare);
            else if (cmd == "sturm") simple(Directive::Kind::Sturm);
            else if (cmd == "auto") simple(Directive::Kind::Auto);
            else if (cmd == "mul-positive") {
                Directive d = make(Directive::Kind::MulPositive, l);
                d.multiplier = sub_expr(l, rest).expr;
                out.push_back(std::move(d));
            } else if (cmd == "split") {
                Directive d = make(Directive::Kind::Split, l);
                try {
                    d.point = parse_number(rest);
                } catch (const Error& e) {
                    fail(l, std::string("split point: ") + e.what());
                }
                d.branches.push_back(branch(l, "left"));
                d.branches.push_back(branch(l, "right"));
                out.push_back(std::move(d));
                if (i_ < lines_.size() && !(in_branch && head(lines_[i_].text).first == "end"))
                    fail(lines_[i_], "no directive may follow the branches of a split");
            } else if (cmd == "branch") {
                fail(l, "'branch' outside a split");
            } else {
                fail(l, "unknown command '" + cmd + "'");
            }
        }
        if (in_branch) throw ParseError("branch is missing its 'end'", lines_.empty() ? 0 : lines_.back().offset);
        return out;
    }

    Script branch(const Line& split_line, const std::string& side) {
        if (i_ >= lines_.size()) fail(split_line, "split needs 'branch " + side + "'");
        const Line& l = lines_[i_];
        if (l.text != "branch " + side) fail(l, "expected 'branch " + side + "'");
        ++i_;
        Script s;
        s.steps = block(true);
        ++i_;  // end
        return s;
    }

    ParsedExpr sub_expr(const Line& l, const std::string& text) {
        try {
            return parse_expr(text);
        } catch (const ParseError& e) {
            fail(l, e.what());
        }
    }

    std::vector<BoundAssignment> parse_bound(const Line& l, const std::string& rest) {
        const auto at = rest.find('@');
        if (at == std::string::npos) fail(l, "bound needs '@ <atom>'");
        std::istringstream in(rest.substr(0, at));
        std::string fn_s, dir_s, deg_s, extra;
        in >> fn_s >> dir_s >> deg_s;
        if (deg_s.empty() || (in >> extra)) fail(l, "expected 'bound <fn> <lower|upper> <degree> @ <atom>'");
        BoundRule rule;
        try {
            rule.fn = fn_from_string(fn_s);
            rule.dir = direction_from_string(dir_s);
        } catch (const Error& e) {
            fail(l, e.what());
        }
        if (deg_s.find_first_not_of("0123456789") != std::string::npos || deg_s.size() > 4)
            fail(l, "degree must be a non-negative integer");
        rule.degree = std::stoi(deg_s);
        std::vector<BoundAssignment> out;
        std::stringstream sels(rest.substr(at + 1));
        std::string sel;
        while (std::getline(sels, sel, ',')) out.push_back({selector(l, rule.fn, trim(sel)), rule});
        if (out.empty()) fail(l, "bound needs at least one atom");
        return out;
    }

    Atom selector(const Line& l, Fn fn, const std::string& s) {
        if (s.empty()) fail(l, "empty atom selector");
        if (fn == Fn::Sin || fn == Fn::Cos) {
            std::size_t j = 0;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            std::string var = s.substr(j);
            if (!var.empty() && var[0] == '*') var = var.substr(1);
            if (var.size() != 1 || std::string("xtz").find(var[0]) == std::string::npos || (j > 6))
                fail(l, "malformed selector '" + s + "', expected e.g. 8t");
            const int k = j ? std::stoi(s.substr(0, j)) : 1;
            if (k < 1) fail(l, "angle multiplier must be positive in '" + s + "'");
            return fn == Fn::Sin ? Atom::sin(k) : Atom::cos(k);
        }
        if (fn == Fn::Atan) {
            if (s == "x" || s == "t" || s == "z") return Atom::atan(Arg::Var);
            if (s.size() == 6 && s.rfind("sin(", 0) == 0 && s[5] == ')') return Atom::atan(Arg::Sin);
            if (s.size() == 6 && s.rfind("cos(", 0) == 0 && s[5] == ')') return Atom::atan(Arg::Cos);
            fail(l, "malformed selector '" + s + "', expected sin(t), cos(t) or the variable");
        }
        fail(l, "no bounds exist for " + to_string(fn));
    }

    static Directive make(Directive::Kind k, const Line& l) {
        Directive d;
        d.kind = k;
        d.line = l.number;
        d.text = l.text;
        return d;
    }

    std::vector<Line> lines_;
    std::size_t i_ = 0;
    std::vector<std::string> notes_;
};

} // namespace

Script parse_script(const std::string& text) { return ScriptParser(text).parse(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace mtprove
