#include "wb/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace wb {

namespace {
Term mk(Tag tag, std::string a, std::string b, Term l, Term r) {
    return std::make_shared<const Node>(Node{tag, std::move(a), std::move(b), std::move(l), std::move(r)});
}
}  // namespace

Term var(std::string x) { return mk(Tag::Var, std::move(x), "", nullptr, nullptr); }
Term cnst(std::string c) { return mk(Tag::Const, std::move(c), "", nullptr, nullptr); }
Term app(Term f, Term x) { return mk(Tag::RApp, "", "", std::move(f), std::move(x)); }
Term lapp(Term arg, Term f) { return mk(Tag::LApp, "", "", std::move(arg), std::move(f)); }
Term lam(std::string x, Term body) { return mk(Tag::RAbs, std::move(x), "", std::move(body), nullptr); }
Term llam(std::string x, Term body) { return mk(Tag::LAbs, std::move(x), "", std::move(body), nullptr); }
Term tensor(Term m, Term n) { return mk(Tag::Tensor, "", "", std::move(m), std::move(n)); }
Term let_pair(std::string x, std::string y, Term m, Term body) {
    return mk(Tag::Let, std::move(x), std::move(y), std::move(m), std::move(body));
}

Term lams(const std::vector<std::string>& xs, Term body) {
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) body = lam(*it, body);
    return body;
}

Term apps(Term f, const std::vector<Term>& args) {
    for (auto& a : args) f = app(f, a);
    return f;
}

// ---------------------------------------------------------------- disciplines

Discipline Discipline::ordinary() {
    Discipline d;
    d.allow_weakening = d.allow_contraction = d.allow_exchange = true;
    return d;
}
Discipline Discipline::linear() {
    Discipline d;
    d.allow_exchange = true;
    return d;
}
Discipline Discipline::planar() { return {}; }
Discipline Discipline::planar_tensor() {
    Discipline d;
    d.allow_tensor = true;
    return d;
}
Discipline Discipline::biplanar() {
    Discipline d;
    d.allow_left_ops = true;
    return d;
}

Discipline Discipline::with_constants(std::set<std::string> cs) const {
    Discipline d = *this;
    d.constants.insert(cs.begin(), cs.end());
    return d;
}

Discipline Discipline::with_eta(bool on) const {
    Discipline d = *this;
    d.eta = on;
    return d;
}

std::string Discipline::name() const {
    if (allow_weakening && allow_contraction && allow_exchange) return "ordinary";
    if (allow_exchange) return "linear";
    if (allow_left_ops) return "biplanar";
    if (allow_tensor) return "planar-tensor";
    return "planar";
}

std::optional<Discipline> discipline_by_name(const std::string& s) {
    if (s == "ordinary") return Discipline::ordinary();
    if (s == "linear") return Discipline::linear();
    if (s == "planar") return Discipline::planar();
    if (s == "planar-tensor") return Discipline::planar_tensor();
    if (s == "biplanar") return Discipline::biplanar();
    return std::nullopt;
}

// ---------------------------------------------------------------- parser

namespace {

enum class Tok { Ident, Const, Lam, LamR, LamL, Dot, LParen, RParen, LAt, Star, Eq, Let, In, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '-') {
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        size_t start = i;
        if (c == '\\') {
            if (i + 1 < s.size() && s[i + 1] == '>') { out.push_back({Tok::LamR, "", start}); i += 2; }
            else if (i + 1 < s.size() && s[i + 1] == '<') { out.push_back({Tok::LamL, "", start}); i += 2; }
            else { out.push_back({Tok::Lam, "", start}); ++i; }
            continue;
        }
        if (c == '<' && i + 1 < s.size() && s[i + 1] == '@') { out.push_back({Tok::LAt, "", start}); i += 2; continue; }
        if (c == '.') { out.push_back({Tok::Dot, "", start}); ++i; continue; }
        if (c == '(') { out.push_back({Tok::LParen, "", start}); ++i; continue; }
        if (c == ')') { out.push_back({Tok::RParen, "", start}); ++i; continue; }
        if (c == '*') { out.push_back({Tok::Star, "", start}); ++i; continue; }
        if (c == '=') { out.push_back({Tok::Eq, "", start}); ++i; continue; }
        auto ident_char = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
        if (c == '#') {
            ++i;
            while (i < s.size() && ident_char(s[i])) ++i;
            if (i == start + 1) throw ParseError("empty constant name", start);
            out.push_back({Tok::Const, s.substr(start + 1, i - start - 1), start});
            continue;
        }
        if (c >= 'a' && c <= 'z') {
            while (i < s.size() && ident_char(s[i])) ++i;
            std::string w = s.substr(start, i - start);
            if (w == "let") out.push_back({Tok::Let, w, start});
            else if (w == "in") out.push_back({Tok::In, w, start});
            else out.push_back({Tok::Ident, w, start});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const Discipline& d) : toks_(std::move(toks)), d_(d) {}

    Term parse_all() {
        Term t = expr();
        if (peek().kind != Tok::End) throw ParseError("trailing input", peek().pos);
        return t;
    }

private:
    std::vector<Token> toks_;
    size_t i_ = 0;
    const Discipline& d_;

    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_++]; }
    Token expect(Tok k, const char* what) {
        if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
        return next();
    }

    bool starts_binder() const {
        auto k = peek().kind;
        return k == Tok::Lam || k == Tok::LamR || k == Tok::LamL || k == Tok::Let;
    }

    Term expr() {
        if (starts_binder()) return binder();
        Term t = lapp_level();
        while (peek().kind == Tok::Star) {
            next();
            Term rhs = starts_binder() ? binder() : lapp_level();
            t = tensor(t, rhs);
        }
        return t;
    }

    Term binder() {
        Token k = next();
        if (k.kind == Tok::Let) {
            std::string x = expect(Tok::Ident, "variable").text;
            expect(Tok::Star, "'*'");
            std::string y = expect(Tok::Ident, "variable").text;
            expect(Tok::Eq, "'='");
            Term m = expr();
            expect(Tok::In, "'in'");
            Term n = expr();
            return let_pair(x, y, m, n);
        }
        std::vector<std::string> xs;
        while (peek().kind == Tok::Ident) xs.push_back(next().text);
        if (xs.empty()) throw ParseError("expected binder", peek().pos);
        expect(Tok::Dot, "'.'");
        Term body = expr();
        for (auto it = xs.rbegin(); it != xs.rend(); ++it)
            body = (k.kind == Tok::LamL) ? llam(*it, body) : lam(*it, body);
        return body;
    }

    Term lapp_level() {
        Term t = app_level();
        while (peek().kind == Tok::LAt) {
            next();
            Term f = starts_binder() ? binder() : app_level();
            t = lapp(t, f);
        }
        return t;
    }

    bool starts_atom() const {
        auto k = peek().kind;
        return k == Tok::Ident || k == Tok::Const || k == Tok::LParen;
    }

    Term app_level() {
        Term t = atom();
        for (;;) {
            if (starts_atom()) t = app(t, atom());
            else if (starts_binder()) return app(t, binder());
            else return t;
        }
    }

    Term atom() {
        Token k = next();
        switch (k.kind) {
            case Tok::Ident: return var(k.text);
            case Tok::Const:
                if (!d_.constants.count(k.text)) throw ParseError("unknown constant #" + k.text, k.pos);
                return cnst(k.text);
            case Tok::LParen: {
                Term t = expr();
                expect(Tok::RParen, "')'");
                return t;
            }
            default: throw ParseError("expected a term", k.pos);
        }
    }
};

}  // namespace

Term parse(const std::string& text, const Discipline& d) {
    Parser p(lex(text), d);
    return p.parse_all();
}

// ---------------------------------------------------------------- free variables

namespace {
void fvseq(const Term& t, std::vector<std::string>& out) {
    switch (t->tag) {
        case Tag::Var: out.push_back(t->a); return;
        case Tag::Const: return;
        case Tag::RApp:
        case Tag::LApp:
        case Tag::Tensor:
            fvseq(t->l, out);
            fvseq(t->r, out);
            return;
        case Tag::RAbs:
        case Tag::LAbs: {
            std::vector<std::string> inner;
            fvseq(t->l, inner);
            for (auto& v : inner)
                if (v != t->a) out.push_back(v);
            return;
        }
        case Tag::Let: {
            std::vector<std::string> body;
            fvseq(t->r, body);
            for (auto& v : body)
                if (v != t->a && v != t->b) out.push_back(v);
            fvseq(t->l, out);
            return;
        }
    }
}
}  // namespace

std::vector<std::string> free_var_sequence(const Term& t) {
    std::vector<std::string> out;
    fvseq(t, out);
    return out;
}

std::set<std::string> free_vars(const Term& t) {
    auto s = free_var_sequence(t);
    return {s.begin(), s.end()};
}

size_t count_free(const Term& t, const std::string& x) {
    auto s = free_var_sequence(t);
    return static_cast<size_t>(std::count(s.begin(), s.end(), x));
}

bool occurs_free(const Term& t, const std::string& x) {
    switch (t->tag) {
        case Tag::Var: return t->a == x;
        case Tag::Const: return false;
        case Tag::RAbs:
        case Tag::LAbs: return t->a != x && occurs_free(t->l, x);
        case Tag::Let:
            return occurs_free(t->l, x) || (t->a != x && t->b != x && occurs_free(t->r, x));
        default: return occurs_free(t->l, x) || occurs_free(t->r, x);
    }
}

bool closed(const Term& t) { return free_var_sequence(t).empty(); }

size_t term_size(const Term& t) {
    if (!t) return 0;
    return 1 + term_size(t->l) + term_size(t->r);
}

bool has_constants(const Term& t) {
    if (!t) return false;
    return t->tag == Tag::Const || has_constants(t->l) || has_constants(t->r);
}

void collect_names(const Term& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->tag == Tag::Var || t->tag == Tag::RAbs || t->tag == Tag::LAbs) out.insert(t->a);
    if (t->tag == Tag::Let) {
        out.insert(t->a);
        out.insert(t->b);
    }
    collect_names(t->l, out);
    collect_names(t->r, out);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    std::string stem = base;
    auto us = stem.find('_');
    if (us != std::string::npos && us > 0 &&
        std::all_of(stem.begin() + static_cast<long>(us) + 1, stem.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        stem = stem.substr(0, us);
    if (!avoid.count(stem)) return stem;
    for (size_t i = 1;; ++i) {
        std::string cand = stem + "_" + std::to_string(i);
        if (!avoid.count(cand)) return cand;
    }
}

// ---------------------------------------------------------------- validation

namespace {

void validate_rec(const Term& t, const Discipline& d, const std::string& path, ValidationReport& rep) {
    auto fail = [&](std::string rule) { rep.violations.push_back({path, std::move(rule)}); };
    auto child = [&](const char* k) { return path.empty() ? std::string(k) : path + "." + k; };
    auto check_binder = [&](const std::string& x, const Term& body) {
        size_t n = count_free(body, x);
        if (n == 0 && !d.allow_weakening) fail("weakening: '" + x + "' unused");
        if (n > 1 && !d.allow_contraction) fail("contraction: '" + x + "' used " + std::to_string(n) + " times");
    };
    switch (t->tag) {
        case Tag::Var: return;
        case Tag::Const:
            if (!d.constants.count(t->a)) fail("unknown constant #" + t->a);
            return;
        case Tag::RApp:
            validate_rec(t->l, d, child("0"), rep);
            validate_rec(t->r, d, child("1"), rep);
            return;
        case Tag::LApp:
            if (!d.allow_left_ops) fail("left application not allowed");
            validate_rec(t->l, d, child("0"), rep);
            validate_rec(t->r, d, child("1"), rep);
            return;
        case Tag::Tensor:
            if (!d.allow_tensor) fail("tensor not allowed");
            validate_rec(t->l, d, child("0"), rep);
            validate_rec(t->r, d, child("1"), rep);
            return;
        case Tag::RAbs:
        case Tag::LAbs: {
            bool left = t->tag == Tag::LAbs;
            if (left && !d.allow_left_ops) fail("left abstraction not allowed");
            check_binder(t->a, t->l);
            if (!d.allow_exchange && count_free(t->l, t->a) > 0) {
                auto seq = free_var_sequence(t->l);
                const std::string& edge = left ? seq.front() : seq.back();
                if (edge != t->a)
                    fail(std::string("exchange: '") + t->a + "' is not the " + (left ? "leftmost" : "rightmost") +
                         " free variable");
            }
            validate_rec(t->l, d, child("0"), rep);
            return;
        }
        case Tag::Let: {
            if (!d.allow_tensor) fail("let not allowed");
            if (t->a == t->b) fail("let binds the same name twice");
            check_binder(t->a, t->r);
            check_binder(t->b, t->r);
            if (!d.allow_exchange) {
                auto seq = free_var_sequence(t->r);
                size_t n = seq.size();
                if (n < 2 || seq[n - 2] != t->a || seq[n - 1] != t->b)
                    fail("exchange: let binders are not the two rightmost free variables");
            }
            validate_rec(t->l, d, child("0"), rep);
            validate_rec(t->r, d, child("1"), rep);
            return;
        }
    }
}

}  // namespace

ValidationReport validate(const Term& t, const Discipline& d) {
    ValidationReport rep;
    validate_rec(t, d, "", rep);
    rep.ok = rep.violations.empty();
    return rep;
}

// ---------------------------------------------------------------- substitution

namespace {

Term subst_rec(const Term& t, const std::string& x, const Term& s, const std::set<std::string>& fvs,
               std::set<std::string>& names);

// rename binder `y` in `body` if it would capture a free variable of s
std::pair<std::string, Term> open_binder(const std::string& y, const Term& body, const std::set<std::string>& fvs,
                                         std::set<std::string>& names) {
    if (!fvs.count(y)) return {y, body};
    std::string y2 = fresh_name(y, names);
    names.insert(y2);
    std::set<std::string> one{y2};
    return {y2, subst_rec(body, y, var(y2), one, names)};
}

Term subst_rec(const Term& t, const std::string& x, const Term& s, const std::set<std::string>& fvs,
               std::set<std::string>& names) {
    if (!occurs_free(t, x)) return t;
    switch (t->tag) {
        case Tag::Var: return s;
        case Tag::Const: return t;
        case Tag::RApp: return app(subst_rec(t->l, x, s, fvs, names), subst_rec(t->r, x, s, fvs, names));
        case Tag::LApp: return lapp(subst_rec(t->l, x, s, fvs, names), subst_rec(t->r, x, s, fvs, names));
        case Tag::Tensor: return tensor(subst_rec(t->l, x, s, fvs, names), subst_rec(t->r, x, s, fvs, names));
        case Tag::RAbs:
        case Tag::LAbs: {
            auto [y, body] = open_binder(t->a, t->l, fvs, names);
            Term nb = subst_rec(body, x, s, fvs, names);
            return t->tag == Tag::RAbs ? lam(y, nb) : llam(y, nb);
        }
        case Tag::Let: {
            Term m = subst_rec(t->l, x, s, fvs, names);
            auto [y1, b1] = open_binder(t->a, t->r, fvs, names);
            auto [y2, b2] = open_binder(t->b, b1, fvs, names);
            return let_pair(y1, y2, m, subst_rec(b2, x, s, fvs, names));
        }
    }
    return t;
}

}  // namespace

Term substitute(const Term& t, const std::string& x, const Term& s) {
    std::set<std::string> fvs = free_vars(s);
    std::set<std::string> names;
    collect_names(t, names);
    collect_names(s, names);
    return subst_rec(t, x, s, fvs, names);
}

// ---------------------------------------------------------------- alpha equality

namespace {

using Env = std::vector<std::pair<std::string, std::string>>;

bool lookup_match(const Env& env, const std::string& a, const std::string& b) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool ha = it->first == a, hb = it->second == b;
        if (ha || hb) return ha && hb;
    }
    return a == b;
}

bool aeq(const Term& a, const Term& b, Env& env) {
    if (a->tag != b->tag) return false;
    switch (a->tag) {
        case Tag::Var: return lookup_match(env, a->a, b->a);
        case Tag::Const: return a->a == b->a;
        case Tag::RApp:
        case Tag::LApp:
        case Tag::Tensor: return aeq(a->l, b->l, env) && aeq(a->r, b->r, env);
        case Tag::RAbs:
        case Tag::LAbs: {
            env.emplace_back(a->a, b->a);
            bool ok = aeq(a->l, b->l, env);
            env.pop_back();
            return ok;
        }
        case Tag::Let: {
            if (!aeq(a->l, b->l, env)) return false;
            env.emplace_back(a->a, b->a);
            env.emplace_back(a->b, b->b);
            bool ok = aeq(a->r, b->r, env);
            env.pop_back();
            env.pop_back();
            return ok;
        }
    }
    return false;
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
    Env env;
    return aeq(a, b, env);
}

// ---------------------------------------------------------------- printing

namespace {

// precedence levels: 0 binder/top, 1 tensor, 2 left application, 3 juxtaposition, 4 atom
int level(const Term& t) {
    switch (t->tag) {
        case Tag::RAbs:
        case Tag::LAbs:
        case Tag::Let: return 0;
        case Tag::Tensor: return 1;
        case Tag::LApp: return 2;
        case Tag::RApp: return 3;
        default: return 4;
    }
}

void print(const Term& t, std::string& out);

void print_at(const Term& t, int need, std::string& out) {
    if (level(t) < need) {
        out += '(';
        print(t, out);
        out += ')';
    } else {
        print(t, out);
    }
}

void print(const Term& t, std::string& out) {
    switch (t->tag) {
        case Tag::Var: out += t->a; return;
        case Tag::Const: out += '#' + t->a; return;
        case Tag::RApp:
            print_at(t->l, 3, out);
            out += ' ';
            print_at(t->r, 4, out);
            return;
        case Tag::LApp:
            print_at(t->l, 2, out);
            out += " <@ ";
            print_at(t->r, 3, out);
            return;
        case Tag::Tensor:
            print_at(t->l, 1, out);
            out += " * ";
            print_at(t->r, 2, out);
            return;
        case Tag::RAbs:
        case Tag::LAbs: {
            out += t->tag == Tag::LAbs ? "\\<" : "\\";
            out += t->a;
            out += ". ";
            print(t->l, out);
            return;
        }
        case Tag::Let:
            out += "let " + t->a + "*" + t->b + " = ";
            print(t->l, out);
            out += " in ";
            print(t->r, out);
            return;
    }
}

}  // namespace

std::string pretty(const Term& t) {
    std::string out;
    print(t, out);
    return out;
}

}  // namespace wb
