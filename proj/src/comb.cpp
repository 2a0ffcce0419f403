#include "wb/comb.hpp"

#include <algorithm>
#include <cctype>

namespace wb {

const BasisInfo& basis_info(Basis b) {
    static const std::map<Basis, BasisInfo> table = {
        {Basis::SK, {"sk", {"S", "K"}, {}}},
        {Basis::BCI, {"bci", {"B", "C", "I"}, {}}},
        {Basis::BIdot, {"bidot", {"B", "I"}, {"dot"}}},
        {Basis::BIIdot, {"biidot", {"B", "I", "Ix"}, {"dot"}}},
        {Basis::BIILP, {"biilp", {"B", "I", "Ix", "L", "P"}, {"dot"}}},
        {Basis::BiBDI, {"bibdi", {"B>", "B<", "D>", "D<", "I>", "I<"}, {"dagR", "dagL"}}},
        {Basis::BIIdotCirc, {"biidotcirc", {"B", "I", "Idot"}, {"circ"}}},
    };
    return table.at(b);
}

std::optional<Basis> basis_by_name(const std::string& s) {
    for (Basis b : {Basis::SK, Basis::BCI, Basis::BIdot, Basis::BIIdot, Basis::BIILP, Basis::BiBDI, Basis::BIIdotCirc})
        if (s == basis_info(b).name) return b;
    return std::nullopt;
}

namespace {
Comb mkc(CTag t, std::string name, Elem h, Comb l, Comb r) {
    return std::make_shared<const CNode>(CNode{t, std::move(name), std::move(h), std::move(l), std::move(r)});
}
}  // namespace

Comb csym(std::string s) { return mkc(CTag::Sym, std::move(s), {}, nullptr, nullptr); }
Comb cunary(std::string op, Comb arg) { return mkc(CTag::Unary, std::move(op), {}, std::move(arg), nullptr); }
Comb capp(Comb f, Comb x) { return mkc(CTag::App, "", {}, std::move(f), std::move(x)); }
Comb clapp(Comb arg, Comb f) { return mkc(CTag::LApp, "", {}, std::move(arg), std::move(f)); }
Comb chole(Elem e) { return mkc(CTag::Hole, "", std::move(e), nullptr, nullptr); }
Comb cvar(std::string x) { return mkc(CTag::Var, std::move(x), {}, nullptr, nullptr); }

Comb capps(Comb f, const std::vector<Comb>& args) {
    for (auto& a : args) f = capp(f, a);
    return f;
}

namespace {
void cseq(const Comb& m, std::vector<std::string>& out) {
    if (!m) return;
    if (m->tag == CTag::Var) {
        out.push_back(m->name);
        return;
    }
    cseq(m->l, out);
    cseq(m->r, out);
}
}  // namespace

std::vector<std::string> comb_var_sequence(const Comb& m) {
    std::vector<std::string> out;
    cseq(m, out);
    return out;
}

bool comb_has_var(const Comb& m, const std::string& x) {
    if (!m) return false;
    if (m->tag == CTag::Var) return m->name == x;
    return comb_has_var(m->l, x) || comb_has_var(m->r, x);
}

size_t comb_count_var(const Comb& m, const std::string& x) {
    auto s = comb_var_sequence(m);
    return static_cast<size_t>(std::count(s.begin(), s.end(), x));
}

bool comb_closed(const Comb& m) { return comb_var_sequence(m).empty(); }

size_t comb_size(const Comb& m) {
    if (!m) return 0;
    return 1 + comb_size(m->l) + comb_size(m->r);
}

bool comb_equal(const Comb& a, const Comb& b) {
    if (!a || !b) return a == b;
    if (a->tag != b->tag || a->name != b->name) return false;
    if (a->tag == CTag::Hole) {
        if (a->hole.term() && b->hole.term()) return alpha_eq(*a->hole.term(), *b->hole.term());
        return show(a->hole) == show(b->hole);
    }
    return comb_equal(a->l, b->l) && comb_equal(a->r, b->r);
}

Comb comb_subst(const Comb& m, const std::string& x, const Comb& s) {
    if (!m) return m;
    if (m->tag == CTag::Var) return m->name == x ? s : m;
    if (!comb_has_var(m, x)) return m;
    CNode n = *m;
    n.l = comb_subst(m->l, x, s);
    n.r = comb_subst(m->r, x, s);
    return std::make_shared<const CNode>(std::move(n));
}

namespace {

int clevel(const Comb& m) {
    if (m->tag == CTag::App) return 3;
    if (m->tag == CTag::LApp) return 2;
    return 4;
}

void cprint(const Comb& m, std::string& out);

void cprint_at(const Comb& m, int need, std::string& out) {
    if (clevel(m) < need) {
        out += '(';
        cprint(m, out);
        out += ')';
    } else {
        cprint(m, out);
    }
}

void cprint(const Comb& m, std::string& out) {
    switch (m->tag) {
        case CTag::Sym:
        case CTag::Var: out += m->name; return;
        case CTag::Hole: out += "[" + show(m->hole) + "]"; return;
        case CTag::Unary:
            out += m->name + "(";
            cprint(m->l, out);
            out += ")";
            return;
        case CTag::App:
            cprint_at(m->l, 3, out);
            out += ' ';
            cprint_at(m->r, 4, out);
            return;
        case CTag::LApp:
            cprint_at(m->l, 2, out);
            out += " <@ ";
            cprint_at(m->r, 3, out);
            return;
    }
}

}  // namespace

std::string show(const Comb& m) {
    std::string out;
    cprint(m, out);
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

bool is_unary_name(const std::string& s) { return s == "dot" || s == "dagR" || s == "dagL" || s == "circ"; }

class CombParser {
public:
    explicit CombParser(const std::string& s) : s_(s) {}

    Comb parse_all() {
        Comb c = lapp_level();
        skip();
        if (i_ != s_.size()) throw CombParseError("trailing input at offset " + std::to_string(i_));
        return c;
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool at_lapp() {
        skip();
        return i_ + 1 < s_.size() && s_[i_] == '<' && s_[i_ + 1] == '@';
    }
    bool at_atom() {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[';
    }

    Comb lapp_level() {
        Comb c = app_level();
        while (at_lapp()) {
            i_ += 2;
            c = clapp(c, app_level());
        }
        return c;
    }

    Comb app_level() {
        if (!at_atom()) throw CombParseError("expected a term at offset " + std::to_string(i_));
        Comb c = atom();
        while (at_atom()) c = capp(c, atom());
        return c;
    }

    Comb atom() {
        skip();
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Comb inner = lapp_level();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')') throw CombParseError("expected ')' at offset " + std::to_string(i_));
            ++i_;
            return inner;
        }
        if (c == '[') {
            size_t depth = 0, j = i_;
            for (; j < s_.size(); ++j) {
                if (s_[j] == '[') ++depth;
                if (s_[j] == ']' && --depth == 0) break;
            }
            if (j >= s_.size()) throw CombParseError("unterminated hole");
            std::string body = s_.substr(i_ + 1, j - i_ - 1);
            i_ = j + 1;
            Discipline d = Discipline::ordinary();
            for (size_t k = 0; k < body.size(); ++k) {
                if (body[k] != '#') continue;
                size_t e = k + 1;
                while (e < body.size() && (std::isalnum(static_cast<unsigned char>(body[e])) || body[e] == '_')) ++e;
                d.constants.insert(body.substr(k + 1, e - k - 1));
            }
            try {
                return chole(Elem(parse(body, d)));
            } catch (const ParseError& e) {
                throw CombParseError(std::string("in hole: ") + e.what());
            }
        }
        size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        std::string w = s_.substr(start, i_ - start);
        if (std::isupper(static_cast<unsigned char>(w[0]))) {
            if (i_ < s_.size() && (s_[i_] == '>' || (s_[i_] == '<' && (i_ + 1 >= s_.size() || s_[i_ + 1] != '@'))))
                w += s_[i_++];
            return csym(w);
        }
        if (is_unary_name(w) && i_ < s_.size() && s_[i_] == '(') {
            ++i_;
            Comb arg = lapp_level();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')') throw CombParseError("expected ')' after unary argument");
            ++i_;
            return cunary(w, arg);
        }
        return cvar(w);
    }
};

}  // namespace

Comb parse_comb(const std::string& text) {
    CombParser p(text);
    return p.parse_all();
}

// ---------------------------------------------------------------- abstraction

namespace {

bool atomic(const Comb& m) { return m->tag != CTag::App && m->tag != CTag::LApp; }

void require_once(const Comb& m, const std::string& x, const char* who) {
    size_t n = comb_count_var(m, x);
    if (n != 1)
        throw AbstractionError(std::string(who) + ": '" + x + "' occurs " + std::to_string(n) + " times in " + show(m));
}

void require_edge(const Comb& m, const std::string& x, bool rightmost, const char* who) {
    require_once(m, x, who);
    auto seq = comb_var_sequence(m);
    if ((rightmost ? seq.back() : seq.front()) != x)
        throw AbstractionError(std::string(who) + ": '" + x + "' is not the " + (rightmost ? "rightmost" : "leftmost") +
                               " variable of " + show(m));
}

void require_no_var_in_unary(const Comb& m, const std::string& x, const char* who) {
    if (!m) return;
    if (m->tag == CTag::Unary && comb_has_var(m->l, x))
        throw AbstractionError(std::string(who) + ": '" + x + "' occurs under a unary operation");
    require_no_var_in_unary(m->l, x, who);
    require_no_var_in_unary(m->r, x, who);
}

Comb sk_rec(const Comb& m, const std::string& x) {
    if (m->tag == CTag::Var && m->name == x) return capps(csym("S"), {csym("K"), csym("K")});
    if (atomic(m)) return capp(csym("K"), m);
    if (m->tag == CTag::LApp) throw AbstractionError("abstract_sk: left application in polynomial");
    return capps(csym("S"), {sk_rec(m->l, x), sk_rec(m->r, x)});
}

Comb bci_rec(const Comb& m, const std::string& x) {
    if (m->tag == CTag::Var && m->name == x) return csym("I");
    if (m->tag != CTag::App) throw AbstractionError("abstract_bci: unexpected node " + show(m));
    if (comb_has_var(m->l, x)) return capps(csym("C"), {bci_rec(m->l, x), m->r});
    return capps(csym("B"), {m->l, bci_rec(m->r, x)});
}

Comb planar_rec(const Comb& m, const std::string& x) {
    if (m->tag == CTag::Var && m->name == x) return csym("I");
    if (m->tag != CTag::App) throw AbstractionError("abstract_planar: unexpected node " + show(m));
    if (comb_has_var(m->l, x)) {
        if (!comb_closed(m->r))
            throw AbstractionError("abstract_planar: operand " + show(m->r) + " is not closed");
        return capps(csym("B"), {cunary("dot", m->r), planar_rec(m->l, x)});
    }
    return capps(csym("B"), {m->l, planar_rec(m->r, x)});
}

Comb right_rec(const Comb& m, const std::string& x) {
    if (m->tag == CTag::Var && m->name == x) return csym("I>");
    if (m->tag == CTag::App) {
        if (comb_has_var(m->l, x)) {
            if (!comb_closed(m->r)) throw AbstractionError("abstract_right: operand " + show(m->r) + " is not closed");
            Comb inner = capps(csym("D>"), {csym("I<"), m->r});
            return capps(csym("B>"), {cunary("dagR", inner), right_rec(m->l, x)});
        }
        return capps(csym("B>"), {m->l, right_rec(m->r, x)});
    }
    if (m->tag == CTag::LApp) {
        // m = N <@ M with N = m->l, M = m->r
        if (comb_has_var(m->r, x)) return clapp(m->l, clapp(right_rec(m->r, x), csym("D<")));
        if (!comb_closed(m->r)) throw AbstractionError("abstract_right: function " + show(m->r) + " is not closed");
        return capps(csym("B>"), {cunary("dagR", m->r), right_rec(m->l, x)});
    }
    throw AbstractionError("abstract_right: unexpected node " + show(m));
}

}  // namespace

Comb abstract_sk(const Comb& m, const std::string& x) {
    require_no_var_in_unary(m, x, "abstract_sk");
    return sk_rec(m, x);
}

Comb abstract_bci(const Comb& m, const std::string& x) {
    require_once(m, x, "abstract_bci");
    require_no_var_in_unary(m, x, "abstract_bci");
    return bci_rec(m, x);
}

Comb abstract_planar(const Comb& m, const std::string& x) {
    require_edge(m, x, true, "abstract_planar");
    require_no_var_in_unary(m, x, "abstract_planar");
    return planar_rec(m, x);
}

Comb abstract_right(const Comb& m, const std::string& x) {
    require_edge(m, x, true, "abstract_right");
    require_no_var_in_unary(m, x, "abstract_right");
    return right_rec(m, x);
}

Comb mirror(const Comb& m) {
    if (!m) return m;
    switch (m->tag) {
        case CTag::App: return clapp(mirror(m->r), mirror(m->l));
        case CTag::LApp: return capp(mirror(m->r), mirror(m->l));
        case CTag::Sym: {
            static const std::map<std::string, std::string> swap = {
                {"B>", "B<"}, {"B<", "B>"}, {"D>", "D<"}, {"D<", "D>"}, {"I>", "I<"}, {"I<", "I>"}};
            auto it = swap.find(m->name);
            return it == swap.end() ? m : csym(it->second);
        }
        case CTag::Unary: {
            std::string op = m->name == "dagR" ? "dagL" : m->name == "dagL" ? "dagR" : m->name;
            return cunary(op, mirror(m->l));
        }
        default: return m;
    }
}

Comb abstract_left(const Comb& m, const std::string& y) {
    require_edge(m, y, false, "abstract_left");
    return mirror(abstract_right(mirror(m), y));
}

Comb abstract_with(Basis b, const Comb& m, const std::string& x) {
    switch (b) {
        case Basis::SK: return abstract_sk(m, x);
        case Basis::BCI: return abstract_bci(m, x);
        case Basis::BiBDI: return abstract_right(m, x);
        default: return abstract_planar(m, x);
    }
}

// ---------------------------------------------------------------- tensor translation

namespace {

Comb tr(const Term& t) {
    switch (t->tag) {
        case Tag::Var: return cvar(t->a);
        case Tag::Const: return chole(Elem(t));
        case Tag::RApp: return capp(tr(t->l), tr(t->r));
        case Tag::Tensor: return capps(csym("P"), {tr(t->l), tr(t->r)});
        case Tag::RAbs: return abstract_planar(tr(t->l), t->a);
        case Tag::Let: {
            Comb body = abstract_planar(abstract_planar(tr(t->r), t->b), t->a);
            return capps(csym("L"), {body, tr(t->l)});
        }
        default: throw AbstractionError("compile_tensor: left operations are not part of the tensor calculus");
    }
}

}  // namespace

Comb compile_tensor(const Term& m) {
    if (!closed(m)) throw AbstractionError("compile_tensor: input is not closed");
    return tr(m);
}

Comb derive_c_from_t(const Comb& t) {
    Comb b = csym("B");
    // B (B (T (B B T)) B) T
    Comb bbt = capps(b, {b, t});
    Comb inner = capps(b, {capp(t, bbt), b});
    return capps(b, {inner, t});
}

// ---------------------------------------------------------------- representatives

Term representative(const std::string& s) {
    static const std::map<std::string, std::string> src = {
        {"S", "\\x y z. x z (y z)"},
        {"K", "\\x y. x"},
        {"B", "\\x y z. x (y z)"},
        {"C", "\\x y z. x z y"},
        {"I", "\\x. x"},
        {"T", "\\x y. y x"},
        {"Ix", "\\x y z. x (y z)"},
        {"L", "\\t u. let x*y = u in t x y"},
        {"P", "\\x y. x * y"},
        {"Idot", "\\z. z (\\x. x)"},
        {"B>", "\\>x. \\>y. \\>z. x (y z)"},
        {"B<", "\\<x. \\<y. \\<z. (z <@ y) <@ x"},
        {"D>", "\\>y. \\>x. \\<z. (z <@ y) x"},
        {"D<", "\\<y. \\<x. \\>z. x <@ (y z)"},
        {"I>", "\\>x. x"},
        {"I<", "\\<x. x"},
    };
    auto it = src.find(s);
    if (it == src.end()) throw AbstractionError("no representative for symbol " + s);
    return parse(it->second, Discipline::ordinary());
}

Term unary_representative(const std::string& op, const Term& arg) {
    std::set<std::string> avoid;
    collect_names(arg, avoid);
    std::string x = fresh_name("z", avoid);
    if (op == "dot") return lam(x, app(var(x), arg));
    if (op == "dagR") return lam(x, lapp(var(x), arg));
    if (op == "dagL") return llam(x, app(arg, var(x)));
    if (op == "circ") return apps(representative("B"), {lam(x, app(var(x), arg)), representative("B")});
    throw AbstractionError("no representative for unary " + op);
}

Term expand(const Comb& m) {
    switch (m->tag) {
        case CTag::Sym: return representative(m->name);
        case CTag::Unary: return unary_representative(m->name, expand(m->l));
        case CTag::App: return app(expand(m->l), expand(m->r));
        case CTag::LApp: return lapp(expand(m->l), expand(m->r));
        case CTag::Var: return var(m->name);
        case CTag::Hole:
            if (!m->hole.term()) throw AbstractionError("expand: hole does not hold a term");
            return *m->hole.term();
    }
    return nullptr;
}

// ---------------------------------------------------------------- CPS

namespace {

struct CpsNames {
    std::string k, f, x;
};

Term cps_rec(const Term& m, const CpsNames& n) {
    switch (m->tag) {
        case Tag::Var:
        case Tag::Const: return lam(n.k, app(var(n.k), m));
        case Tag::RAbs: return lam(n.k, app(var(n.k), lam(m->a, cps_rec(m->l, n))));
        case Tag::RApp: {
            Term inner = lam(n.x, apps(var(n.f), {var(n.x), var(n.k)}));
            return lam(n.k, app(cps_rec(m->l, n), lam(n.f, app(cps_rec(m->r, n), inner))));
        }
        default: throw AbstractionError("cps_translate: only ordinary terms are supported");
    }
}

}  // namespace

Term cps_translate(const Term& m) {
    std::set<std::string> avoid;
    collect_names(m, avoid);
    CpsNames n;
    n.k = fresh_name("k", avoid);
    avoid.insert(n.k);
    n.f = fresh_name("f", avoid);
    avoid.insert(n.f);
    n.x = fresh_name("v", avoid);
    return cps_rec(m, n);
}

EqVerdict computational_eq(const Term& m, const Term& n, uint64_t fuel) {
    std::set<std::string> cs;
    std::function<void(const Term&)> grab = [&](const Term& t) {
        if (!t) return;
        if (t->tag == Tag::Const) cs.insert(t->a);
        grab(t->l);
        grab(t->r);
    };
    grab(m);
    grab(n);
    Discipline d = Discipline::ordinary().with_constants(cs).with_eta();
    return equal(cps_translate(m), cps_translate(n), d, fuel);
}

// ---------------------------------------------------------------- left inverse

Term left_inverse(const Term& m0) {
    if (has_constants(m0)) throw LeftInverseError("left_inverse: constants are not allowed");
    if (!closed(m0)) throw LeftInverseError("left_inverse: term is not closed");
    Discipline planar = Discipline::planar();
    if (!validate(m0, planar).ok) throw LeftInverseError("left_inverse: term is not planar");
    Term m = normalize(m0, planar).term;

    std::vector<std::string> binders;
    Term body = m;
    while (body->tag == Tag::RAbs) {
        binders.push_back(body->a);
        body = body->l;
    }
    std::vector<Term> args;
    Term head = body;
    while (head->tag == Tag::RApp) {
        args.push_back(head->r);
        head = head->l;
    }
    std::reverse(args.begin(), args.end());
    if (binders.empty() || head->tag != Tag::Var || head->a != binders.front())
        throw LeftInverseError("left_inverse: unexpected normal form " + pretty(m));

    Term id = lam("x", var("x"));
    if (args.empty()) return id;

    std::vector<Term> rs;
    for (const Term& p : args) {
        Term q = p;
        for (size_t i = 1; i < binders.size(); ++i) q = substitute(q, binders[i], lam("z", var("z")));
        q = normalize(q, planar).term;
        rs.push_back(left_inverse(q));
    }

    std::set<std::string> avoid;
    for (auto& r : rs) collect_names(r, avoid);
    std::vector<std::string> ws;
    for (size_t j = 0; j < rs.size(); ++j) {
        std::string w = fresh_name("w", avoid);
        avoid.insert(w);
        ws.push_back(w);
    }
    Term spine = app(rs[0], var(ws[0]));
    for (size_t j = 1; j < rs.size(); ++j) spine = app(spine, app(rs[j], var(ws[j])));
    Term n_prime = lams(ws, spine);

    std::string u = fresh_name("u", avoid);
    Term n = app(var(u), n_prime);
    for (size_t i = 1; i < binders.size(); ++i) n = app(n, lam("z", var("z")));
    return lam(u, n);
}

}  // namespace wb
