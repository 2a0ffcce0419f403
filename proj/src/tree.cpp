#include "wb/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace wb {

// ---------------------------------------------------------------- groups

Word OrderedGroup::mul(const Word& a, const Word& b) const {
    Word r = a;
    for (int x : b) {
        if (!r.empty() && r.back() == -x) r.pop_back();
        else r.push_back(x);
    }
    return r;
}

Word OrderedGroup::inv(const Word& a) const {
    Word r(a.rbegin(), a.rend());
    for (int& x : r) x = -x;
    return r;
}

Word IntegerGroup::of(long n) {
    return Word(static_cast<size_t>(n < 0 ? -n : n), n < 0 ? -1 : 1);
}

long IntegerGroup::value(const Word& w) {
    long s = 0;
    for (int x : w) s += x;
    return s;
}

bool IntegerGroup::leq(const Word& a, const Word& b) const { return value(a) <= value(b); }

std::string IntegerGroup::show(const Word& w) const { return std::to_string(value(w)); }

std::optional<Word> IntegerGroup::parse(const std::string& s) const {
    if (s.empty()) return std::nullopt;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
    return of(std::stol(s));
}

std::vector<Word> IntegerGroup::alphabet() const { return {of(-1), of(0), of(1)}; }

std::vector<Word> IntegerGroup::witness_values() const {
    std::vector<Word> r;
    for (long n = -3; n <= 3; ++n) r.push_back(of(n));
    return r;
}

std::string FreeGroup2::show(const Word& w) const {
    if (w.empty()) return "e";
    std::string s;
    for (int x : w) s += x == 1 ? 'a' : x == -1 ? 'A' : x == 2 ? 'b' : 'B';
    return s;
}

std::optional<Word> FreeGroup2::parse(const std::string& s) const {
    if (s == "e") return Word{};
    Word w;
    for (char c : s) {
        int x = c == 'a' ? 1 : c == 'A' ? -1 : c == 'b' ? 2 : c == 'B' ? -2 : 0;
        if (!x) return std::nullopt;
        w = OrderedGroup::mul(w, Word{x});
    }
    return w;
}

std::vector<Word> FreeGroup2::alphabet() const { return {Word{}, Word{1}, Word{2}}; }

std::vector<Word> FreeGroup2::witness_values() const {
    return {Word{}, Word{1}, Word{-1}, Word{2}, Word{-2}};
}

// ---------------------------------------------------------------- trees

Tree leaf(Word g) { return std::make_shared<const TNode>(TNode{TK::Leaf, std::move(g), -1, nullptr, nullptr}); }
Tree rimp(Tree result, Tree arg) {
    return std::make_shared<const TNode>(TNode{TK::RImp, {}, -1, std::move(result), std::move(arg)});
}
Tree limp(Tree arg, Tree result) {
    return std::make_shared<const TNode>(TNode{TK::LImp, {}, -1, std::move(arg), std::move(result)});
}
Tree tens(Tree a, Tree b) { return std::make_shared<const TNode>(TNode{TK::Tens, {}, -1, std::move(a), std::move(b)}); }
Tree tvar(int id) { return std::make_shared<const TNode>(TNode{TK::Var, {}, id, nullptr, nullptr}); }

int tree_compare(const Tree& x, const Tree& y) {
    if (x.get() == y.get()) return 0;
    if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
    switch (x->kind) {
        case TK::Leaf: return x->g == y->g ? 0 : (x->g < y->g ? -1 : 1);
        case TK::Var: return x->var == y->var ? 0 : (x->var < y->var ? -1 : 1);
        default: {
            int c = tree_compare(x->a, y->a);
            return c ? c : tree_compare(x->b, y->b);
        }
    }
}

bool same_trees(const TreeBag& a, const TreeBag& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](const Tree& x, const Tree& y) { return tree_compare(x, y) == 0; });
}

size_t leaves(const Tree& t) {
    if (t->kind == TK::Leaf || t->kind == TK::Var) return 1;
    return leaves(t->a) + leaves(t->b);
}

bool ground(const Tree& t) {
    if (t->kind == TK::Var) return false;
    if (t->kind == TK::Leaf) return true;
    return ground(t->a) && ground(t->b);
}

Word value(const OrderedGroup& g, const Tree& t) {
    switch (t->kind) {
        case TK::Leaf: return t->g;
        case TK::RImp: return g.mul(value(g, t->a), g.inv(value(g, t->b)));
        case TK::LImp: return g.mul(g.inv(value(g, t->a)), value(g, t->b));
        case TK::Tens: return g.mul(value(g, t->a), value(g, t->b));
        case TK::Var: break;
    }
    throw std::logic_error("value of a pattern variable");
}

std::string show_tree(const OrderedGroup& g, const Tree& t) {
    auto sub = [&](const Tree& s) {
        return (s->kind == TK::Leaf || s->kind == TK::Var) ? show_tree(g, s) : "(" + show_tree(g, s) + ")";
    };
    switch (t->kind) {
        case TK::Leaf: return g.show(t->g);
        case TK::Var: return "?" + std::to_string(t->var);
        case TK::RImp: return sub(t->a) + " <- " + sub(t->b);
        case TK::LImp: return sub(t->a) + " -o " + sub(t->b);
        case TK::Tens: return sub(t->a) + " * " + sub(t->b);
    }
    return "?";
}

namespace {

struct TreeParser {
    const OrderedGroup& g;
    const std::string& s;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& m) {
        throw std::invalid_argument("tree syntax: " + m + " at offset " + std::to_string(i));
    }
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(const std::string& tok) {
        ws();
        if (s.compare(i, tok.size(), tok) == 0) {
            i += tok.size();
            return true;
        }
        return false;
    }
    Tree atom() {
        ws();
        if (eat("(")) {
            Tree t = expr();
            if (!eat(")")) fail("expected )");
            return t;
        }
        size_t st = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '-' || s[i] == '+')) {
            if (s[i] == '-' && i + 1 < s.size() && s[i + 1] == 'o') break;
            ++i;
        }
        auto w = g.parse(s.substr(st, i - st));
        if (!w) {
            i = st;
            fail("bad group element");
        }
        return leaf(*w);
    }
    // a <- b <- c groups to the left, a -o b -o c to the right
    Tree expr() {
        Tree t = atom();
        if (eat("<-")) {
            t = rimp(t, atom());
            while (eat("<-")) t = rimp(t, atom());
            return t;
        }
        if (eat("-o")) return limp(t, expr());
        if (eat("*")) return tens(t, atom());
        return t;
    }
};

}  // namespace

Tree parse_tree(const OrderedGroup& g, const std::string& s) {
    TreeParser p{g, s};
    Tree t = p.expr();
    p.ws();
    if (p.i != s.size()) p.fail("trailing input");
    return t;
}

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::T: return "T";
        case Variant::Tprime: return "T'";
        case Variant::Tdoubleprime: return "T''";
    }
    return "?";
}

// ---------------------------------------------------------------- sets

TreeSet finite_set(TreeBag items) {
    auto n = std::make_shared<TreeSetNode>();
    n->kind = TSKind::Finite;
    n->items = std::move(items);
    return n;
}

TreeSet app_r(TreeSet m, TreeSet n) {
    auto s = std::make_shared<TreeSetNode>();
    s->kind = TSKind::AppR;
    s->l = std::move(m);
    s->r = std::move(n);
    return s;
}

TreeSet app_l(TreeSet n, TreeSet m, bool encoded) {
    auto s = std::make_shared<TreeSetNode>();
    s->kind = TSKind::AppL;
    s->l = std::move(n);
    s->r = std::move(m);
    s->encoded = encoded;
    return s;
}

std::string show_set(const OrderedGroup& g, const TreeSet& s) {
    switch (s->kind) {
        case TSKind::Finite: {
            std::string r = "{";
            bool first = true;
            for (const Tree& t : s->items) {
                if (!first) r += ", ";
                first = false;
                r += show_tree(g, t);
            }
            return r + "}";
        }
        case TSKind::Schema: {
            if (s->conds.empty()) return s->name;
            std::string r = s->name + "(";
            for (size_t i = 0; i < s->conds.size(); ++i) {
                if (i) r += ", ";
                r += show_set(g, s->conds[i].second);
            }
            return r + ")";
        }
        case TSKind::AppR: return "(" + show_set(g, s->l) + " " + show_set(g, s->r) + ")";
        case TSKind::AppL: return "(" + show_set(g, s->l) + " <@ " + show_set(g, s->r) + ")";
    }
    return "?";
}

namespace named {
namespace {

Tree v(int i) { return tvar(i); }
Tree e() { return leaf({}); }

TreeSet schema(std::string name, Tree pat, int nvars, std::vector<Constraint> cons = {},
               std::vector<std::pair<Tree, TreeSet>> conds = {}) {
    auto n = std::make_shared<TreeSetNode>();
    n->kind = TSKind::Schema;
    n->name = std::move(name);
    n->pattern = std::move(pat);
    n->nvars = nvars;
    n->constraints = std::move(cons);
    n->conds = std::move(conds);
    return n;
}

// t -o t', spelled natively in T'' and through (e <- t) <- (e <- t') in T
Tree lo(Variant var, Tree a, Tree b) {
    if (var == Variant::Tdoubleprime) return limp(std::move(a), std::move(b));
    return rimp(rimp(e(), std::move(a)), rimp(e(), std::move(b)));
}

std::vector<Constraint> exact(std::initializer_list<int> ids) {
    std::vector<Constraint> r;
    for (int i : ids) r.push_back({v(i), true});
    return r;
}

}  // namespace

TreeSet B() { return schema("B", rimp(rimp(rimp(v(2), v(0)), rimp(v(1), v(0))), rimp(v(2), v(1))), 3); }
TreeSet I() { return schema("I", rimp(v(0), v(0)), 1); }
TreeSet Ix() { return schema("Ix", rimp(rimp(v(0), rimp(v(1), v(1))), v(0)), 2); }
TreeSet Dot(TreeSet m) { return schema("dot", rimp(v(1), rimp(v(1), v(0))), 2, {}, {{v(0), std::move(m)}}); }

TreeSet P_internal() { return schema("P", rimp(rimp(rimp(v(0), rimp(e(), v(1))), v(1)), v(0)), 2); }
TreeSet L_internal() {
    return schema("L", rimp(rimp(v(2), rimp(v(0), rimp(e(), v(1)))), rimp(rimp(v(2), v(1)), v(0))), 3);
}
TreeSet P_tensor() { return schema("P", rimp(rimp(tens(v(0), v(1)), v(1)), v(0)), 2); }
TreeSet L_tensor() { return schema("L", rimp(rimp(v(2), tens(v(0), v(1))), rimp(rimp(v(2), v(1)), v(0))), 3); }

TreeSet Br(Variant var) {
    (void)var;
    return schema("B>", rimp(rimp(rimp(v(2), v(0)), rimp(v(1), v(0))), rimp(v(2), v(1))), 3);
}
TreeSet Bl(Variant var) {
    return schema("B<", lo(var, lo(var, v(1), v(2)), lo(var, lo(var, v(0), v(1)), lo(var, v(0), v(2)))), 3);
}
TreeSet Dr(Variant var) {
    return schema("D>", rimp(rimp(lo(var, v(0), v(1)), v(2)), lo(var, v(0), rimp(v(1), v(2)))), 3);
}
TreeSet Dl(Variant var) {
    return schema("D<", lo(var, rimp(lo(var, v(2), v(1)), v(0)), lo(var, v(2), rimp(v(1), v(0)))), 3);
}
TreeSet Ir(Variant var) {
    (void)var;
    return schema("I>", rimp(v(0), v(0)), 1);
}
TreeSet Il(Variant var) { return schema("I<", lo(var, v(0), v(0)), 1); }
TreeSet DagR(Variant var, TreeSet m) {
    return schema("dagR", rimp(v(1), v(0)), 2, {}, {{lo(var, v(0), v(1)), std::move(m)}});
}
TreeSet DagL(Variant var, TreeSet m) {
    return schema("dagL", lo(var, v(0), v(1)), 2, {}, {{rimp(v(1), v(0)), std::move(m)}});
}

TreeSet B_e() {
    return schema("B", rimp(rimp(rimp(v(2), v(0)), rimp(v(1), v(0))), rimp(v(2), v(1))), 3, exact({0, 1, 2}));
}
TreeSet I_e() { return schema("I", rimp(v(0), v(0)), 1, exact({0})); }
TreeSet C_e() {
    return schema("C", rimp(rimp(rimp(v(2), v(1)), v(0)), rimp(rimp(v(2), v(0)), v(1))), 3, exact({0, 1, 2}));
}
TreeSet gamma(TreeSet m) { return schema("gamma", rimp(v(0), v(0)), 1, {}, {{v(0), std::move(m)}}); }
TreeSet r_gamma() {
    return schema("r_gamma",
                  rimp(rimp(rimp(v(1), v(1)), rimp(v(0), v(0))), rimp(rimp(v(1), v(0)), rimp(v(1), v(0)))), 2);
}
TreeSet r_unit() { return schema("r_unit", rimp(rimp(v(0), v(0)), v(0)), 1, exact({0})); }
TreeSet r_counit() { return schema("r_counit", rimp(v(0), rimp(v(0), v(0))), 1, {{v(0), false}}); }

}  // namespace named

// ---------------------------------------------------------------- engine

namespace {

struct Subst {
    std::map<int, Tree> m;
    std::vector<Constraint> cons;
};

Tree walk(Tree t, const Subst& s) {
    while (t->kind == TK::Var) {
        auto it = s.m.find(t->var);
        if (it == s.m.end()) return t;
        t = it->second;
    }
    return t;
}

Tree resolve(const Tree& t, const Subst& s) {
    Tree w = walk(t, s);
    if (w->kind == TK::Leaf || w->kind == TK::Var) return w;
    Tree a = resolve(w->a, s), b = resolve(w->b, s);
    if (a == w->a && b == w->b) return w;
    return std::make_shared<const TNode>(TNode{w->kind, {}, -1, a, b});
}

bool occurs(int id, const Tree& t, const Subst& s) {
    Tree w = walk(t, s);
    if (w->kind == TK::Var) return w->var == id;
    if (w->kind == TK::Leaf) return false;
    return occurs(id, w->a, s) || occurs(id, w->b, s);
}

bool unify(const Tree& x, const Tree& y, Subst& s) {
    Tree a = walk(x, s), b = walk(y, s);
    if (a == b) return true;
    if (a->kind == TK::Var) {
        if (b->kind == TK::Var && b->var == a->var) return true;
        if (occurs(a->var, b, s)) return false;
        s.m[a->var] = b;
        return true;
    }
    if (b->kind == TK::Var) return unify(b, a, s);
    if (a->kind != b->kind) return false;
    if (a->kind == TK::Leaf) return a->g == b->g;
    return unify(a->a, b->a, s) && unify(a->b, b->b, s);
}

Tree rename(const Tree& t, int off) {
    switch (t->kind) {
        case TK::Leaf: return t;
        case TK::Var: return tvar(t->var + off);
        default: return std::make_shared<const TNode>(TNode{t->kind, {}, -1, rename(t->a, off), rename(t->b, off)});
    }
}

void vars_of(const Tree& t, std::map<int, size_t>& out) {
    if (t->kind == TK::Var) ++out[t->var];
    else if (t->kind != TK::Leaf) {
        vars_of(t->a, out);
        vars_of(t->b, out);
    }
}

Tree ground_with(const Tree& t, const std::map<int, Tree>& g) {
    switch (t->kind) {
        case TK::Leaf: return t;
        case TK::Var: {
            auto it = g.find(t->var);
            return it == g.end() ? t : it->second;
        }
        default: return std::make_shared<const TNode>(TNode{t->kind, {}, -1, ground_with(t->a, g), ground_with(t->b, g)});
    }
}

bool holds(const OrderedGroup& g, const Constraint& c, const Tree& t) {
    Word w = value(g, t);
    return c.exact ? w.empty() : g.positive(w);
}

}  // namespace

struct SolveCtx {
    const OrderedGroup& g;
    int next = 1;
    int fresh(int n) {
        int r = next;
        next += n;
        return r;
    }
};

namespace {

// drops substitutions whose ground constraints fail
bool consistent(const OrderedGroup& g, Subst& s) {
    std::vector<Constraint> keep;
    for (const Constraint& c : s.cons) {
        Tree t = resolve(c.term, s);
        if (ground(t)) {
            if (!holds(g, c, t)) return false;
        } else {
            keep.push_back({t, c.exact});
        }
    }
    s.cons = std::move(keep);
    return true;
}

void solve(const TreeSetNode& S, const Tree& p, const Subst& sigma, SolveCtx& ctx, std::vector<Subst>& out) {
    switch (S.kind) {
        case TSKind::Finite:
            for (const Tree& it : S.items) {
                Subst s = sigma;
                if (unify(it, p, s)) out.push_back(std::move(s));
            }
            return;
        case TSKind::Schema: {
            int off = ctx.fresh(S.nvars);
            Subst s = sigma;
            if (!unify(rename(S.pattern, off), p, s)) return;
            for (const Constraint& c : S.constraints) s.cons.push_back({rename(c.term, off), c.exact});
            if (!consistent(ctx.g, s)) return;
            std::vector<Subst> cur{std::move(s)};
            for (const auto& [cp, cs] : S.conds) {
                std::vector<Subst> next;
                Tree rp = rename(cp, off);
                for (const Subst& c : cur) solve(*cs, rp, c, ctx, next);
                cur = std::move(next);
                if (cur.empty()) return;
            }
            for (Subst& c : cur) out.push_back(std::move(c));
            return;
        }
        case TSKind::AppR:
        case TSKind::AppL: {
            Tree V = tvar(ctx.fresh(1));
            Tree fp;
            if (S.kind == TSKind::AppR) fp = rimp(p, V);
            else if (S.encoded) fp = rimp(rimp(leaf({}), V), rimp(leaf({}), p));
            else fp = limp(V, p);
            const TreeSetNode& fun = S.kind == TSKind::AppR ? *S.l : *S.r;
            const TreeSetNode& arg = S.kind == TSKind::AppR ? *S.r : *S.l;
            std::vector<Subst> mid;
            solve(fun, fp, sigma, ctx, mid);
            for (const Subst& m : mid) {
                std::vector<Subst> res;
                solve(arg, V, m, ctx, res);
                for (Subst& r : res)
                    if (consistent(ctx.g, r)) out.push_back(std::move(r));
            }
            return;
        }
    }
}

// residual constraints over variables the tree does not fix: search small witnesses
bool satisfiable(const OrderedGroup& g, const std::vector<Constraint>& cons, const std::map<int, Tree>& fixed) {
    std::vector<Tree> terms;
    std::map<int, size_t> free;
    for (const Constraint& c : cons) {
        Tree t = ground_with(c.term, fixed);
        terms.push_back(t);
        vars_of(t, free);
    }
    std::vector<int> ids;
    for (auto& [id, n] : free) ids.push_back(id);
    std::vector<Word> vals = g.witness_values();
    std::map<int, Tree> asg = fixed;
    std::function<bool(size_t)> go = [&](size_t k) -> bool {
        if (k == ids.size()) {
            for (size_t i = 0; i < cons.size(); ++i)
                if (!holds(g, cons[i], ground_with(terms[i], asg))) return false;
            return true;
        }
        for (const Word& w : vals) {
            asg[ids[k]] = leaf(w);
            if (go(k + 1)) return true;
        }
        asg.erase(ids[k]);
        return false;
    };
    return go(0);
}

}  // namespace

bool TreeEngine::in_language(const Tree& t) const {
    switch (t->kind) {
        case TK::Leaf: return true;
        case TK::Var: return false;
        case TK::RImp: break;
        case TK::LImp:
            if (variant_ != Variant::Tdoubleprime) return false;
            break;
        case TK::Tens:
            if (variant_ != Variant::Tprime) return false;
            break;
    }
    return in_language(t->a) && in_language(t->b);
}

bool TreeEngine::in_universe(const Tree& t) const {
    Word w = value(g_, t);
    return exact_ ? w.empty() : g_.positive(w);
}

bool TreeEngine::member(const TreeSet& s, const Tree& t) const {
    if (!in_language(t) || !in_universe(t)) return false;
    SolveCtx ctx{g_};
    std::vector<Subst> res;
    solve(*s, t, Subst{}, ctx, res);
    for (const Subst& r : res) {
        if (r.cons.empty()) return true;
        std::vector<Constraint> cons;
        for (const Constraint& c : r.cons) cons.push_back({resolve(c.term, r), c.exact});
        if (satisfiable(g_, cons, {})) return true;
    }
    return false;
}

const std::vector<Tree>& TreeEngine::trees_of_size(size_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::function<const std::vector<Tree>&(size_t)> get = [&](size_t k) -> const std::vector<Tree>& {
        auto it = by_size_.find(k);
        if (it != by_size_.end()) return it->second;
        std::vector<Tree> out;
        if (k == 1) {
            for (const Word& w : g_.alphabet()) out.push_back(leaf(w));
        } else {
            for (size_t i = 1; i < k; ++i) {
                const auto& ls = get(i);
                const auto& rs = get(k - i);
                for (const Tree& a : ls)
                    for (const Tree& b : rs) {
                        out.push_back(rimp(a, b));
                        if (variant_ == Variant::Tdoubleprime) out.push_back(limp(a, b));
                        if (variant_ == Variant::Tprime) out.push_back(tens(a, b));
                    }
            }
        }
        return by_size_[k] = std::move(out);
    };
    return get(n);
}

TreeBag TreeEngine::enumerate(const TreeSet& s, size_t bound) const {
    TreeBag out;
    SolveCtx ctx{g_};
    std::vector<Subst> res;
    Tree X = tvar(0);
    solve(*s, X, Subst{}, ctx, res);
    for (const Subst& r : res) {
        Tree pat = resolve(X, r);
        std::vector<Constraint> cons;
        for (const Constraint& c : r.cons) cons.push_back({resolve(c.term, r), c.exact});
        std::map<int, size_t> occ;
        vars_of(pat, occ);
        size_t fixed = leaves(pat);
        for (auto& [id, n] : occ) fixed -= n;
        std::vector<std::pair<int, size_t>> vs(occ.begin(), occ.end());
        if (fixed + vs.size() > bound && !vs.empty()) continue;
        if (fixed > bound) continue;
        std::map<int, Tree> asg;
        std::function<void(size_t, size_t)> go = [&](size_t k, size_t used) {
            if (k == vs.size()) {
                Tree t = ground_with(pat, asg);
                if (!in_language(t) || !in_universe(t)) return;
                if (!cons.empty() && !satisfiable(g_, cons, asg)) return;
                out.insert(t);
                return;
            }
            size_t rest = 0;
            for (size_t j = k + 1; j < vs.size(); ++j) rest += vs[j].second;
            for (size_t sz = 1; used + sz * vs[k].second + rest <= bound; ++sz) {
                for (const Tree& t : trees_of_size(sz)) {
                    asg[vs[k].first] = t;
                    go(k + 1, used + sz * vs[k].second);
                }
            }
            asg.erase(vs[k].first);
        };
        go(0, fixed);
    }
    return out;
}

}  // namespace wb
