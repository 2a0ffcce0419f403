#include "wb/rewrite.hpp"

#include <random>
#include <vector>

namespace wb {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Beta: return "beta";
        case Rule::RBeta: return "rbeta";
        case Rule::LBeta: return "lbeta";
        case Rule::LetBeta: return "let-beta";
        case Rule::EtaContract: return "eta";
        case Rule::LetEtaContract: return "let-eta";
    }
    return "?";
}

const char* verdict_name(EqVerdict v) {
    switch (v) {
        case EqVerdict::Equal: return "Equal";
        case EqVerdict::NotEqual: return "NotEqual";
        case EqVerdict::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

std::optional<Rule> redex_rule(const Term& t, const Discipline& d) {
    if (t->tag == Tag::RApp && t->l->tag == Tag::RAbs) return d.allow_left_ops ? Rule::RBeta : Rule::Beta;
    if (t->tag == Tag::LApp && t->r->tag == Tag::LAbs) return Rule::LBeta;
    if (t->tag == Tag::Let && t->l->tag == Tag::Tensor) return Rule::LetBeta;
    return std::nullopt;
}

Term contract(const Term& t) {
    switch (t->tag) {
        case Tag::RApp: return substitute(t->l->l, t->l->a, t->r);
        case Tag::LApp: return substitute(t->r->l, t->r->a, t->l);
        case Tag::Let: {
            const Term& m1 = t->l->l;
            const Term& m2 = t->l->r;
            std::set<std::string> avoid;
            collect_names(t, avoid);
            std::string x = fresh_name(t->a, avoid);
            avoid.insert(x);
            std::string y = fresh_name(t->b, avoid);
            Term body = substitute(t->r, t->a, var(x));
            body = substitute(body, t->b, var(y));
            body = substitute(body, x, m1);
            return substitute(body, y, m2);
        }
        default: return t;
    }
}

using Path = std::vector<int>;

void collect_redexes(const Term& t, const Discipline& d, Path& cur, std::vector<Path>& out) {
    if (redex_rule(t, d)) out.push_back(cur);
    if (t->l) {
        cur.push_back(0);
        collect_redexes(t->l, d, cur, out);
        cur.pop_back();
    }
    if (t->r) {
        cur.push_back(1);
        collect_redexes(t->r, d, cur, out);
        cur.pop_back();
    }
}

bool first_pre(const Term& t, const Discipline& d, Path& cur) {
    if (redex_rule(t, d)) return true;
    if (t->l) {
        cur.push_back(0);
        if (first_pre(t->l, d, cur)) return true;
        cur.pop_back();
    }
    if (t->r) {
        cur.push_back(1);
        if (first_pre(t->r, d, cur)) return true;
        cur.pop_back();
    }
    return false;
}

bool first_right_inner(const Term& t, const Discipline& d, Path& cur) {
    if (t->r) {
        cur.push_back(1);
        if (first_right_inner(t->r, d, cur)) return true;
        cur.pop_back();
    }
    if (t->l) {
        cur.push_back(0);
        if (first_right_inner(t->l, d, cur)) return true;
        cur.pop_back();
    }
    return redex_rule(t, d).has_value();
}

Term rebuild(const Term& t, const Path& p, size_t i, const Discipline& d, Rule& rule) {
    if (i == p.size()) {
        rule = *redex_rule(t, d);
        return contract(t);
    }
    Node n = *t;
    if (p[i] == 0) n.l = rebuild(t->l, p, i + 1, d, rule);
    else n.r = rebuild(t->r, p, i + 1, d, rule);
    return std::make_shared<const Node>(std::move(n));
}

std::string path_string(const Path& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(p[i]);
    }
    return s.empty() ? "root" : s;
}

}  // namespace

bool has_beta_redex(const Term& t) {
    Discipline any = Discipline::biplanar();
    Path p;
    return first_pre(t, any, p);
}

std::optional<StepInfo> step_info(const Term& t, const Discipline& d, Strategy s, uint64_t& rng_state) {
    Path p;
    bool found = false;
    switch (s.kind) {
        case Strategy::LeftmostOutermost: found = first_pre(t, d, p); break;
        case Strategy::RightmostInnermost: found = first_right_inner(t, d, p); break;
        case Strategy::Random: {
            std::vector<Path> all;
            collect_redexes(t, d, p, all);
            if (!all.empty()) {
                std::mt19937_64 gen(rng_state);
                rng_state = gen();
                p = all[rng_state % all.size()];
                found = true;
            }
            break;
        }
    }
    if (!found) return std::nullopt;
    Rule rule{};
    Term r = rebuild(t, p, 0, d, rule);
    return StepInfo{r, rule, path_string(p)};
}

std::optional<Term> step(const Term& t, const Discipline& d, Strategy s) {
    uint64_t st = s.seed;
    auto r = step_info(t, d, s, st);
    if (!r) return std::nullopt;
    return r->result;
}

namespace {

Term eta_rec(const Term& t, const Discipline& d, uint64_t& n) {
    if (!t->l && !t->r) return t;
    Node m = *t;
    if (m.l) m.l = eta_rec(m.l, d, n);
    if (m.r) m.r = eta_rec(m.r, d, n);
    if (m.tag == Tag::RAbs && m.l->tag == Tag::RApp && m.l->r->tag == Tag::Var && m.l->r->a == m.a &&
        !occurs_free(m.l->l, m.a)) {
        ++n;
        return m.l->l;
    }
    if (m.tag == Tag::LAbs && m.l->tag == Tag::LApp && m.l->l->tag == Tag::Var && m.l->l->a == m.a &&
        !occurs_free(m.l->r, m.a)) {
        ++n;
        return m.l->r;
    }
    if (m.tag == Tag::Let && m.r->tag == Tag::Tensor && m.r->l->tag == Tag::Var && m.r->r->tag == Tag::Var &&
        m.r->l->a == m.a && m.r->r->a == m.b && m.a != m.b) {
        ++n;
        return m.l;
    }
    return std::make_shared<const Node>(std::move(m));
}

}  // namespace

Term eta_contract(const Term& t, const Discipline& d, uint64_t* count) {
    uint64_t n = 0;
    Term r = eta_rec(t, d, n);
    if (count) *count += n;
    return r;
}

NormalizeOutcome normalize(const Term& t, const Discipline& d, uint64_t fuel, Strategy s, const TraceFn& trace) {
    NormalizeOutcome out;
    out.term = t;
    uint64_t rng = s.seed;
    for (;;) {
        while (out.steps < fuel) {
            auto st = step_info(out.term, d, s, rng);
            if (!st) break;
            out.term = st->result;
            ++out.steps;
            if (trace) trace(out.steps, st->rule, st->path);
            if (out.steps % 16 == 0 && term_size(out.term) > kMaxTermSize) {
                out.too_large = true;
                return out;
            }
        }
        if (out.steps >= fuel) {
            Path p;
            out.normal = !first_pre(out.term, d, p);
            if (!out.normal) return out;
        }
        if (!d.eta) {
            out.normal = true;
            return out;
        }
        uint64_t n = 0;
        Term c = eta_contract(out.term, d, &n);
        if (n == 0) {
            out.normal = true;
            return out;
        }
        if (trace) trace(out.steps + 1, Rule::EtaContract, "pass");
        out.term = c;
        out.steps += n;
    }
}

EqVerdict equal(const Term& a, const Term& b, const Discipline& d, uint64_t fuel) {
    auto na = normalize(a, d, fuel);
    if (!na.normal) return EqVerdict::Unknown;
    auto nb = normalize(b, d, fuel);
    if (!nb.normal) return EqVerdict::Unknown;
    return alpha_eq(na.term, nb.term) ? EqVerdict::Equal : EqVerdict::NotEqual;
}

}  // namespace wb
