#include "wb/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace wb {

void ApplicativeStructure::install_unary(const std::string& op, UnaryFn f) {
    if (sig_.unary.count(op)) throw std::invalid_argument("unary operation already installed: " + op);
    sig_.unary[op] = std::move(f);
}

std::optional<Elem> ApplicativeStructure::distinguished(const std::string& symbol) const {
    auto it = sig_.nullary.find(symbol);
    if (it == sig_.nullary.end()) return std::nullopt;
    return it->second;
}

std::optional<Elem> ApplicativeStructure::unary(const std::string& op, const Elem& e) const {
    auto it = sig_.unary.find(op);
    if (it == sig_.unary.end()) return std::nullopt;
    return it->second(e);
}

std::optional<Elem> interpret(const ApplicativeStructure& a, const Comb& m, const Env& env, const Signature* sig) {
    const Signature& s = sig ? *sig : a.signature();
    switch (m->tag) {
        case CTag::Sym: {
            auto it = s.nullary.find(m->name);
            if (it == s.nullary.end()) throw MissingElement("no element installed for " + m->name);
            return it->second;
        }
        case CTag::Unary: {
            auto it = s.unary.find(m->name);
            if (it == s.unary.end()) throw MissingElement("no operation installed for " + m->name);
            auto x = interpret(a, m->l, env, sig);
            if (!x) return std::nullopt;
            return it->second(*x);
        }
        case CTag::App: {
            auto f = interpret(a, m->l, env, sig);
            if (!f) return std::nullopt;
            auto x = interpret(a, m->r, env, sig);
            if (!x) return std::nullopt;
            return a.rapp(*f, *x);
        }
        case CTag::LApp: {
            if (!a.has_lapp()) throw MissingElement(a.name() + " has no left application");
            auto x = interpret(a, m->l, env, sig);
            if (!x) return std::nullopt;
            auto f = interpret(a, m->r, env, sig);
            if (!f) return std::nullopt;
            return a.lapp(*x, *f);
        }
        case CTag::Hole: return m->hole;
        case CTag::Var: {
            auto it = env.find(m->name);
            if (it == env.end()) throw MissingElement("unbound variable " + m->name);
            return it->second;
        }
    }
    return std::nullopt;
}

EqVerdict kleene_eq(const ApplicativeStructure& a, const std::optional<Elem>& x, const std::optional<Elem>& y) {
    if (!x && !y) return EqVerdict::Equal;
    if (!x || !y) return EqVerdict::NotEqual;
    return a.eq(*x, *y);
}

// ---------------------------------------------------------------- axioms

namespace {

void add_vars(const Comb& m, std::vector<std::string>& out) {
    for (const auto& v : comb_var_sequence(m))
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

}  // namespace

Axiom make_axiom(const std::string& name, const std::string& lhs, const std::string& rhs) {
    Axiom ax{name, parse_comb(lhs), parse_comb(rhs), {}};
    add_vars(ax.lhs, ax.vars);
    add_vars(ax.rhs, ax.vars);
    return ax;
}

std::vector<Axiom> parse_axioms(const std::string& text) {
    std::vector<Axiom> out;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto c = line.find("--");
        if (c != std::string::npos) line.erase(c);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("axiom file line " + std::to_string(lineno) + ": " + why);
        };
        if (line.rfind("axiom", 0) != 0) fail("expected 'axiom NAME: lhs = rhs'");
        auto colon = line.find(':');
        if (colon == std::string::npos) fail("missing ':'");
        std::string name = line.substr(5, colon - 5);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty()) fail("missing axiom name");
        std::string eq = line.substr(colon + 1);
        auto e = eq.find('=');
        if (e == std::string::npos) fail("missing '='");
        try {
            out.push_back(make_axiom(name, eq.substr(0, e), eq.substr(e + 1)));
        } catch (const CombParseError& err) {
            fail(err.what());
        }
    }
    return out;
}

const char* class_name(Basis b) {
    switch (b) {
        case Basis::SK: return "SK";
        case Basis::BCI: return "BCI";
        case Basis::BIdot: return "BIdot";
        case Basis::BIIdot: return "BIIdot";
        case Basis::BIILP: return "BIILP";
        case Basis::BiBDI: return "biBDI";
        case Basis::BIIdotCirc: return "BIIdotCirc";
    }
    return "?";
}

std::optional<Basis> class_by_name(const std::string& s) {
    for (Basis b : class_chain())
        if (s == class_name(b) || s == basis_info(b).name) return b;
    return std::nullopt;
}

const std::vector<Basis>& class_chain() {
    static const std::vector<Basis> chain = {Basis::SK,    Basis::BCI,   Basis::BiBDI,     Basis::BIILP,
                                             Basis::BIIdot, Basis::BIdot, Basis::BIIdotCirc};
    return chain;
}

const std::vector<Axiom>& class_axioms(Basis b) {
    static const std::map<Basis, std::vector<Axiom>> table = [] {
        Axiom S = make_axiom("S", "S x y z", "x z (y z)");
        Axiom K = make_axiom("K", "K x y", "x");
        Axiom B = make_axiom("B", "B x y z", "x (y z)");
        Axiom C = make_axiom("C", "C x y z", "x z y");
        Axiom I = make_axiom("I", "I x", "x");
        Axiom dot = make_axiom("dot", "dot(x) y", "y x");
        Axiom Ix = make_axiom("Ix", "Ix x I", "x");
        Axiom L = make_axiom("L", "L x (P y z)", "x y z");
        Axiom Idot = make_axiom("Idot", "Idot y", "y I");
        Axiom circ = make_axiom("circ", "circ(a) x y", "x (a y)");
        std::map<Basis, std::vector<Axiom>> t;
        t[Basis::SK] = {S, K};
        t[Basis::BCI] = {B, C, I};
        t[Basis::BIdot] = {B, I, dot};
        t[Basis::BIIdot] = {B, I, Ix, dot};
        t[Basis::BIILP] = {B, I, Ix, L, dot};
        t[Basis::BIIdotCirc] = {B, I, Idot, circ};
        t[Basis::BiBDI] = {
            make_axiom("B>", "B> x y z", "x (y z)"),
            make_axiom("B<", "z <@ (y <@ (x <@ B<))", "(z <@ y) <@ x"),
            make_axiom("D>", "x <@ (D> y z)", "(x <@ y) z"),
            make_axiom("D<", "(z <@ (y <@ D<)) x", "z <@ (y x)"),
            make_axiom("I>", "I> x", "x"),
            make_axiom("I<", "x <@ I<", "x"),
            make_axiom("dagR", "dagR(a) x", "x <@ a"),
            make_axiom("dagL", "x <@ dagL(a)", "a x"),
        };
        return t;
    }();
    return table.at(b);
}

const char* axiom_verdict_name(AxiomVerdict v) {
    switch (v) {
        case AxiomVerdict::Holds: return "Holds";
        case AxiomVerdict::FailsAt: return "FailsAt";
        case AxiomVerdict::Unknown: return "Unknown";
    }
    return "?";
}

std::vector<std::vector<size_t>> sample_tuples(size_t pool, size_t arity, size_t n, uint64_t seed) {
    std::vector<std::vector<size_t>> out;
    if (pool == 0) return out;
    double total = 1;
    for (size_t i = 0; i < arity; ++i) total *= static_cast<double>(pool);
    if (total <= static_cast<double>(n)) {
        std::vector<size_t> cur(arity, 0);
        for (;;) {
            out.push_back(cur);
            size_t k = 0;
            while (k < arity && ++cur[k] == pool) cur[k++] = 0;
            if (k == arity) break;
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> d(0, pool - 1);
    for (size_t i = 0; i < n; ++i) {
        std::vector<size_t> t(arity);
        for (auto& x : t) x = d(rng);
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

struct Outcome {
    EqVerdict v = EqVerdict::Equal;
    std::string error;
};

Outcome run_instance(const ApplicativeStructure& a, const Axiom& ax, const Env& env, const Signature* sig) {
    Outcome o;
    try {
        o.v = kleene_eq(a, interpret(a, ax.lhs, env, sig), interpret(a, ax.rhs, env, sig));
    } catch (const std::exception& e) {
        o.v = EqVerdict::Unknown;
        o.error = e.what();
    }
    return o;
}

void fill_witness(const ApplicativeStructure& a, const Axiom& ax, const Env& env, const Signature* sig,
                  AxiomReport& r) {
    for (const auto& v : ax.vars) r.witness.emplace_back(v, a.show(env.at(v)));
    auto l = interpret(a, ax.lhs, env, sig);
    auto rr = interpret(a, ax.rhs, env, sig);
    r.lhs = l ? a.show(*l) : "undefined";
    r.rhs = rr ? a.show(*rr) : "undefined";
}

}  // namespace

AxiomReport check_axiom(const ApplicativeStructure& a, const Axiom& ax, const CheckMode& mode, const Signature* sig,
                        Exec exec) {
    AxiomReport r;
    r.axiom = ax.name;
    r.mode = mode;
    // a missing symbol is a usage error, not a failure of the axiom
    {
        const Signature& s = sig ? *sig : a.signature();
        std::function<void(const Comb&)> need = [&](const Comb& m) {
            if (!m) return;
            if (m->tag == CTag::Sym && !s.nullary.count(m->name))
                throw MissingElement("no element installed for " + m->name);
            if (m->tag == CTag::Unary && !s.unary.count(m->name))
                throw MissingElement("no operation installed for " + m->name);
            need(m->l);
            need(m->r);
        };
        need(ax.lhs);
        need(ax.rhs);
    }
    if (mode.kind == CheckMode::FreshConstants) {
        auto cs = a.fresh_constants(ax.vars.size());
        if (!cs) throw std::invalid_argument(a.name() + " does not support fresh constants");
        Env env;
        for (size_t i = 0; i < ax.vars.size(); ++i) env[ax.vars[i]] = (*cs)[i];
        Outcome o = run_instance(a, ax, env, sig);
        r.checked = 1;
        if (o.v == EqVerdict::Equal) r.verdict = AxiomVerdict::Holds;
        else if (o.v == EqVerdict::NotEqual) {
            r.verdict = AxiomVerdict::FailsAt;
            fill_witness(a, ax, env, sig, r);
        } else {
            r.verdict = AxiomVerdict::Unknown;
        }
        return r;
    }

    std::vector<Elem> pool = a.sample(mode.seed, mode.pool);
    auto tuples = sample_tuples(pool.size(), ax.vars.size(), mode.samples, mode.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Outcome> res(tuples.size());
    auto env_of = [&](size_t i) {
        Env env;
        for (size_t k = 0; k < ax.vars.size(); ++k) env[ax.vars[k]] = pool[tuples[i][k]];
        return env;
    };
    const long n = static_cast<long>(tuples.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) res[i] = run_instance(a, ax, env_of(i), sig);
    } else {
        for (long i = 0; i < n; ++i) res[i] = run_instance(a, ax, env_of(i), sig);
    }
    r.checked = tuples.size();
    bool unknown = false;
    for (size_t i = 0; i < res.size(); ++i) {
        if (res[i].v == EqVerdict::NotEqual) {
            r.verdict = AxiomVerdict::FailsAt;
            fill_witness(a, ax, env_of(i), sig, r);
            return r;
        }
        if (res[i].v == EqVerdict::Unknown) unknown = true;
    }
    r.verdict = unknown || tuples.empty() ? AxiomVerdict::Unknown : AxiomVerdict::Holds;
    return r;
}

// ---------------------------------------------------------------- derivations

Comb abstract_all(Basis b, Comb m, const std::vector<std::string>& xs) {
    for (size_t i = xs.size(); i-- > 0;) m = abstract_with(b, m, xs[i]);
    return m;
}

UnaryFn unary_from_template(const ApplicativeStructure& a, const Comb& tmpl, const Signature& sig) {
    auto s = std::make_shared<Signature>(sig);
    const ApplicativeStructure* ap = &a;
    return [ap, tmpl, s](const Elem& x) -> std::optional<Elem> { return interpret(*ap, tmpl, Env{{"a", x}}, s.get()); };
}

namespace {

bool has_all(const Signature& s, Basis b) {
    const auto& info = basis_info(b);
    for (const auto& x : info.symbols)
        if (!s.nullary.count(x)) return false;
    for (const auto& x : info.unary)
        if (!s.unary.count(x)) return false;
    return true;
}

std::optional<Elem> closed_elem(const ApplicativeStructure& a, const Comb& m, const Signature& s) {
    return interpret(a, m, {}, &s);
}

bool put(const ApplicativeStructure& a, Signature& out, const std::string& sym, const Comb& m, const Signature& s) {
    auto e = closed_elem(a, m, s);
    if (!e) return false;
    out.nullary[sym] = *e;
    return true;
}

}  // namespace

std::optional<Signature> derive_candidates(const ApplicativeStructure& a, Basis from, const Signature& have, Basis to) {
    if (!has_all(have, from)) return std::nullopt;
    Signature out;
    const Signature& s = have;
    auto same = [&](std::initializer_list<const char*> syms, std::initializer_list<const char*> ops) {
        for (auto x : syms) out.nullary[x] = s.nullary.at(x);
        for (auto x : ops) out.unary[x] = s.unary.at(x);
    };
    try {
        if (from == Basis::SK && to == Basis::BCI) {
            if (!put(a, out, "B", abstract_all(Basis::SK, parse_comb("x (y z)"), {"x", "y", "z"}), s)) return std::nullopt;
            if (!put(a, out, "C", abstract_all(Basis::SK, parse_comb("x z y"), {"x", "y", "z"}), s)) return std::nullopt;
            if (!put(a, out, "I", parse_comb("S K K"), s)) return std::nullopt;
            return out;
        }
        if (from == Basis::BCI && to == Basis::BiBDI) {
            // the left application of the structure must be the flipped right one
            if (!a.has_lapp()) return std::nullopt;
            out.nullary["B>"] = out.nullary["B<"] = s.nullary.at("B");
            out.nullary["I>"] = out.nullary["I<"] = s.nullary.at("I");
            Comb d = abstract_all(Basis::BCI, parse_comb("y x z"), {"y", "z", "x"});
            if (!put(a, out, "D>", d, s)) return std::nullopt;
            out.nullary["D<"] = out.nullary["D>"];
            UnaryFn id = [](const Elem& x) -> std::optional<Elem> { return x; };
            out.unary["dagR"] = id;
            out.unary["dagL"] = id;
            return out;
        }
        if (from == Basis::BCI && to == Basis::BIdot) {
            same({"B", "I"}, {});
            out.unary["dot"] = unary_from_template(a, parse_comb("C I a"), s);
            return out;
        }
        if (from == Basis::BiBDI && to == Basis::BIILP) {
            out.nullary["B"] = s.nullary.at("B>");
            out.nullary["I"] = s.nullary.at("I>");
            if (!put(a, out, "Ix", abstract_all(Basis::BiBDI, parse_comb("x <@ (y I<)"), {"x", "y"}), s))
                return std::nullopt;
            if (!put(a, out, "L", abstract_all(Basis::BiBDI, parse_comb("x <@ y"), {"x", "y"}), s)) return std::nullopt;
            Comb p = abstract_left(parse_comb("t x y"), "t");
            if (!put(a, out, "P", abstract_all(Basis::BiBDI, p, {"x", "y"}), s)) return std::nullopt;
            Comb dot = cunary("dagR", abstract_left(parse_comb("x a"), "x"));
            out.unary["dot"] = unary_from_template(a, dot, s);
            return out;
        }
        if ((from == Basis::BIILP && to == Basis::BIIdot)) {
            same({"B", "I", "Ix"}, {"dot"});
            return out;
        }
        if (from == Basis::BIIdot && to == Basis::BIdot) {
            same({"B", "I"}, {"dot"});
            return out;
        }
        if (from == Basis::BIdot && to == Basis::BIIdotCirc) {
            same({"B", "I"}, {});
            if (!put(a, out, "Idot", parse_comb("dot(I)"), s)) return std::nullopt;
            out.unary["circ"] = unary_from_template(a, parse_comb("B (dot(a)) B"), s);
            return out;
        }
    } catch (const MissingElement&) {
        return std::nullopt;
    }
    return std::nullopt;
}

ClassReport classify(const ApplicativeStructure& a, const Signature& candidates, const CheckMode& mode) {
    ClassReport rep;
    Signature cur = candidates;
    for (const auto& [k, v] : a.signature().nullary)
        if (!cur.nullary.count(k)) cur.nullary[k] = v;
    for (const auto& [k, v] : a.signature().unary)
        if (!cur.unary.count(k)) cur.unary[k] = v;

    auto passes = [&](Basis b, const Signature& s, std::vector<AxiomReport>& out) {
        bool ok = true;
        for (const Axiom& ax : class_axioms(b)) {
            try {
                AxiomReport r = check_axiom(a, ax, mode, &s);
                ok = ok && r.verdict == AxiomVerdict::Holds;
                out.push_back(std::move(r));
            } catch (const std::exception&) {
                return false;
            }
        }
        return ok;
    };

    std::map<Basis, Signature> passed;
    for (Basis b : class_chain()) {
        std::vector<AxiomReport> details;
        bool ok = false;
        std::string how;
        if (has_all(cur, b)) {
            ok = passes(b, cur, details);
            how = "given candidates";
        }
        if (!ok) {
            // canonical derivation from a class that already passed
            for (auto it = passed.rbegin(); it != passed.rend() && !ok; ++it) {
                auto d = derive_candidates(a, it->first, it->second, b);
                if (!d) continue;
                std::vector<AxiomReport> dd;
                Signature merged = cur;
                for (auto& [k, v] : d->nullary) merged.nullary[k] = v;
                for (auto& [k, v] : d->unary) merged.unary[k] = v;
                if (passes(b, merged, dd)) {
                    ok = true;
                    details = std::move(dd);
                    how = std::string("derived from ") + class_name(it->first);
                    for (auto& [k, v] : d->nullary)
                        if (!cur.nullary.count(k)) cur.nullary[k] = v;
                    for (auto& [k, v] : d->unary)
                        if (!cur.unary.count(k)) cur.unary[k] = v;
                    passed[b] = merged;
                }
            }
        } else {
            passed[b] = cur;
        }
        if (ok) {
            rep.classes.insert(class_name(b));
            rep.provenance[class_name(b)] = how;
        }
        rep.details[class_name(b)] = std::move(details);
    }
    rep.notes.push_back(
        "classes are witnessed by the candidates tried; a missing class is not a proof that no candidates exist");
    for (const auto& n : a.notes()) rep.notes.push_back(n);
    return rep;
}

}  // namespace wb
