#include "wb/gen.hpp"

#include <algorithm>

#include "wb/rewrite.hpp"

namespace wb {

namespace {

size_t pick(Rng& rng, size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

struct TermGen {
    Rng& rng;
    const GenOptions& o;
    size_t counter = 0;

    std::string fresh() { return fresh_var_name(counter++); }

    std::vector<std::string> order(std::vector<std::string> ctx) {
        if (o.exchange) std::shuffle(ctx.begin(), ctx.end(), rng);
        return ctx;
    }

    Term spine(const std::vector<std::string>& ctx) {
        Term t = var(ctx[0]);
        for (size_t i = 1; i < ctx.size(); ++i) t = app(t, var(ctx[i]));
        return t;
    }

    Term atom_closed() {
        if (!o.constants.empty() && coin(rng, 0.4)) return cnst(o.constants[pick(rng, o.constants.size())]);
        std::string x = fresh();
        return lam(x, var(x));
    }

    Term gen(std::vector<std::string> ctx, size_t depth) {
        ctx = order(std::move(ctx));
        if (depth == 0) {
            if (ctx.empty()) return atom_closed();
            return spine(ctx);
        }
        if (ctx.size() == 1 && coin(rng, 0.3)) return var(ctx[0]);
        if (ctx.empty() && coin(rng, 0.2)) return atom_closed();
        enum { Abs, App, LAbs, LApp, Tens, Let };
        std::vector<int> choices{Abs, App, App};
        if (o.left_ops) {
            choices.push_back(LAbs);
            choices.push_back(LApp);
        }
        if (o.tensor) {
            choices.push_back(Tens);
            choices.push_back(Let);
        }
        int c = choices[pick(rng, choices.size())];
        size_t k = pick(rng, ctx.size() + 1);
        std::vector<std::string> pre(ctx.begin(), ctx.begin() + k), post(ctx.begin() + k, ctx.end());
        switch (c) {
            case Abs: {
                std::string x = fresh();
                auto c2 = ctx;
                c2.push_back(x);
                return lam(x, gen(c2, depth - 1));
            }
            case LAbs: {
                std::string x = fresh();
                std::vector<std::string> c2{x};
                c2.insert(c2.end(), ctx.begin(), ctx.end());
                return llam(x, gen(c2, depth - 1));
            }
            case App: return app(gen(pre, depth - 1), gen(post, depth - 1));
            case LApp: return lapp(gen(pre, depth - 1), gen(post, depth - 1));
            case Tens: return tensor(gen(pre, depth - 1), gen(post, depth - 1));
            case Let: {
                std::string x = fresh(), y = fresh();
                auto body = pre;
                body.push_back(x);
                body.push_back(y);
                Term scrut = gen(post, depth - 1);
                return let_pair(x, y, scrut, gen_ordered(body, depth - 1));
            }
        }
        return atom_closed();
    }

    // let binders must stay the two rightmost free variables of the body
    Term gen_ordered(const std::vector<std::string>& ctx, size_t depth) {
        if (!o.exchange) return gen(ctx, depth);
        GenOptions o2 = o;
        o2.exchange = false;
        TermGen sub{rng, o2, counter};
        Term t = sub.gen(ctx, depth);
        counter = sub.counter;
        return t;
    }
};

}  // namespace

std::string fresh_var_name(size_t i) {
    static const char* base[] = {"x", "y", "z", "u", "v", "w"};
    return std::string(base[i % 6]) + (i < 6 ? "" : std::to_string(i / 6));
}

GenOptions gen_options_for(const Discipline& d, size_t depth) {
    GenOptions o;
    o.depth = depth;
    o.exchange = d.allow_exchange;
    o.tensor = d.allow_tensor;
    o.left_ops = d.allow_left_ops;
    o.constants.assign(d.constants.begin(), d.constants.end());
    return o;
}

Term random_term(Rng& rng, const std::vector<std::string>& ctx, const GenOptions& o) {
    TermGen g{rng, o};
    g.counter = 100;   // keeps generated binders apart from ctx names
    return g.gen(ctx, o.depth);
}

Term random_closed(Rng& rng, const GenOptions& o) { return random_term(rng, {}, o); }

Term random_closed_normal(Rng& rng, const Discipline& d, size_t depth) {
    Term t = random_closed(rng, gen_options_for(d, depth));
    return normalize(t, d).term;
}

Term random_ordinary(Rng& rng, std::vector<std::string> scope, size_t depth) {
    if (depth == 0 || (!scope.empty() && coin(rng, 0.25))) {
        if (scope.empty()) return lam("x", var("x"));
        return var(scope[pick(rng, scope.size())]);
    }
    if (coin(rng, 0.45)) {
        std::string x = fresh_var_name(scope.size() + 3);
        scope.push_back(x);
        return lam(x, random_ordinary(rng, scope, depth - 1));
    }
    return app(random_ordinary(rng, scope, depth - 1), random_ordinary(rng, scope, depth - 1));
}

Term random_value(Rng& rng, const std::vector<std::string>& scope, size_t depth) {
    if (!scope.empty() && coin(rng, 0.4)) return var(scope[pick(rng, scope.size())]);
    auto s2 = scope;
    std::string x = fresh_var_name(scope.size() + 3);
    s2.push_back(x);
    return lam(x, random_ordinary(rng, s2, depth));
}

Context random_eval_context(Rng& rng, const std::vector<std::string>& scope, size_t depth) {
    if (depth == 0 || coin(rng, 0.35)) return [](const Term& t) { return t; };
    Context inner = random_eval_context(rng, scope, depth - 1);
    if (coin(rng)) {
        Term n = random_ordinary(rng, scope, 2);
        return [inner, n](const Term& t) { return app(inner(t), n); };
    }
    Term v = random_value(rng, scope, 2);
    return [inner, v](const Term& t) { return app(v, inner(t)); };
}

namespace {

struct PolyGen {
    Rng& rng;
    Basis b;
    const std::vector<Elem>& holes;

    Comb closed_leaf() {
        const auto& info = basis_info(b);
        if (!holes.empty() && coin(rng, 0.35)) return chole(holes[pick(rng, holes.size())]);
        return csym(info.symbols[pick(rng, info.symbols.size())]);
    }

    Comb closed(size_t depth) {
        const auto& info = basis_info(b);
        if (depth == 0 || coin(rng, 0.4)) return closed_leaf();
        if (!info.unary.empty() && coin(rng, 0.2))
            return cunary(info.unary[pick(rng, info.unary.size())], closed(depth - 1));
        if (b == Basis::BiBDI && coin(rng)) return clapp(closed(depth - 1), closed(depth - 1));
        return capp(closed(depth - 1), closed(depth - 1));
    }

    // every variable of ctx exactly once, in order
    Comb ordered(const std::vector<std::string>& ctx, size_t depth) {
        if (ctx.empty()) return closed(depth);
        if (ctx.size() == 1 && (depth == 0 || coin(rng, 0.3))) return cvar(ctx[0]);
        if (depth == 0) {
            Comb t = cvar(ctx[0]);
            for (size_t i = 1; i < ctx.size(); ++i) t = capp(t, cvar(ctx[i]));
            return t;
        }
        size_t k = pick(rng, ctx.size() + 1);
        std::vector<std::string> pre(ctx.begin(), ctx.begin() + k), post(ctx.begin() + k, ctx.end());
        if (b == Basis::BiBDI && coin(rng)) return clapp(ordered(pre, depth - 1), ordered(post, depth - 1));
        return capp(ordered(pre, depth - 1), ordered(post, depth - 1));
    }

    Comb any(const std::vector<std::string>& ctx, size_t depth) {
        if (depth == 0 || coin(rng, 0.3)) {
            if (!ctx.empty() && coin(rng, 0.6)) return cvar(ctx[pick(rng, ctx.size())]);
            return closed_leaf();
        }
        return capp(any(ctx, depth - 1), any(ctx, depth - 1));
    }
};

}  // namespace

Comb random_polynomial(Rng& rng, Basis b, const std::vector<std::string>& ctx, size_t depth,
                       const std::vector<Elem>& holes) {
    PolyGen g{rng, b, holes};
    switch (b) {
        case Basis::SK: {
            // the abstracted variable is the last one in ctx; make sure it shows up
            Comb m = g.any(ctx, depth);
            if (!ctx.empty() && !comb_has_var(m, ctx.back())) m = capp(m, cvar(ctx.back()));
            return m;
        }
        case Basis::BCI: {
            auto c = ctx;
            std::shuffle(c.begin(), c.end(), rng);
            return g.ordered(c, depth);
        }
        default: return g.ordered(ctx, depth);
    }
}

}  // namespace wb
