#pragma once

// Shared oracles for the unit, property and acceptance tests.

#include <string>

#include "wb/comb.hpp"
#include "wb/gen.hpp"
#include "wb/rewrite.hpp"

namespace wb::testing {

enum class Proc { SK, BCI, Planar, Right, Left };

inline const char* proc_name(Proc p) {
    switch (p) {
        case Proc::SK: return "sk";
        case Proc::BCI: return "bci";
        case Proc::Planar: return "planar";
        case Proc::Right: return "right";
        case Proc::Left: return "left";
    }
    return "?";
}

struct AbstractionCase {
    bool ok = false;
    bool diverged = false;   // M[a/x] had no normal form within fuel; caller resamples
    std::string detail;
};

// (abstract M x) a and M[a/x] must have alpha-equal normal forms, and the
// abstraction must drop exactly x from the variables.
inline AbstractionCase abstraction_case(Proc p, Rng& rng, size_t depth, uint64_t fuel = 100'000) {
    Basis b = p == Proc::SK ? Basis::SK : p == Proc::BCI ? Basis::BCI : p == Proc::Planar ? Basis::BIdot : Basis::BiBDI;
    Discipline hd = p == Proc::SK    ? Discipline::ordinary()
                    : p == Proc::BCI ? Discipline::linear()
                    : p == Proc::Planar ? Discipline::planar()
                                        : Discipline::biplanar();
    Discipline d = (p == Proc::Right || p == Proc::Left ? Discipline::biplanar() : Discipline::ordinary())
                       .with_constants({"a"});
    std::vector<Elem> holes;
    for (int i = 0; i < 3; ++i) holes.push_back(Elem(random_closed_normal(rng, hd, 3)));
    size_t n = 1 + rng() % 3;
    std::vector<std::string> ctx;
    for (size_t i = 0; i < n; ++i) ctx.push_back(fresh_var_name(i));
    Comb m = random_polynomial(rng, b, ctx, depth, holes);
    std::string x = p == Proc::Left ? ctx.front() : ctx.back();
    Comb f;
    switch (p) {
        case Proc::SK: f = abstract_sk(m, x); break;
        case Proc::BCI: f = abstract_bci(m, x); break;
        case Proc::Planar: f = abstract_planar(m, x); break;
        case Proc::Right: f = abstract_right(m, x); break;
        case Proc::Left: f = abstract_left(m, x); break;
    }
    AbstractionCase r;
    if (comb_has_var(f, x)) {
        r.detail = "abstraction keeps " + x + ": " + show(f);
        return r;
    }
    for (const auto& y : ctx)
        if (y != x && comb_has_var(m, y) != comb_has_var(f, y)) {
            r.detail = "abstraction changed variable " + y;
            return r;
        }
    Term a = cnst("a");
    Term lhs = p == Proc::Left ? lapp(a, expand(f)) : app(expand(f), a);
    Term rhs = substitute(expand(m), x, a);
    auto nr = normalize(rhs, d, fuel);
    if (!nr.normal) {
        r.diverged = true;
        return r;
    }
    auto nl = normalize(lhs, d, fuel);
    if (nl.normal && alpha_eq(nl.term, nr.term)) {
        r.ok = true;
        return r;
    }
    r.detail = "M = " + show(m) + ", x = " + x + ": " + pretty(nl.term) + " vs " + pretty(nr.term);
    return r;
}

}  // namespace wb::testing
