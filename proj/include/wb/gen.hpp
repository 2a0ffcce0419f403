#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wb/comb.hpp"
#include "wb/term.hpp"

namespace wb {

using Rng = std::mt19937_64;

struct GenOptions {
    size_t depth = 6;
    bool exchange = false;   // linear: context may be permuted
    bool tensor = false;
    bool left_ops = false;
    std::vector<std::string> constants;
};

GenOptions gen_options_for(const Discipline& d, size_t depth);

// A term valid under the options whose free variables are exactly `ctx`, each
// used once; in the order of `ctx` unless exchange is allowed.
Term random_term(Rng& rng, const std::vector<std::string>& ctx, const GenOptions& o);
Term random_closed(Rng& rng, const GenOptions& o);
Term random_closed_normal(Rng& rng, const Discipline& d, size_t depth);

// unrestricted terms over `scope` (possibly open) for the ordinary calculus
Term random_ordinary(Rng& rng, std::vector<std::string> scope, size_t depth);
Term random_value(Rng& rng, const std::vector<std::string>& scope, size_t depth);
// an evaluation context E ::= [] | E N | V E
using Context = std::function<Term(const Term&)>;
Context random_eval_context(Rng& rng, const std::vector<std::string>& scope, size_t depth);

// A polynomial over the basis in which `ctx` occurs in the shape the basis's
// abstraction needs: each once and in order for the planar bases, each once
// for BCI, any number of times for SK.  Leaves may be holes from `holes`.
Comb random_polynomial(Rng& rng, Basis b, const std::vector<std::string>& ctx, size_t depth,
                       const std::vector<Elem>& holes);

std::string fresh_var_name(size_t i);

}  // namespace wb
