#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "wb/term.hpp"

namespace wb {

enum class Rule { Beta, RBeta, LBeta, LetBeta, EtaContract, LetEtaContract };
const char* rule_name(Rule r);

struct Strategy {
    enum Kind { LeftmostOutermost, RightmostInnermost, Random } kind = LeftmostOutermost;
    uint64_t seed = 0;

    static Strategy lo() { return {LeftmostOutermost, 0}; }
    static Strategy ri() { return {RightmostInnermost, 0}; }
    static Strategy random(uint64_t s) { return {Random, s}; }
};

struct StepInfo {
    Term result;
    Rule rule;
    std::string path;
};

constexpr uint64_t kDefaultFuel = 1'000'000;
// terms that outgrow this many nodes are treated as out of fuel
constexpr size_t kMaxTermSize = 50'000;

// one beta-family step; eta is never stepped here (see normalize)
std::optional<Term> step(const Term& t, const Discipline& d, Strategy s);
std::optional<StepInfo> step_info(const Term& t, const Discipline& d, Strategy s, uint64_t& rng_state);

struct NormalizeOutcome {
    bool normal = false;   // false means fuel ran out
    bool too_large = false;   // stopped early because the term passed kMaxTermSize
    Term term;
    uint64_t steps = 0;
};

using TraceFn = std::function<void(uint64_t index, Rule rule, const std::string& path)>;

NormalizeOutcome normalize(const Term& t, const Discipline& d, uint64_t fuel = kDefaultFuel,
                           Strategy s = Strategy::lo(), const TraceFn& trace = nullptr);

// contracts every eta and let-eta redex once, innermost first
Term eta_contract(const Term& t, const Discipline& d, uint64_t* count = nullptr);

bool has_beta_redex(const Term& t);

enum class EqVerdict { Equal, NotEqual, Unknown };
const char* verdict_name(EqVerdict v);

EqVerdict equal(const Term& a, const Term& b, const Discipline& d, uint64_t fuel = kDefaultFuel);

}  // namespace wb
