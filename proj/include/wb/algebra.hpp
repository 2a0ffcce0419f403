#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wb/comb.hpp"
#include "wb/elem.hpp"
#include "wb/rewrite.hpp"

namespace wb {

using UnaryFn = std::function<std::optional<Elem>(const Elem&)>;

struct Signature {
    std::map<std::string, Elem> nullary;
    std::map<std::string, UnaryFn> unary;
};

struct MissingElement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ApplicativeStructure {
public:
    virtual ~ApplicativeStructure() = default;
    virtual std::string name() const = 0;

    virtual std::optional<Elem> rapp(const Elem& f, const Elem& x) const = 0;
    virtual bool has_lapp() const { return false; }
    // x <@ f
    virtual std::optional<Elem> lapp(const Elem& x, const Elem& f) const {
        (void)x;
        (void)f;
        return std::nullopt;
    }
    virtual bool total() const { return true; }
    virtual EqVerdict eq(const Elem& a, const Elem& b) const = 0;
    virtual std::vector<Elem> sample(uint64_t seed, size_t size) const = 0;
    virtual std::optional<std::vector<Elem>> fresh_constants(size_t n) const {
        (void)n;
        return std::nullopt;
    }
    virtual std::string show(const Elem& e) const { return wb::show(e); }
    // remarks the report must carry for this structure
    virtual std::vector<std::string> notes() const { return {}; }

    void install(const std::string& symbol, Elem e) { sig_.nullary[symbol] = std::move(e); }
    void install_unary(const std::string& op, UnaryFn f);
    std::optional<Elem> distinguished(const std::string& symbol) const;
    std::optional<Elem> unary(const std::string& op, const Elem& e) const;
    const Signature& signature() const { return sig_; }

private:
    Signature sig_;
};

using Env = std::map<std::string, Elem>;

// undefined application yields nullopt; a missing symbol throws
std::optional<Elem> interpret(const ApplicativeStructure& a, const Comb& m, const Env& env,
                              const Signature* sig = nullptr);

// Kleene equality: both undefined counts as equal
EqVerdict kleene_eq(const ApplicativeStructure& a, const std::optional<Elem>& x, const std::optional<Elem>& y);

struct Axiom {
    std::string name;
    Comb lhs, rhs;
    std::vector<std::string> vars;
};

Axiom make_axiom(const std::string& name, const std::string& lhs, const std::string& rhs);
// lines of the form `axiom NAME: lhs = rhs`; `--` starts a comment
std::vector<Axiom> parse_axioms(const std::string& text);
const std::vector<Axiom>& class_axioms(Basis b);
const char* class_name(Basis b);
std::optional<Basis> class_by_name(const std::string& s);
// the inclusion chain, largest class of structures last
const std::vector<Basis>& class_chain();

struct CheckMode {
    enum Kind { FreshConstants, Sampled } kind = FreshConstants;
    size_t samples = 200;
    size_t pool = 12;
    uint64_t seed = 1;

    static CheckMode fresh() { return {}; }
    static CheckMode sampled(size_t n, uint64_t seed) { return {Sampled, n, 12, seed}; }
};

enum class AxiomVerdict { Holds, FailsAt, Unknown };
const char* axiom_verdict_name(AxiomVerdict v);

struct AxiomReport {
    std::string axiom;
    CheckMode mode;
    AxiomVerdict verdict = AxiomVerdict::Unknown;
    std::vector<std::pair<std::string, std::string>> witness;
    std::string lhs, rhs;   // printed values at the witness
    size_t checked = 0;
};

enum class Exec { Parallel, Serial };

AxiomReport check_axiom(const ApplicativeStructure& a, const Axiom& ax, const CheckMode& mode,
                        const Signature* sig = nullptr, Exec exec = Exec::Parallel);

// candidate-relative classification
struct ClassReport {
    std::set<std::string> classes;
    std::map<std::string, std::vector<AxiomReport>> details;
    std::map<std::string, std::string> provenance;   // class -> where its candidates came from
    std::vector<std::string> notes;
};

ClassReport classify(const ApplicativeStructure& a, const Signature& candidates, const CheckMode& mode);

// canonical candidates of class `to` computed from those of class `from`
std::optional<Signature> derive_candidates(const ApplicativeStructure& a, Basis from, const Signature& have,
                                           Basis to);

UnaryFn unary_from_template(const ApplicativeStructure& a, const Comb& tmpl, const Signature& sig);

// a sampled tuple pool used by check_axiom in Sampled mode
std::vector<std::vector<size_t>> sample_tuples(size_t pool, size_t arity, size_t n, uint64_t seed);

// term-model helper: a polynomial whose variables are the given names, abstracted in order
Comb abstract_all(Basis b, Comb m, const std::vector<std::string>& xs);

}  // namespace wb
