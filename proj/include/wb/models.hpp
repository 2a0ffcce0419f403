#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wb/algebra.hpp"
#include "wb/tree.hpp"

namespace wb {

// Closed terms of a discipline modulo its equality; elements are kept normal.
class TermModel : public ApplicativeStructure {
public:
    TermModel(std::string name, Discipline d, uint64_t fuel = kDefaultFuel);

    std::string name() const override { return name_; }
    const Discipline& discipline() const { return d_; }
    // the right application read from the left, for the symmetric calculi
    void set_symmetric_lapp(bool on) { symmetric_ = on; }

    std::optional<Elem> rapp(const Elem& f, const Elem& x) const override;
    bool has_lapp() const override { return d_.allow_left_ops || symmetric_; }
    std::optional<Elem> lapp(const Elem& x, const Elem& f) const override;
    EqVerdict eq(const Elem& a, const Elem& b) const override;
    std::vector<Elem> sample(uint64_t seed, size_t size) const override;
    std::optional<std::vector<Elem>> fresh_constants(size_t n) const override;
    std::string show(const Elem& e) const override;
    std::vector<std::string> notes() const override { return notes_; }
    void add_note(std::string n) { notes_.push_back(std::move(n)); }

    Elem norm(const Term& t) const;
    // parses in the model's discipline; constants outside it are accepted as fresh ones
    Elem elem(const std::string& text) const;
    // installs the representative terms of the given symbols and unary operations
    void install_representatives(const std::vector<std::string>& symbols, const std::vector<std::string>& unary);

    size_t sample_depth = 5;
    // fresh constants stand for arbitrary abstractions, as \u. #fc u
    bool abstraction_constants = false;

private:
    std::string name_;
    Discipline d_;
    uint64_t fuel_;
    bool symmetric_ = false;
    std::vector<std::string> notes_;
};

std::unique_ptr<TermModel> model_LP();          // planar, beta
std::unique_ptr<TermModel> model_LPc();         // planar with one constant c, beta
std::unique_ptr<TermModel> model_LPc_prime();   // planar with c1, c2, c3, beta-eta
std::unique_ptr<TermModel> model_Ltensor();     // planar with tensor, beta-eta
std::unique_ptr<TermModel> model_LB();          // bi-planar
std::unique_ptr<TermModel> model_linear();
std::unique_ptr<TermModel> model_ordinary();
std::unique_ptr<TermModel> term_model(const Discipline& d, const std::string& name);

// Sets of trees over an ordered group.  Equality is agreement up to the bound.
class TreeModel : public ApplicativeStructure {
public:
    TreeModel(std::shared_ptr<const OrderedGroup> g, Variant v, size_t bound, bool exact = false);

    std::string name() const override;
    std::optional<Elem> rapp(const Elem& f, const Elem& x) const override;
    bool has_lapp() const override { return variant_ != Variant::Tprime; }
    std::optional<Elem> lapp(const Elem& x, const Elem& f) const override;
    EqVerdict eq(const Elem& a, const Elem& b) const override;
    std::vector<Elem> sample(uint64_t seed, size_t size) const override;
    std::string show(const Elem& e) const override;

    const TreeEngine& engine() const { return engine_; }
    const OrderedGroup& group() const { return *g_; }
    Variant variant() const { return variant_; }
    size_t bound() const { return bound_; }
    void set_bound(size_t b) { bound_ = b; }

    // finite set of trees, dropping those outside the universe
    TreeSet finite(const std::vector<Tree>& ts) const;
    TreeSet finite_text(const std::vector<std::string>& ts) const;
    // small trees used to build sample sets
    std::vector<Tree> pool(size_t max_leaves) const;
    Tree random_tree(std::mt19937_64& rng, size_t max_leaves) const;
    TreeSet random_finite(std::mt19937_64& rng, size_t max_items, size_t max_leaves) const;

    TreeBag members(const TreeSet& s) const { return engine_.enumerate(s, bound_); }
    bool subset(const TreeSet& a, const TreeSet& b) const;

private:
    std::shared_ptr<const OrderedGroup> g_;
    Variant variant_;
    size_t bound_;
    bool exact_;
    TreeEngine engine_;
};

// Combinator expressions over the installed sets with `{tree, tree}` literals,
// e.g. `B {0 <- 0} dot({1})`.
Elem eval_set_expr(const TreeModel& m, const std::string& text);

std::unique_ptr<TreeModel> tree_model(std::shared_ptr<const OrderedGroup> g, Variant v, size_t bound = 7);
// the BCI-algebra of trees of value e
std::unique_ptr<TreeModel> te_model(std::shared_ptr<const OrderedGroup> g, size_t bound = 7);

// Applicative morphism given by an element map to sets, tracked by a realizer.
struct MorphismSpec {
    std::string name;
    const ApplicativeStructure* source;
    const ApplicativeStructure* target;
    std::function<Elem(const Elem&)> relation;   // a |-> the single set related to a
    Elem realizer;
};

struct TeAdjoint {
    MorphismSpec gamma;   // T -> T_e, M |-> {t <- t | t in M}
    MorphismSpec delta;   // T_e -> T, inclusion
    Elem below_id;   // in T: r (delta (gamma a)) within a
    Elem above_id;   // in T_e: r a within gamma (delta a)
};
TeAdjoint te_adjoint_pair(const TreeModel& t, const TreeModel& te);

// partial multiplication table; nullopt marks an undefined product
class FiniteMagma : public ApplicativeStructure {
public:
    explicit FiniteMagma(std::vector<std::vector<std::optional<int>>> table, std::string name = "magma");
    std::string name() const override { return name_; }
    std::optional<Elem> rapp(const Elem& f, const Elem& x) const override;
    bool total() const override;
    EqVerdict eq(const Elem& a, const Elem& b) const override;
    std::vector<Elem> sample(uint64_t seed, size_t size) const override;
    size_t size() const { return table_.size(); }

private:
    std::vector<std::vector<std::optional<int>>> table_;
    std::string name_;
};

// names accepted by model_by_name: LP, LPc, LPc', Ltensor, LB, linear, ordinary,
// T, T', T'', Te, T-F2
std::unique_ptr<ApplicativeStructure> model_by_name(const std::string& name, size_t bound = 7);
std::vector<std::string> model_names();

}  // namespace wb
