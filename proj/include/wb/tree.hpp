#pragma once

#include <map>
#include <mutex>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wb/elem.hpp"

namespace wb {

// Group elements are freely reduced words over generators 1..k; a negative
// letter is an inverse.  The integers are the free group on one generator.
using Word = std::vector<int>;

class OrderedGroup {
public:
    virtual ~OrderedGroup() = default;
    virtual std::string name() const = 0;
    Word id() const { return {}; }
    Word mul(const Word& a, const Word& b) const;
    Word inv(const Word& a) const;
    virtual bool leq(const Word& a, const Word& b) const = 0;
    bool positive(const Word& a) const { return leq(id(), a); }
    virtual std::string show(const Word& w) const = 0;
    virtual std::optional<Word> parse(const std::string& s) const = 0;
    // leaves used when enumerating and sampling
    virtual std::vector<Word> alphabet() const = 0;
    // values tried for otherwise unconstrained witnesses
    virtual std::vector<Word> witness_values() const = 0;
};

class IntegerGroup : public OrderedGroup {
public:
    std::string name() const override { return "Z"; }
    bool leq(const Word& a, const Word& b) const override;
    std::string show(const Word& w) const override;
    std::optional<Word> parse(const std::string& s) const override;
    std::vector<Word> alphabet() const override;
    std::vector<Word> witness_values() const override;
    static Word of(long n);
    static long value(const Word& w);
};

// free group on a, b with equality as the order
class FreeGroup2 : public OrderedGroup {
public:
    std::string name() const override { return "F2"; }
    bool leq(const Word& a, const Word& b) const override { return a == b; }
    std::string show(const Word& w) const override;
    std::optional<Word> parse(const std::string& s) const override;
    std::vector<Word> alphabet() const override;
    std::vector<Word> witness_values() const override;
};

// ---------------------------------------------------------------- trees

enum class TK { Leaf, RImp, LImp, Tens, Var };

struct TNode;
using Tree = std::shared_ptr<const TNode>;

// RImp(a, b) is a <- b (a is the result, b the argument).
// LImp(a, b) is a -o b (a is the argument, b the result).
struct TNode {
    TK kind;
    Word g;
    int var = -1;
    Tree a, b;
};

Tree leaf(Word g);
Tree rimp(Tree result, Tree arg);
Tree limp(Tree arg, Tree result);
Tree tens(Tree a, Tree b);
Tree tvar(int id);

int tree_compare(const Tree& x, const Tree& y);
struct TreeLess {
    bool operator()(const Tree& x, const Tree& y) const { return tree_compare(x, y) < 0; }
};
using TreeBag = std::set<Tree, TreeLess>;
bool same_trees(const TreeBag& a, const TreeBag& b);

size_t leaves(const Tree& t);
bool ground(const Tree& t);
Word value(const OrderedGroup& g, const Tree& t);
std::string show_tree(const OrderedGroup& g, const Tree& t);
Tree parse_tree(const OrderedGroup& g, const std::string& s);

enum class Variant { T, Tprime, Tdoubleprime };
const char* variant_name(Variant v);

// ---------------------------------------------------------------- lazy sets

struct Constraint {
    Tree term;
    bool exact;   // |term| = e when true, e <= |term| otherwise
};

enum class TSKind { Finite, Schema, AppR, AppL };

struct TreeSetNode {
    TSKind kind;
    TreeBag items;                              // Finite
    std::string name;                           // Schema
    Tree pattern;
    int nvars = 0;
    std::vector<Constraint> constraints;
    std::vector<std::pair<Tree, TreeSet>> conds;   // pattern must lie in the set
    TreeSet l, r;                               // AppR: l r.  AppL: l <@ r
    bool encoded = false;                       // AppL through (e <- t) <- (e <- t')
};

TreeSet finite_set(TreeBag items);
TreeSet app_r(TreeSet m, TreeSet n);
TreeSet app_l(TreeSet n, TreeSet m, bool encoded);

std::string show_set(const OrderedGroup& g, const TreeSet& s);

// Named combinator sets.  `variant` decides how t -o t' is spelled.
namespace named {
TreeSet B();
TreeSet I();
TreeSet Ix();
TreeSet Dot(TreeSet m);
TreeSet P_internal();
TreeSet L_internal();
TreeSet P_tensor();
TreeSet L_tensor();
TreeSet Br(Variant v);
TreeSet Bl(Variant v);
TreeSet Dr(Variant v);
TreeSet Dl(Variant v);
TreeSet Ir(Variant v);
TreeSet Il(Variant v);
TreeSet DagR(Variant v, TreeSet m);
TreeSet DagL(Variant v, TreeSet m);
// T_e
TreeSet B_e();
TreeSet I_e();
TreeSet C_e();
TreeSet gamma(TreeSet m);            // {t <- t | t in m}
TreeSet r_gamma();
TreeSet r_unit();                    // {(t <- t) <- t | |t| = e}
TreeSet r_counit();                  // {t <- (t <- t) | e <= |t|}
}  // namespace named

class TreeEngine {
public:
    TreeEngine(const OrderedGroup& g, Variant v, bool exact_universe = false)
        : g_(g), variant_(v), exact_(exact_universe) {}

    const OrderedGroup& group() const { return g_; }
    Variant variant() const { return variant_; }

    // t uses only the constructors of the variant
    bool in_language(const Tree& t) const;
    // e <= |t|, or |t| = e for T_e
    bool in_universe(const Tree& t) const;

    bool member(const TreeSet& s, const Tree& t) const;
    // members with at most `bound` leaves, leaves drawn from the alphabet
    TreeBag enumerate(const TreeSet& s, size_t bound) const;
    // every tree of the variant with exactly n leaves over the alphabet
    const std::vector<Tree>& trees_of_size(size_t n) const;

private:
    const OrderedGroup& g_;
    Variant variant_;
    bool exact_;
    mutable std::map<size_t, std::vector<Tree>> by_size_;
    mutable std::mutex mu_;
};

}  // namespace wb
