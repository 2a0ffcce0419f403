#include "wb/models.hpp"

#include <cctype>
#include <random>

#include "wb/gen.hpp"

namespace wb {

// ---------------------------------------------------------------- term models

TermModel::TermModel(std::string name, Discipline d, uint64_t fuel)
    : name_(std::move(name)), d_(std::move(d)), fuel_(fuel) {}

Elem TermModel::norm(const Term& t) const { return Elem(normalize(t, d_, fuel_).term); }

std::optional<Elem> TermModel::rapp(const Elem& f, const Elem& x) const {
    return norm(app(*f.term(), *x.term()));
}

std::optional<Elem> TermModel::lapp(const Elem& x, const Elem& f) const {
    if (d_.allow_left_ops) return norm(wb::lapp(*x.term(), *f.term()));
    if (symmetric_) return norm(app(*f.term(), *x.term()));
    return std::nullopt;
}

EqVerdict TermModel::eq(const Elem& a, const Elem& b) const { return equal(*a.term(), *b.term(), d_, fuel_); }

std::vector<Elem> TermModel::sample(uint64_t seed, size_t size) const {
    Rng rng(seed);
    std::vector<Elem> out;
    for (size_t i = 0; i < size; ++i) out.push_back(Elem(random_closed_normal(rng, d_, sample_depth)));
    return out;
}

std::optional<std::vector<Elem>> TermModel::fresh_constants(size_t n) const {
    std::vector<Elem> out;
    for (size_t i = 0; i < n; ++i) {
        Term c = cnst("fc" + std::to_string(i));
        out.push_back(Elem(abstraction_constants ? lam("u", app(c, var("u"))) : c));
    }
    return out;
}

std::string TermModel::show(const Elem& e) const { return e.term() ? pretty(*e.term()) : wb::show(e); }

Elem TermModel::elem(const std::string& text) const {
    Discipline d = d_;
    for (size_t k = 0; k < text.size(); ++k) {
        if (text[k] != '#') continue;
        size_t e = k + 1;
        while (e < text.size() && (std::isalnum(static_cast<unsigned char>(text[e])) || text[e] == '_')) ++e;
        d.constants.insert(text.substr(k + 1, e - k - 1));
    }
    Term t = parse(text, d);
    ValidationReport v = validate(t, d);
    if (!v.ok) throw std::invalid_argument(name_ + ": " + text + ": " + v.violations.front().rule);
    return norm(t);
}

void TermModel::install_representatives(const std::vector<std::string>& symbols,
                                        const std::vector<std::string>& unary) {
    for (const auto& s : symbols) install(s, norm(representative(s)));
    for (const auto& op : unary)
        install_unary(op, [this, op](const Elem& x) -> std::optional<Elem> {
            return norm(unary_representative(op, *x.term()));
        });
}

std::unique_ptr<TermModel> model_LP() {
    auto m = std::make_unique<TermModel>("LP", Discipline::planar());
    m->install_representatives({"B", "I", "Ix"}, {"dot"});
    // closed normal forms of L_P are abstractions, so axioms are instantiated with generic ones
    m->abstraction_constants = true;
    m->add_note("whether L_P is a BIILP-algebra is still open");
    return m;
}

std::unique_ptr<TermModel> model_LPc() {
    auto m = std::make_unique<TermModel>("LPc", Discipline::planar().with_constants({"c"}));
    m->install_representatives({"B", "I"}, {"dot"});
    return m;
}

std::unique_ptr<TermModel> model_LPc_prime() {
    auto m = std::make_unique<TermModel>("LPc'", Discipline::planar().with_constants({"c1", "c2", "c3"}).with_eta());
    m->install_representatives({"B", "I", "Ix"}, {"dot"});
    return m;
}

std::unique_ptr<TermModel> model_Ltensor() {
    auto m = std::make_unique<TermModel>("Ltensor", Discipline::planar_tensor().with_eta());
    m->install_representatives({"B", "I", "Ix", "L", "P"}, {"dot"});
    return m;
}

std::unique_ptr<TermModel> model_LB() {
    auto m = std::make_unique<TermModel>("LB", Discipline::biplanar());
    m->install_representatives({"B>", "B<", "D>", "D<", "I>", "I<"}, {"dagR", "dagL"});
    return m;
}

std::unique_ptr<TermModel> model_linear() {
    auto m = std::make_unique<TermModel>("linear", Discipline::linear());
    m->set_symmetric_lapp(true);
    m->install_representatives({"B", "C", "I"}, {});
    return m;
}

std::unique_ptr<TermModel> model_ordinary() {
    auto m = std::make_unique<TermModel>("ordinary", Discipline::ordinary(), 100'000);
    m->set_symmetric_lapp(true);
    m->install_representatives({"S", "K"}, {});
    m->sample_depth = 4;
    return m;
}

std::unique_ptr<TermModel> term_model(const Discipline& d, const std::string& name) {
    return std::make_unique<TermModel>(name, d);
}

// ---------------------------------------------------------------- tree models

TreeModel::TreeModel(std::shared_ptr<const OrderedGroup> g, Variant v, size_t bound, bool exact)
    : g_(std::move(g)), variant_(v), bound_(bound), exact_(exact), engine_(*g_, v, exact) {}

std::string TreeModel::name() const {
    return std::string(exact_ ? "Te" : variant_name(variant_)) + "(" + g_->name() + ")";
}

std::optional<Elem> TreeModel::rapp(const Elem& f, const Elem& x) const { return Elem(app_r(*f.trees(), *x.trees())); }

std::optional<Elem> TreeModel::lapp(const Elem& x, const Elem& f) const {
    if (variant_ == Variant::Tprime) return std::nullopt;
    return Elem(app_l(*x.trees(), *f.trees(), variant_ == Variant::T));
}

EqVerdict TreeModel::eq(const Elem& a, const Elem& b) const {
    return same_trees(members(*a.trees()), members(*b.trees())) ? EqVerdict::Equal : EqVerdict::NotEqual;
}

std::vector<Tree> TreeModel::pool(size_t max_leaves) const {
    std::vector<Tree> out;
    for (size_t n = 1; n <= max_leaves; ++n)
        for (const Tree& t : engine_.trees_of_size(n))
            if (engine_.in_universe(t)) out.push_back(t);
    return out;
}

Tree TreeModel::random_tree(std::mt19937_64& rng, size_t max_leaves) const {
    size_t n = std::uniform_int_distribution<size_t>(1, max_leaves)(rng);
    std::function<Tree(size_t)> go = [&](size_t k) -> Tree {
        if (k == 1) {
            auto al = g_->alphabet();
            return leaf(al[std::uniform_int_distribution<size_t>(0, al.size() - 1)(rng)]);
        }
        size_t i = std::uniform_int_distribution<size_t>(1, k - 1)(rng);
        Tree a = go(i), b = go(k - i);
        int kinds = variant_ == Variant::T ? 1 : 2;
        int c = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
        if (c == 0) return rimp(a, b);
        return variant_ == Variant::Tprime ? tens(a, b) : limp(a, b);
    };
    return go(n);
}

TreeSet TreeModel::finite(const std::vector<Tree>& ts) const {
    TreeBag bag;
    for (const Tree& t : ts)
        if (engine_.in_language(t) && engine_.in_universe(t)) bag.insert(t);
    return finite_set(std::move(bag));
}

TreeSet TreeModel::finite_text(const std::vector<std::string>& ts) const {
    std::vector<Tree> v;
    for (const auto& s : ts) v.push_back(parse_tree(*g_, s));
    return finite(v);
}

TreeSet TreeModel::random_finite(std::mt19937_64& rng, size_t max_items, size_t max_leaves) const {
    std::vector<Tree> p = pool(max_leaves);
    size_t n = std::uniform_int_distribution<size_t>(1, max_items)(rng);
    std::vector<Tree> pick;
    for (size_t i = 0; i < n && !p.empty(); ++i)
        pick.push_back(p[std::uniform_int_distribution<size_t>(0, p.size() - 1)(rng)]);
    return finite(pick);
}

// Sample sets draw from trees over the positive leaves so that applications
// among them are often non-empty.
std::vector<Elem> TreeModel::sample(uint64_t seed, size_t size) const {
    std::mt19937_64 rng(seed);
    std::vector<Tree> p;
    for (const Tree& t : pool(4)) {
        bool pos = true;
        std::function<void(const Tree&)> walk = [&](const Tree& x) {
            if (!x) return;
            if (x->kind == TK::Leaf && !g_->positive(x->g)) pos = false;
            walk(x->a);
            walk(x->b);
        };
        walk(t);
        if (pos) p.push_back(t);
    }
    std::vector<Elem> out;
    for (size_t i = 0; i < size; ++i) {
        size_t n = std::uniform_int_distribution<size_t>(1, 6)(rng);
        std::vector<Tree> pick;
        for (size_t k = 0; k < n; ++k) pick.push_back(p[std::uniform_int_distribution<size_t>(0, p.size() - 1)(rng)]);
        out.push_back(Elem(finite(pick)));
    }
    return out;
}

std::string TreeModel::show(const Elem& e) const {
    if (!e.trees()) return wb::show(e);
    return show_set(*g_, *e.trees());
}

bool TreeModel::subset(const TreeSet& a, const TreeSet& b) const {
    for (const Tree& t : members(a))
        if (!engine_.member(b, t)) return false;
    return true;
}

Elem eval_set_expr(const TreeModel& m, const std::string& text) {
    std::string rest;
    Env env;
    size_t k = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '{') {
            rest += text[i];
            continue;
        }
        size_t j = text.find('}', i);
        if (j == std::string::npos) throw std::invalid_argument("unterminated set literal");
        std::vector<std::string> items;
        std::string cur;
        int depth = 0;
        for (size_t p = i + 1; p < j; ++p) {
            char c = text[p];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                items.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (cur.find_first_not_of(" \t") != std::string::npos) items.push_back(cur);
        std::string v = "lit" + std::to_string(k++);
        env[v] = Elem(m.finite_text(items));
        rest += " " + v + " ";
        i = j;
    }
    auto r = interpret(m, parse_comb(rest), env);
    if (!r) throw std::invalid_argument("set expression undefined");
    return *r;
}

std::unique_ptr<TreeModel> tree_model(std::shared_ptr<const OrderedGroup> g, Variant v, size_t bound) {
    auto m = std::make_unique<TreeModel>(std::move(g), v, bound);
    m->install("B", Elem(named::B()));
    m->install("I", Elem(named::I()));
    m->install("Ix", Elem(named::Ix()));
    m->install_unary("dot", [](const Elem& x) -> std::optional<Elem> { return Elem(named::Dot(*x.trees())); });
    if (v == Variant::T) {
        m->install("L", Elem(named::L_internal()));
        m->install("P", Elem(named::P_internal()));
    }
    if (v == Variant::Tprime) {
        m->install("L", Elem(named::L_tensor()));
        m->install("P", Elem(named::P_tensor()));
    }
    if (v != Variant::Tprime) {
        m->install("B>", Elem(named::Br(v)));
        m->install("B<", Elem(named::Bl(v)));
        m->install("D>", Elem(named::Dr(v)));
        m->install("D<", Elem(named::Dl(v)));
        m->install("I>", Elem(named::Ir(v)));
        m->install("I<", Elem(named::Il(v)));
        m->install_unary("dagR", [v](const Elem& x) -> std::optional<Elem> { return Elem(named::DagR(v, *x.trees())); });
        m->install_unary("dagL", [v](const Elem& x) -> std::optional<Elem> { return Elem(named::DagL(v, *x.trees())); });
    }
    return m;
}

std::unique_ptr<TreeModel> te_model(std::shared_ptr<const OrderedGroup> g, size_t bound) {
    auto m = std::make_unique<TreeModel>(std::move(g), Variant::T, bound, true);
    m->install("B", Elem(named::B_e()));
    m->install("C", Elem(named::C_e()));
    m->install("I", Elem(named::I_e()));
    return m;
}

TeAdjoint te_adjoint_pair(const TreeModel& t, const TreeModel& te) {
    TeAdjoint p;
    p.gamma = {"gamma", &t, &te, [](const Elem& a) { return Elem(named::gamma(*a.trees())); }, Elem(named::r_gamma())};
    p.delta = {"delta", &te, &t, [](const Elem& a) { return a; }, Elem(named::I())};
    p.below_id = Elem(named::r_counit());
    p.above_id = Elem(named::r_unit());
    return p;
}

// ---------------------------------------------------------------- finite magmas

FiniteMagma::FiniteMagma(std::vector<std::vector<std::optional<int>>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
    for (const auto& row : table_)
        if (row.size() != table_.size()) throw std::invalid_argument("magma table must be square");
}

std::optional<Elem> FiniteMagma::rapp(const Elem& f, const Elem& x) const {
    auto r = table_.at(*f.index()).at(*x.index());
    if (!r) return std::nullopt;
    return Elem(*r);
}

bool FiniteMagma::total() const {
    for (const auto& row : table_)
        for (const auto& c : row)
            if (!c) return false;
    return true;
}

EqVerdict FiniteMagma::eq(const Elem& a, const Elem& b) const {
    return *a.index() == *b.index() ? EqVerdict::Equal : EqVerdict::NotEqual;
}

std::vector<Elem> FiniteMagma::sample(uint64_t, size_t) const {
    std::vector<Elem> out;
    for (size_t i = 0; i < table_.size(); ++i) out.push_back(Elem(static_cast<int>(i)));
    return out;
}

// ---------------------------------------------------------------- registry

std::vector<std::string> model_names() {
    return {"LP", "LPc", "LPc'", "Ltensor", "LB", "linear", "ordinary", "T", "T'", "T''", "Te", "T-F2"};
}

std::unique_ptr<ApplicativeStructure> model_by_name(const std::string& name, size_t bound) {
    auto z = std::make_shared<IntegerGroup>();
    if (name == "LP") return model_LP();
    if (name == "LPc") return model_LPc();
    if (name == "LPc'") return model_LPc_prime();
    if (name == "Ltensor") return model_Ltensor();
    if (name == "LB") return model_LB();
    if (name == "linear") return model_linear();
    if (name == "ordinary") return model_ordinary();
    if (name == "T") return tree_model(z, Variant::T, bound);
    if (name == "T'") return tree_model(z, Variant::Tprime, bound);
    if (name == "T''") return tree_model(z, Variant::Tdoubleprime, bound);
    if (name == "Te") return te_model(z, bound);
    if (name == "T-F2") return tree_model(std::make_shared<FreeGroup2>(), Variant::T, bound);
    return nullptr;
}

}  // namespace wb
