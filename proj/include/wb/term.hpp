#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

enum class Tag { Var, RApp, LApp, RAbs, LAbs, Tensor, Let, Const };

struct Node;
using Term = std::shared_ptr<const Node>;

// RApp: l = function, r = argument.
// LApp: l = argument, r = function (written `l <@ r`).
// RAbs/LAbs: a = binder, l = body.
// Let: a, b = binders, l = scrutinee, r = body.
struct Node {
    Tag tag;
    std::string a, b;
    Term l, r;
};

Term var(std::string x);
Term cnst(std::string c);
Term app(Term f, Term x);
Term lapp(Term arg, Term f);
Term lam(std::string x, Term body);
Term llam(std::string x, Term body);
Term tensor(Term m, Term n);
Term let_pair(std::string x, std::string y, Term m, Term body);

// lam({"x","y"}, body) = \x.\y.body
Term lams(const std::vector<std::string>& xs, Term body);
Term apps(Term f, const std::vector<Term>& args);

struct Discipline {
    bool allow_weakening = false;
    bool allow_contraction = false;
    bool allow_exchange = false;
    bool allow_tensor = false;
    bool allow_left_ops = false;
    std::set<std::string> constants;
    bool eta = false;

    static Discipline ordinary();
    static Discipline linear();
    static Discipline planar();
    static Discipline planar_tensor();
    static Discipline biplanar();

    Discipline with_constants(std::set<std::string> cs) const;
    Discipline with_eta(bool on = true) const;
    bool strongly_normalizing() const { return !(allow_contraction && allow_weakening); }
    std::string name() const;
};

std::optional<Discipline> discipline_by_name(const std::string& s);

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " at offset " + std::to_string(p)), pos(p) {}
};

Term parse(const std::string& text, const Discipline& d);

struct Violation {
    std::string position;   // path of child indices from the root, "" for the root
    std::string rule;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

ValidationReport validate(const Term& t, const Discipline& d);

std::vector<std::string> free_var_sequence(const Term& t);
std::set<std::string> free_vars(const Term& t);
bool occurs_free(const Term& t, const std::string& x);
size_t count_free(const Term& t, const std::string& x);
bool closed(const Term& t);
size_t term_size(const Term& t);
bool has_constants(const Term& t);

Term substitute(const Term& t, const std::string& x, const Term& s);

bool alpha_eq(const Term& a, const Term& b);

std::string pretty(const Term& t);

// a name based on `base` that is not in `avoid`
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// every name occurring in t, bound or free
void collect_names(const Term& t, std::set<std::string>& out);

}  // namespace wb
