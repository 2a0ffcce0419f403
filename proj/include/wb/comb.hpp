#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wb/elem.hpp"
#include "wb/rewrite.hpp"
#include "wb/term.hpp"

namespace wb {

enum class Basis { SK, BCI, BIdot, BIIdot, BIILP, BiBDI, BIIdotCirc };

struct BasisInfo {
    const char* name;
    std::vector<std::string> symbols;
    std::vector<std::string> unary;
};

const BasisInfo& basis_info(Basis b);
std::optional<Basis> basis_by_name(const std::string& s);

enum class CTag { Sym, Unary, App, LApp, Hole, Var };

struct CNode;
using Comb = std::shared_ptr<const CNode>;

// App: l = function, r = argument.  LApp: l = argument, r = function.
struct CNode {
    CTag tag;
    std::string name;   // symbol, unary op or variable
    Elem hole;
    Comb l, r;
};

Comb csym(std::string s);
Comb cunary(std::string op, Comb arg);
Comb capp(Comb f, Comb x);
Comb clapp(Comb arg, Comb f);
Comb chole(Elem e);
Comb cvar(std::string x);
Comb capps(Comb f, const std::vector<Comb>& args);

std::vector<std::string> comb_var_sequence(const Comb& m);
bool comb_has_var(const Comb& m, const std::string& x);
size_t comb_count_var(const Comb& m, const std::string& x);
bool comb_closed(const Comb& m);
size_t comb_size(const Comb& m);
bool comb_equal(const Comb& a, const Comb& b);   // structural, holes compared by printed form
Comb comb_subst(const Comb& m, const std::string& x, const Comb& s);
std::string show(const Comb& m);

struct CombParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
Comb parse_comb(const std::string& text);

struct AbstractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Comb abstract_sk(const Comb& m, const std::string& x);
Comb abstract_bci(const Comb& m, const std::string& x);
Comb abstract_planar(const Comb& m, const std::string& x);
Comb abstract_right(const Comb& m, const std::string& x);
Comb abstract_left(const Comb& m, const std::string& y);

// swaps the two applications (operands reversed) and the left/right symbols
Comb mirror(const Comb& m);

Comb abstract_with(Basis b, const Comb& m, const std::string& x);

Comb compile_tensor(const Term& m);

Comb derive_c_from_t(const Comb& t);

// lambda representatives of the combinators, read in the calculus that hosts them
Term representative(const std::string& symbol);
Term unary_representative(const std::string& op, const Term& arg);
// Reads each symbol as its representative; holes must carry terms.
Term expand(const Comb& m);

Term cps_translate(const Term& m);
EqVerdict computational_eq(const Term& m, const Term& n, uint64_t fuel = kDefaultFuel);

struct LeftInverseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
Term left_inverse(const Term& m);

}  // namespace wb
