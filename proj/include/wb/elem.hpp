#pragma once

#include <memory>
#include <string>
#include <variant>

#include "wb/term.hpp"

namespace wb {

struct TreeSetNode;
using TreeSet = std::shared_ptr<const TreeSetNode>;

// An element of some applicative structure: a term (term models), a lazy
// tree set (tree models) or a table index (finite magmas).
struct Elem {
    std::variant<Term, TreeSet, int> v;

    Elem() : v(0) {}
    Elem(Term t) : v(std::move(t)) {}
    Elem(TreeSet s) : v(std::move(s)) {}
    explicit Elem(int i) : v(i) {}

    const Term* term() const { return std::get_if<Term>(&v); }
    const TreeSet* trees() const { return std::get_if<TreeSet>(&v); }
    const int* index() const { return std::get_if<int>(&v); }
};

std::string show(const Elem& e);

}  // namespace wb
