#include "doctest.h"
#include "support.hpp"
#include "wb/comb.hpp"

using namespace wb;
using wb::testing::Proc;

namespace {

bool same(const Comb& a, const std::string& b) { return comb_equal(a, parse_comb(b)); }

Term P(const std::string& s, const Discipline& d) { return parse(s, d); }

EqVerdict applied(const Comb& f, const std::vector<std::string>& args, const std::string& expect,
                  const Discipline& d) {
    std::vector<Term> ts;
    for (const auto& a : args) ts.push_back(parse(a, d));
    return wb::equal(apps(expand(f), ts), parse(expect, d), d);
}

}  // namespace

TEST_CASE("SK abstraction clauses") {
    CHECK(same(abstract_sk(parse_comb("x"), "x"), "S K K"));
    CHECK(same(abstract_sk(parse_comb("y"), "x"), "K y"));
    Comb xx = abstract_sk(parse_comb("x x"), "x");
    CHECK(same(xx, "S (S K K) (S K K)"));
    Discipline d = Discipline::ordinary().with_constants({"a"});
    CHECK(applied(xx, {"#a"}, "#a #a", d) == EqVerdict::Equal);
}

TEST_CASE("BCI abstraction clauses") {
    Discipline d = Discipline::linear().with_constants({"a", "y"});
    CHECK(same(abstract_bci(parse_comb("x"), "x"), "I"));
    Comb xy = abstract_bci(parse_comb("x y"), "x");
    CHECK(same(xy, "C I y"));
    CHECK(wb::equal(app(expand(comb_subst(xy, "y", chole(Elem(cnst("y"))))), cnst("a")), P("#a #y", d), d) ==
          EqVerdict::Equal);
    CHECK(same(abstract_bci(parse_comb("y x"), "x"), "B y I"));
    CHECK_THROWS_AS(abstract_bci(parse_comb("x x"), "x"), AbstractionError);
    CHECK_THROWS_AS(abstract_bci(parse_comb("y"), "x"), AbstractionError);
}

TEST_CASE("planar abstraction clauses") {
    CHECK(same(abstract_planar(parse_comb("x"), "x"), "I"));
    CHECK(same(abstract_planar(parse_comb("x [\\u.u]"), "x"), "B dot([\\u.u]) I"));
    CHECK(same(abstract_planar(parse_comb("[\\u.u] x"), "x"), "B [\\u.u] I"));
    Discipline d = Discipline::planar().with_constants({"a"});
    CHECK(applied(abstract_planar(parse_comb("x [\\u.u]"), "x"), {"#a"}, "#a (\\u.u)", d) == EqVerdict::Equal);
    CHECK_THROWS_AS(abstract_planar(parse_comb("x y"), "x"), AbstractionError);
}

TEST_CASE("two-sided abstraction clauses") {
    CHECK(same(abstract_right(parse_comb("x"), "x"), "I>"));
    CHECK(same(abstract_left(parse_comb("x"), "x"), "I<"));
    Discipline d = Discipline::biplanar().with_constants({"a", "c"});
    Comb r = abstract_right(parse_comb("[\\<u.u] <@ x"), "x");
    CHECK(wb::equal(app(expand(r), cnst("a")), P("(\\<u.u) <@ #a", d), d) == EqVerdict::Equal);
    Comb l = abstract_left(parse_comb("y [#c]"), "y");
    CHECK(wb::equal(lapp(cnst("a"), expand(l)), P("#a #c", d), d) == EqVerdict::Equal);
    CHECK(comb_equal(mirror(mirror(r)), r));
}

TEST_CASE("tensor compilation clauses") {
    CHECK(same(compile_tensor(P("\\x.x", Discipline::planar_tensor())), "I"));
    Discipline d = Discipline::planar_tensor().with_constants({"c1", "c2"}).with_eta();
    CHECK(same(compile_tensor(P("#c1 * #c2", d)), "P [#c1] [#c2]"));
    Comb t = compile_tensor(P("\\x y. x * y", d));
    CHECK(wb::equal(apps(expand(t), {cnst("c1"), cnst("c2")}), P("#c1 * #c2", d), d) == EqVerdict::Equal);
}

TEST_CASE("C derived from T") {
    Discipline d = Discipline::linear().with_constants({"x", "y", "z"});
    Comb c = derive_c_from_t(parse_comb("[\\u v. v u]"));
    CHECK(wb::equal(apps(expand(c), {cnst("x"), cnst("y"), cnst("z")}), P("#x #z #y", d), d) == EqVerdict::Equal);
    Comb bad = derive_c_from_t(parse_comb("[\\u.u]"));
    CHECK(wb::equal(apps(expand(bad), {cnst("x"), cnst("y"), cnst("z")}), P("#x #z #y", d), d) != EqVerdict::Equal);
}

TEST_CASE("CPS clauses and the computational axioms") {
    Discipline o = Discipline::ordinary();
    CHECK(alpha_eq(cps_translate(var("x")), P("\\k. k x", o)));
    CHECK(alpha_eq(cps_translate(P("\\x.x", o)), P("\\k. k (\\x. \\k1. k1 x)", o)));
    CHECK(computational_eq(P("(\\x.x) y", o), var("y")) == EqVerdict::Equal);
    CHECK(computational_eq(P("(\\x. x x) (\\v.v)", o), P("(\\v.v) (\\v.v)", o)) == EqVerdict::Equal);
    CHECK(computational_eq(P("\\x. f x", o), var("f")) == EqVerdict::Equal);
    CHECK(computational_eq(P("(\\x.x) (y y)", o), P("y y", o)) == EqVerdict::Equal);
    // the argument is not a value, so beta-V does not apply
    CHECK(computational_eq(P("(\\x. \\z. z) (y y)", o), P("\\z. z", o)) == EqVerdict::NotEqual);
}

TEST_CASE("left inverses") {
    Discipline d = Discipline::planar();
    for (std::string m : {"\\x.x", "\\x. x (\\y.y)", "\\x y. x y", "\\x y. x (\\z. z) y"}) {
        Term t = P(m, d);
        Term n = left_inverse(t);
        CHECK(validate(n, d).ok);
        CHECK(alpha_eq(normalize(app(n, t), d).term, P("\\x.x", d)));
    }
    CHECK(alpha_eq(left_inverse(P("\\x.x", d)), P("\\x.x", d)));
}

TEST_CASE("property: the five abstractions are sound on random polynomials") {
    Rng rng(31);
    for (Proc p : {Proc::SK, Proc::BCI, Proc::Planar, Proc::Right, Proc::Left})
        for (int i = 0; i < 150; ++i) {
            auto r = wb::testing::abstraction_case(p, rng, 1 + i % 6);
            if (r.diverged) continue;
            INFO(wb::testing::proc_name(p), ": ", r.detail);
            CHECK(r.ok);
        }
}

TEST_CASE("property: tensor compilation round trips") {
    Rng rng(32);
    Discipline d = Discipline::planar_tensor().with_eta();
    for (int i = 0; i < 150; ++i) {
        Term m = random_closed(rng, gen_options_for(Discipline::planar_tensor(), 6));
        CHECK(wb::equal(expand(compile_tensor(m)), m, d) == EqVerdict::Equal);
    }
}

TEST_CASE("property: left inverses of random planar normal forms") {
    Rng rng(33);
    Discipline d = Discipline::planar();
    for (int i = 0; i < 100; ++i) {
        Term m = random_closed_normal(rng, d, 6);
        CHECK(alpha_eq(normalize(app(left_inverse(m), m), d).term, P("\\x.x", d)));
    }
}
