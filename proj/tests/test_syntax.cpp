#include "doctest.h"
#include "wb/gen.hpp"
#include "wb/term.hpp"

using namespace wb;

namespace {

Term P(const std::string& s, const Discipline& d = Discipline::ordinary()) { return parse(s, d); }

}  // namespace

TEST_CASE("parse builds the expected constructors") {
    Term id = P("\\x.x");
    CHECK(id->tag == Tag::RAbs);
    CHECK(id->l->tag == Tag::Var);
    CHECK(alpha_eq(P("\\x.\\y.\\z. x (y z)"), lams({"x", "y", "z"}, app(var("x"), app(var("y"), var("z"))))));
    Term two = P("\\>x. \\<y. (y <@ x)", Discipline::biplanar());
    CHECK(two->tag == Tag::RAbs);
    CHECK(two->l->tag == Tag::LAbs);
    CHECK(two->l->l->tag == Tag::LApp);
    CHECK(validate(two, Discipline::biplanar()).ok);
}

TEST_CASE("application is left associative") {
    CHECK(alpha_eq(P("x y z"), app(app(var("x"), var("y")), var("z"))));
    CHECK(alpha_eq(P("x (y z)"), app(var("x"), app(var("y"), var("z")))));
}

TEST_CASE("unknown constants and bad syntax are rejected") {
    CHECK_THROWS_AS(P("#c"), ParseError);
    CHECK(P("#c", Discipline::planar().with_constants({"c"}))->tag == Tag::Const);
    CHECK_THROWS_AS(P("\\x."), ParseError);
    CHECK_THROWS_AS(P("(x y"), ParseError);
}

TEST_CASE("planarity follows the rightmost binding rule") {
    CHECK(validate(P("\\x.\\y. x y"), Discipline::planar()).ok);
    auto bad = validate(P("\\x.\\y. y x"), Discipline::planar());
    REQUIRE_FALSE(bad.ok);
    CHECK(bad.violations.front().position == "0");
    CHECK(validate(P("\\x.\\y. y x"), Discipline::linear()).ok);
    CHECK_FALSE(validate(P("\\x. x x"), Discipline::linear()).ok);
    CHECK_FALSE(validate(P("\\x.\\y. x"), Discipline::linear()).ok);
    CHECK(validate(P("\\x.\\y. x"), Discipline::ordinary()).ok);
}

TEST_CASE("left operators and tensors need their disciplines") {
    CHECK_FALSE(validate(P("\\<x. x", Discipline::biplanar()), Discipline::planar()).ok);
    CHECK_FALSE(validate(P("\\x. x * x", Discipline::planar_tensor()), Discipline::planar_tensor()).ok);
    CHECK(validate(P("\\x.\\y. x * y", Discipline::planar_tensor()), Discipline::planar_tensor()).ok);
    CHECK(validate(P("\\<y. \\<x. x <@ y", Discipline::biplanar()), Discipline::biplanar()).ok);
    CHECK(validate(P("\\<x. \\<y. x <@ y", Discipline::biplanar()), Discipline::biplanar()).ok == false);
    CHECK(validate(P("\\>y. \\<x. x <@ y", Discipline::biplanar()), Discipline::biplanar()).ok);
}

TEST_CASE("free variable sequences") {
    CHECK(free_var_sequence(P("x y")) == std::vector<std::string>{"x", "y"});
    CHECK(free_var_sequence(P("let a * b = z in a b", Discipline::planar_tensor())) == std::vector<std::string>{"z"});
    CHECK(free_var_sequence(P("(y <@ x)", Discipline::biplanar())) == std::vector<std::string>{"y", "x"});
}

TEST_CASE("substitution avoids capture") {
    CHECK(alpha_eq(substitute(P("x y"), "x", P("\\z.z")), P("(\\z.z) y")));
    Term s = substitute(P("\\y. x y"), "x", var("y"));
    CHECK(alpha_eq(s, P("\\w. y w")));
    CHECK_FALSE(alpha_eq(s, P("\\y. y y")));
    CHECK(alpha_eq(substitute(var("x"), "x", P("\\a.a")), P("\\a.a")));
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_eq(P("\\x.x"), P("\\y.y")));
    CHECK(alpha_eq(P("\\x.\\y. x y"), P("\\y.\\x. y x")));
    CHECK_FALSE(alpha_eq(P("\\x.\\y. x y"), P("\\x.\\y. y x")));
}

TEST_CASE("pretty printing round trips on the parse examples") {
    for (auto [s, d] : std::vector<std::pair<std::string, Discipline>>{
             {"\\x.x", Discipline::ordinary()},
             {"\\x.\\y.\\z. x (y z)", Discipline::ordinary()},
             {"\\>x. \\<y. (x <@ y)", Discipline::biplanar()},
             {"\\x. let a * b = x in a * b", Discipline::planar_tensor()}}) {
        Term t = P(s, d);
        CHECK(alpha_eq(P(pretty(t), d), t));
    }
}

TEST_CASE("property: round trip on random valid terms of every discipline") {
    Rng rng(11);
    for (const Discipline& d : {Discipline::ordinary(), Discipline::linear(), Discipline::planar(),
                                Discipline::planar_tensor(), Discipline::biplanar()}) {
        for (int i = 0; i < 200; ++i) {
            Term t = random_closed(rng, gen_options_for(d, 6));
            REQUIRE(validate(t, d).ok);
            CHECK(alpha_eq(P(pretty(t), d), t));
        }
    }
}

TEST_CASE("property: planar pure terms are linear and ordinary") {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        Term t = random_closed(rng, gen_options_for(Discipline::planar(), 7));
        CHECK(validate(t, Discipline::linear()).ok);
        CHECK(validate(t, Discipline::ordinary()).ok);
    }
}

TEST_CASE("property: substituting a closed term deletes the variable from the sequence") {
    Rng rng(13);
    GenOptions o = gen_options_for(Discipline::planar(), 6);
    Term c = P("\\q.q");
    for (int i = 0; i < 200; ++i) {
        std::vector<std::string> ctx = {"a", "b", "c"};
        Term t = random_term(rng, ctx, o);
        CHECK(free_var_sequence(t) == ctx);
        std::vector<std::string> rest = {"a", "c"};
        CHECK(free_var_sequence(substitute(t, "b", c)) == rest);
    }
}
