#include "doctest.h"
#include "wb/gen.hpp"
#include "wb/rewrite.hpp"

using namespace wb;

namespace {

Term P(const std::string& s, const Discipline& d) { return parse(s, d); }

const std::vector<Discipline>& terminating() {
    static const std::vector<Discipline> ds = {Discipline::linear(), Discipline::planar(), Discipline::planar_tensor(),
                                               Discipline::biplanar()};
    return ds;
}

}  // namespace

TEST_CASE("single steps") {
    Discipline o = Discipline::ordinary();
    CHECK(alpha_eq(*step(P("(\\x.x)(\\y.y)", o), o, Strategy::lo()), P("\\y.y", o)));
    Discipline b = Discipline::biplanar().with_constants({"c"});
    CHECK(alpha_eq(*step(P("(\\>x.x) #c", b), b, Strategy::lo()), P("#c", b)));
    CHECK_FALSE(step(P("(\\<x.x) #c", b), b, Strategy::lo()).has_value());
    CHECK(alpha_eq(*step(P("#c <@ (\\<x.x)", b), b, Strategy::lo()), P("#c", b)));
    Discipline t = Discipline::planar_tensor().with_constants({"c1", "c2"});
    CHECK(alpha_eq(normalize(P("let a * b = #c1 * #c2 in a b", t), t).term, P("#c1 #c2", t)));
}

TEST_CASE("the Ix computation reduces to its argument") {
    Discipline d = Discipline::planar();
    auto r = normalize(P("(\\x y z. x (y z)) (\\u.u) (\\v.v)", d), d);
    CHECK(r.normal);
    CHECK(alpha_eq(r.term, P("\\u.u", d)));
}

TEST_CASE("Omega exhausts its fuel") {
    Discipline d = Discipline::ordinary();
    auto r = normalize(P("(\\x. x x)(\\x. x x)", d), d, 100);
    CHECK_FALSE(r.normal);
    CHECK(r.steps == 100);
    CHECK(wb::equal(P("(\\x. x x)(\\x. x x)", d), P("\\y.y", d), d, 100) == EqVerdict::Unknown);
}

TEST_CASE("normal forms take no steps") {
    Discipline d = Discipline::planar();
    auto r = normalize(P("\\x y. x y", d), d);
    CHECK(r.normal);
    CHECK(r.steps == 0);
}

TEST_CASE("eta is a separate switch") {
    Discipline d = Discipline::planar().with_constants({"c"});
    CHECK(wb::equal(P("\\z. #c z", d), P("#c", d), d) == EqVerdict::NotEqual);
    Discipline e = d.with_eta();
    CHECK(wb::equal(P("\\z. #c z", e), P("#c", e), e) == EqVerdict::Equal);
}

TEST_CASE("combinator expansion of B c1 (B c2 I) c3") {
    Discipline d = Discipline::planar().with_constants({"c1", "c2", "c3"});
    std::string B = "(\\x y z. x (y z))", I = "(\\x.x)";
    Term lhs = P(B + " #c1 (" + B + " #c2 " + I + ") #c3", d);
    CHECK(wb::equal(lhs, P("#c1 (#c2 #c3)", d), d) == EqVerdict::Equal);
}

TEST_CASE("trace reports every step") {
    Discipline d = Discipline::planar();
    std::vector<Rule> rules;
    auto r = normalize(P("(\\x.x)((\\y.y)(\\z.z))", d), d, kDefaultFuel, Strategy::lo(),
                       [&](uint64_t, Rule rule, const std::string&) { rules.push_back(rule); });
    CHECK(r.steps == 2);
    CHECK(rules.size() == 2);
}

TEST_CASE("property: every strategy terminates on the terminating disciplines") {
    Rng rng(21);
    for (const Discipline& d : terminating())
        for (int i = 0; i < 150; ++i) {
            Term t = random_closed(rng, gen_options_for(d, 7));
            for (Strategy s : {Strategy::lo(), Strategy::ri(), Strategy::random(i)}) {
                auto r = normalize(t, d, 10'000, s);
                CHECK(r.normal);
                CHECK_FALSE(has_beta_redex(r.term));
            }
        }
}

TEST_CASE("property: confluence of leftmost and random strategies") {
    Rng rng(22);
    for (const Discipline& d : terminating())
        for (int i = 0; i < 150; ++i) {
            Term t = random_closed(rng, gen_options_for(d, 7));
            CHECK(alpha_eq(normalize(t, d).term, normalize(t, d, kDefaultFuel, Strategy::random(i + 1)).term));
        }
}

TEST_CASE("property: steps preserve the discipline") {
    Rng rng(23);
    for (const Discipline& d : terminating())
        for (int i = 0; i < 100; ++i) {
            Term t = random_closed(rng, gen_options_for(d, 7));
            for (int k = 0; k < 50; ++k) {
                auto n = step(t, d, Strategy::random(k));
                if (!n) break;
                t = *n;
                REQUIRE(validate(t, d).ok);
            }
        }
}

TEST_CASE("property: equality is a congruence on one-hole contexts") {
    Rng rng(24);
    Discipline d = Discipline::planar();
    GenOptions o = gen_options_for(d, 5);
    for (int i = 0; i < 100; ++i) {
        Term t1 = random_closed(rng, o);
        Term t2 = normalize(t1, d).term;
        Term ctx = random_term(rng, {"h"}, o);
        CHECK(wb::equal(substitute(ctx, "h", t1), substitute(ctx, "h", t2), d) == EqVerdict::Equal);
    }
}
