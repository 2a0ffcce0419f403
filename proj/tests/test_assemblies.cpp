#include "doctest.h"
#include "wb/assemblies.hpp"

using namespace wb;

namespace {

struct Small {
    std::unique_ptr<TermModel> m = model_LP();
    Assembly x, y;
    Small() {
        x = make_assembly(*m, "X", {"x0", "x1"}, {{m->elem("\\a. a")}, {m->elem("\\a b. a b")}});
        y = make_assembly(*m, "Y", {"y0", "y1"}, {{m->elem("\\a b. a b")}, {m->elem("\\a. a")}});
    }
};

}  // namespace

TEST_CASE("maps tracked by realizers") {
    Small s;
    Elem i = s.m->elem("\\a. a");
    CHECK(check_map(*s.m, {"id", &s.x, &s.x, {0, 1}, i}).ok);
    CHECK(tracks(*s.m, i, s.x, s.x, {0, 1}));
    CHECK_FALSE(tracks(*s.m, i, s.x, s.y, {0, 1}));
    MapReport bad = check_map(*s.m, {"wrong", &s.x, &s.x, {1, 0}, i});
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.witness.empty());
    // composition by B
    Elem b = s.m->elem("\\f g a. f (g a)");
    Elem fg = *s.m->rapp(*s.m->rapp(b, i), i);
    CHECK(check_map(*s.m, {"comp", &s.x, &s.x, {0, 1}, fg}).ok);
}

TEST_CASE("realizer search") {
    Small s;
    std::vector<Elem> universe = s.m->sample(7, 200);
    universe.push_back(s.m->elem("\\a. a"));
    CHECK(search_realizer(*s.m, {0, 1}, s.x, s.x, universe).has_value());
    // swapping the two points would need a term sending \a.a to \a b.a b and back
    std::vector<Elem> tiny = {s.m->elem("\\a. a"), s.m->elem("\\a b. a b"), s.m->elem("\\a b c. a (b c)")};
    CHECK_FALSE(search_realizer(*s.m, {1, 0}, s.x, s.x, tiny).has_value());

    auto ord = model_ordinary();
    Assembly x = make_assembly(*ord, "X", {"p", "q"}, {{ord->elem("\\a. a")}, {ord->elem("\\a b. b")}});
    Assembly one = make_assembly(*ord, "1", {"*"}, {{ord->elem("\\a b. a")}});
    Elem k = ord->elem("\\a b. a");
    Elem kk = *ord->rapp(k, k);
    CHECK(check_map(*ord, {"const", &x, &one, {0, 0}, kk}).ok);
}

TEST_CASE("derived assemblies") {
    auto lt = model_Ltensor();
    FixedAssemblies f = fixed_assemblies(*lt);
    Pairing p = pairing_P(*lt, lt->signature());
    Assembly xy = tensor_assembly(*lt, f.x, f.y, p);
    CHECK(xy.size() == f.x.size() * f.y.size());
    Assembly u = unit_assembly(*lt, *lt->distinguished("I"));
    CHECK(u.size() == 1);
    CHECK(is_modest(*lt, f.x));
    CHECK(nonempty(f.y));
    // the left unitor 1 (x) X -> X is realized by L I
    Assembly ux = tensor_assembly(*lt, u, f.x, p);
    Elem li = *lt->rapp(*lt->distinguished("L"), *lt->distinguished("I"));
    PointMap proj(ux.size());
    for (size_t k = 0; k < proj.size(); ++k) proj[k] = k % f.x.size();
    CHECK(check_map(*lt, {"lambda", &ux, &f.x, proj, li}).ok);
    CHECK_THROWS(make_assembly(*lt, "E", {"e"}, {{}}));
}

TEST_CASE("closed structure suites") {
    for (const auto& m : {model_LP(), model_Ltensor(), model_LB()}) {
        FixedAssemblies f = fixed_assemblies(*m);
        SuiteReport r = closed_structure_suite(*m, f.x, f.y, f.z);
        CHECK_MESSAGE(r.ok(), m->name());
        CHECK(r.composition_pairs > 0);
        bool has_tensor = false;
        for (const SuiteItem& it : r.items) has_tensor |= it.datum.find("associator") != std::string::npos;
        CHECK(has_tensor == (m->name() != "LP"));
    }
}

TEST_CASE("non-modest tensor of modest assemblies") {
    auto tp = tree_model(std::make_shared<IntegerGroup>(), Variant::Tprime, 5);
    NonModestWitness w = non_modest_tensor_witness(*tp);
    CHECK(w.x_modest);
    CHECK(w.y_modest);
    CHECK_FALSE(w.tensor_modest);
}

TEST_CASE("assembly files") {
    auto lp = model_LP();
    AssemblyFile f = parse_assembly_file(
        "-- two points\nmodel LP\nassembly X\npoint a: \\x. x\npoint b: \\x y. x y ; \\x y z. x (y z)\n", *lp);
    CHECK(f.model == "LP");
    REQUIRE(f.assemblies.size() == 1);
    CHECK(f.assemblies[0].size() == 2);
    CHECK(f.assemblies[0].reps[1].size() == 2);
    CHECK(f.assemblies[0].index_of("b") == std::optional<size_t>(1));
    CHECK_THROWS(parse_assembly_file("assembly X\npoint a: \\x y. y x\n", *lp));
}
