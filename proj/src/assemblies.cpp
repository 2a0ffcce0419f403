#include "wb/assemblies.hpp"

#include <deque>
#include <sstream>

namespace wb {

namespace {

bool is_eq(const ApplicativeStructure& a, const Elem& x, const Elem& y) {
    return a.eq(x, y) == EqVerdict::Equal;
}

bool listed(const ApplicativeStructure& a, const std::vector<Elem>& reps, const Elem& e) {
    for (const Elem& r : reps)
        if (is_eq(a, r, e)) return true;
    return false;
}

void install_listed(const ApplicativeStructure& a, Assembly& x) {
    auto reps = x.reps;
    const ApplicativeStructure* ap = &a;
    x.accepts = [ap, reps](size_t i, const Elem& e) { return listed(*ap, reps.at(i), e); };
}

std::optional<Elem> apply(const ApplicativeStructure& a, const Elem& r, const Elem& x, Side side) {
    return side == Side::Right ? a.rapp(r, x) : a.lapp(x, r);
}

}  // namespace

std::optional<size_t> Assembly::index_of(const std::string& p) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i] == p) return i;
    return std::nullopt;
}

Assembly make_assembly(const ApplicativeStructure& a, std::string name, std::vector<std::string> points,
                       std::vector<std::vector<Elem>> reps) {
    if (points.size() != reps.size()) throw std::invalid_argument("assembly: one realizer list per point");
    for (size_t i = 0; i < reps.size(); ++i)
        if (reps[i].empty()) throw std::invalid_argument("assembly: empty realizer set at " + points[i]);
    Assembly x{std::move(name), std::move(points), std::move(reps), {}};
    install_listed(a, x);
    return x;
}

Assembly image_assembly(const ApplicativeStructure& a, const Assembly& x, const Elem& t, const std::string& name) {
    std::vector<std::vector<Elem>> reps;
    for (const auto& rs : x.reps) {
        std::vector<Elem> out;
        for (const Elem& r : rs) {
            auto v = a.rapp(t, r);
            if (!v) throw std::invalid_argument("image assembly: undefined application");
            out.push_back(*v);
        }
        reps.push_back(out);
    }
    return make_assembly(a, name, x.points, reps);
}

Assembly app_assembly(const ApplicativeStructure& a, const Assembly& x, const Assembly& y, const std::string& name) {
    std::vector<std::string> pts;
    std::vector<std::vector<Elem>> reps;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) {
            pts.push_back("(" + x.points[i] + "," + y.points[j] + ")");
            std::vector<Elem> out;
            for (const Elem& p : x.reps[i])
                for (const Elem& q : y.reps[j]) {
                    auto v = a.rapp(p, q);
                    if (!v) throw std::invalid_argument("app assembly: undefined application");
                    out.push_back(*v);
                }
            reps.push_back(out);
        }
    return make_assembly(a, name, pts, reps);
}

Assembly unit_assembly(const ApplicativeStructure& a, const Elem& i) { return make_assembly(a, "I", {"*"}, {{i}}); }

Assembly tensor_assembly(const ApplicativeStructure& a, const Assembly& x, const Assembly& y, const Pairing& pair) {
    std::vector<std::string> pts;
    std::vector<std::vector<Elem>> reps;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) {
            pts.push_back("(" + x.points[i] + "," + y.points[j] + ")");
            std::vector<Elem> out;
            for (const Elem& p : x.reps[i])
                for (const Elem& q : y.reps[j]) {
                    auto v = pair(p, q);
                    if (!v) throw std::invalid_argument("tensor assembly: undefined pairing");
                    out.push_back(*v);
                }
            reps.push_back(out);
        }
    return make_assembly(a, x.name + "*" + y.name, pts, reps);
}

Pairing pairing_P(const ApplicativeStructure& a, const Signature& sig) {
    auto it = sig.nullary.find("P");
    if (it == sig.nullary.end()) throw MissingElement("P");
    Elem p = it->second;
    const ApplicativeStructure* ap = &a;
    return [ap, p](const Elem& x, const Elem& y) -> std::optional<Elem> {
        auto px = ap->rapp(p, x);
        if (!px) return std::nullopt;
        return ap->rapp(*px, y);
    };
}

std::string show_point_map(const Assembly& x, const Assembly& y, const PointMap& f) {
    std::string s = "{";
    for (size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + x.points[i] + "->" + y.points[f[i]];
    return s + "}";
}

bool tracks(const ApplicativeStructure& a, const Elem& r, const Assembly& x, const Assembly& y, const PointMap& f,
            Side side) {
    for (size_t i = 0; i < x.size(); ++i)
        for (const Elem& e : x.reps[i]) {
            auto v = apply(a, r, e, side);
            if (!v || !y.accepts(f[i], *v)) return false;
        }
    return true;
}

Assembly hom_assembly(const ApplicativeStructure& a, const Assembly& x, const Assembly& y,
                      std::vector<std::pair<PointMap, std::vector<Elem>>> maps, Side side, const std::string& name) {
    Assembly h;
    h.name = name;
    std::vector<PointMap> fs;
    for (auto& [f, reps] : maps) {
        if (f.size() != x.size()) throw std::invalid_argument("hom assembly: map of wrong arity");
        if (reps.empty()) throw std::invalid_argument("hom assembly: map without realizer");
        h.points.push_back(show_point_map(x, y, f));
        h.reps.push_back(reps);
        fs.push_back(f);
    }
    const ApplicativeStructure* ap = &a;
    h.accepts = [ap, x, y, fs, side](size_t i, const Elem& e) { return tracks(*ap, e, x, y, fs.at(i), side); };
    return h;
}

std::optional<size_t> hom_index(const Assembly& hom, const std::string& point_name) { return hom.index_of(point_name); }

bool nonempty(const Assembly& x) {
    for (const auto& r : x.reps)
        if (r.empty()) return false;
    return true;
}

bool is_modest(const ApplicativeStructure& a, const Assembly& x) {
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            for (const Elem& e : x.reps[i])
                for (const Elem& f : x.reps[j])
                    if (is_eq(a, e, f)) return false;
    return true;
}

MapReport check_map(const ApplicativeStructure& a, const AssemblyMap& m) {
    MapReport rep;
    const Assembly& x = *m.source;
    const Assembly& y = *m.target;
    if (m.f.size() != x.size()) {
        rep.witness = "point map has the wrong arity";
        return rep;
    }
    for (size_t i = 0; i < x.size(); ++i)
        for (const Elem& e : x.reps[i]) {
            ++rep.checked;
            auto v = apply(a, m.realizer, e, m.side);
            if (!v) {
                rep.witness = "at " + x.points[i] + " with " + a.show(e) + ": application undefined";
                return rep;
            }
            if (!y.accepts(m.f[i], *v)) {
                rep.witness = "at " + x.points[i] + " with " + a.show(e) + ": " + a.show(*v) + " does not realize " +
                              y.points[m.f[i]];
                return rep;
            }
        }
    rep.ok = true;
    return rep;
}

std::optional<Elem> search_realizer(const ApplicativeStructure& a, const PointMap& f, const Assembly& x,
                                    const Assembly& y, const std::vector<Elem>& universe, size_t cap) {
    for (size_t i = 0; i < universe.size() && i < cap; ++i)
        if (tracks(a, universe[i], x, y, f)) return universe[i];
    return std::nullopt;
}

bool SuiteReport::ok() const {
    for (const auto& it : items)
        if (!it.ok) return false;
    return true;
}

// ---------------------------------------------------------------- the suite

namespace {

Comb V(const std::string& x) { return cvar(x); }
Comb H(const Elem& e) { return chole(e); }
Comb S(const std::string& s) { return csym(s); }
Comb ap(Comb f, std::vector<Comb> xs) { return capps(std::move(f), xs); }
Comb la(Comb arg, Comb f) { return clapp(std::move(arg), std::move(f)); }
// lambda-star over several variables, innermost last
Comb lam_p(const std::vector<std::string>& xs, Comb m) {
    for (size_t k = xs.size(); k-- > 0;) m = abstract_planar(m, xs[k]);
    return m;
}
Comb rl(const std::string& x, Comb m) { return abstract_right(m, x); }
Comb ll(const std::string& x, Comb m) { return abstract_left(m, x); }

struct Suite {
    const ApplicativeStructure& a;
    Signature sig;
    SuiteReport rep;
    std::deque<Assembly> store;
    std::vector<AssemblyMap> passed;

    Suite(const ApplicativeStructure& a_, Signature s) : a(a_), sig(std::move(s)) {}

    const Assembly* keep(Assembly x) {
        store.push_back(std::move(x));
        return &store.back();
    }

    Elem build(const Comb& c) {
        auto v = interpret(a, c, {}, &sig);
        if (!v) throw std::runtime_error("realizer undefined: " + show(c));
        return *v;
    }

    Elem sym(const std::string& s) { return build(S(s)); }

    void add(const std::string& datum, bool ok, const std::string& detail) { rep.items.push_back({datum, ok, detail}); }

    void map(const std::string& datum, const Assembly* x, const Assembly* y, PointMap f, const Elem& r,
             Side side = Side::Right) {
        AssemblyMap m{datum, x, y, std::move(f), r, side};
        MapReport mr = check_map(a, m);
        add(datum, mr.ok, mr.ok ? "checked " + std::to_string(mr.checked) + " realizers" : mr.witness);
        if (mr.ok && side == Side::Right) passed.push_back(m);
    }

    // r p q lands in the realizers of q(x, y)
    void multimap(const std::string& datum, const Assembly* x, const Assembly* y, const Assembly* z,
                  const std::function<size_t(size_t, size_t)>& f, const Elem& r) {
        size_t n = 0;
        for (size_t i = 0; i < x->size(); ++i)
            for (size_t j = 0; j < y->size(); ++j)
                for (const Elem& p : x->reps[i])
                    for (const Elem& q : y->reps[j]) {
                        ++n;
                        auto rp = a.rapp(r, p);
                        auto v = rp ? a.rapp(*rp, q) : std::nullopt;
                        if (!v || !z->accepts(f(i, j), *v)) {
                            add(datum, false,
                                "at (" + x->points[i] + "," + y->points[j] + "): " + (v ? a.show(*v) : "undefined"));
                            return;
                        }
                    }
        add(datum, true, "checked " + std::to_string(n) + " realizer pairs");
    }

    static PointMap identity(size_t n) {
        PointMap f(n);
        for (size_t i = 0; i < n; ++i) f[i] = i;
        return f;
    }

    void composition_law() {
        Elem b = sym("B");
        size_t pairs = 0;
        std::vector<AssemblyMap> maps = passed;
        for (const auto& f : maps)
            for (const auto& g : maps) {
                if (f.target != g.source) continue;
                PointMap gf(f.f.size());
                for (size_t i = 0; i < gf.size(); ++i) gf[i] = g.f[f.f[i]];
                Elem r = build(ap(H(b), {H(g.realizer), H(f.realizer)}));
                MapReport mr = check_map(a, {"", f.source, g.target, gf, r, Side::Right});
                ++pairs;
                if (!mr.ok) add("composition " + g.name + " after " + f.name, false, mr.witness);
            }
        rep.composition_pairs = pairs;
        add("composition law B r_g r_f", true, std::to_string(pairs) + " composable pairs checked");
    }
};

bool has_all(const Signature& s, const std::vector<std::string>& syms, const std::vector<std::string>& ops) {
    for (const auto& x : syms)
        if (!s.nullary.count(x)) return false;
    for (const auto& x : ops)
        if (!s.unary.count(x)) return false;
    return true;
}

bool axioms_hold(const ApplicativeStructure& a, Basis b, const Signature& sig) {
    const BasisInfo& info = basis_info(b);
    if (!has_all(sig, info.symbols, info.unary)) return false;
    for (const Axiom& ax : class_axioms(b)) {
        CheckMode mode = a.fresh_constants(1) ? CheckMode::fresh() : CheckMode::sampled(100, 1);
        if (check_axiom(a, ax, mode, &sig).verdict != AxiomVerdict::Holds) return false;
    }
    return true;
}

void merge(Signature& into, const Signature& from) {
    for (const auto& [k, v] : from.nullary) into.nullary.emplace(k, v);
    for (const auto& [k, v] : from.unary) into.unary.emplace(k, v);
}

// closed multicategory: identity, composition, internal hom action, evaluation,
// multicomposition and currying
void multicategory(Suite& s, const Assembly* X, const Assembly* Y) {
    const std::string c = "BIdot: ";
    Elem B = s.sym("B"), I = s.sym("I");
    const Assembly* X1 = s.keep(image_assembly(s.a, *X, B, "B" + X->name));
    const Assembly* X2 = s.keep(image_assembly(s.a, *X1, B, "B" + X1->name));
    const Assembly* Y1 = s.keep(image_assembly(s.a, *Y, B, "B" + Y->name));
    PointMap id = Suite::identity(X->size());
    PointMap idy = Suite::identity(Y->size());

    s.map(c + "identity " + X->name, X, X, id, I);
    s.map(c + "identity " + Y->name, Y, Y, idy, I);
    s.map(c + "f: X -> BX", X, X1, id, B);
    s.map(c + "g: BX -> BBX", X1, X2, id, B);
    s.map(c + "h: Y -> BY", Y, Y1, idy, B);
    Elem rgf = s.build(ap(S("B"), {H(B), H(B)}));
    s.map(c + "composition g o f", X, X2, id, rgf);

    // g -o id_X : [X, BX] -> [X, BBX]
    const Assembly* H1 = s.keep(hom_assembly(s.a, *X, *X1, {{id, {B}}}, Side::Right, "[X,BX]"));
    const Assembly* H2 = s.keep(hom_assembly(s.a, *X, *X2, {{id, {rgf}}}, Side::Right, "[X,BBX]"));
    Elem hom = s.build(lam_p({"u", "v"}, ap(H(B), {ap(V("u"), {ap(H(I), {V("v")})})})));
    s.map(c + "internal hom g -o f", H1, H2, {0}, hom);

    s.multimap(c + "evaluation [X,BX], X -> BX", H1, X, X1, [](size_t, size_t j) { return j; }, I);

    // q: (BX, BY) -> BX.BY realized by I, precomposed with f and h
    const Assembly* Q = s.keep(app_assembly(s.a, *X1, *Y1, "BX.BY"));
    size_t ny = Y->size();
    auto pair_ix = [ny](size_t i, size_t j) { return i * ny + j; };
    s.multimap(c + "multimap q", X1, Y1, Q, pair_ix, I);
    Elem mc = s.build(lam_p({"a", "b"}, ap(H(I), {ap(H(B), {V("a")}), ap(H(B), {V("b")})})));
    s.multimap(c + "multicomposition q(f, h)", X, Y, Q, pair_ix, mc);

    // currying q gives BX -> [BY, BX.BY]
    std::vector<std::pair<PointMap, std::vector<Elem>>> cur;
    for (size_t i = 0; i < X1->size(); ++i) {
        PointMap hx(ny);
        for (size_t j = 0; j < ny; ++j) hx[j] = pair_ix(i, j);
        cur.push_back({hx, X1->reps[i]});
    }
    const Assembly* HC = s.keep(hom_assembly(s.a, *Y1, *Q, cur, Side::Right, "[BY,BX.BY]"));
    s.map(c + "currying of q", X1, HC, Suite::identity(X1->size()), I);
}

// closed category: unit, j, i, i inverse, L
void closed_category(Suite& s, const Assembly* X) {
    const std::string c = "BIIdot: ";
    Elem B = s.sym("B"), I = s.sym("I"), Ix = s.sym("Ix");
    auto dotI = s.sig.unary.at("dot")(I);
    if (!dotI) throw std::runtime_error("dot(I) undefined");
    const Assembly* U = s.keep(unit_assembly(s.a, I));
    PointMap id = Suite::identity(X->size());

    const Assembly* HXX = s.keep(hom_assembly(s.a, *X, *X, {{id, {I}}}, Side::Right, "[X,X]"));
    s.map(c + "j: I -> [X,X]", U, HXX, {0}, I);

    std::vector<std::pair<PointMap, std::vector<Elem>>> pts;
    for (size_t i = 0; i < X->size(); ++i) {
        std::vector<Elem> reps;
        for (const Elem& e : X->reps[i]) reps.push_back(*s.a.rapp(Ix, e));
        pts.push_back({PointMap{i}, reps});
    }
    const Assembly* HUX = s.keep(hom_assembly(s.a, *U, *X, pts, Side::Right, "[I,X]"));
    s.map(c + "i: [I,X] -> X", HUX, X, id, *dotI);
    s.map(c + "i inverse: X -> [I,X]", X, HUX, id, Ix);

    const Assembly* X1 = s.keep(image_assembly(s.a, *X, B, "B" + X->name));
    const Assembly* X2 = s.keep(image_assembly(s.a, *X1, B, "B" + X1->name));
    Elem rgf = s.build(ap(S("B"), {H(B), H(B)}));
    const Assembly* G = s.keep(hom_assembly(s.a, *X1, *X2, {{id, {B}}}, Side::Right, "[BX,BBX]"));
    const Assembly* F = s.keep(hom_assembly(s.a, *X, *X1, {{id, {B}}}, Side::Right, "[X,BX]"));
    const Assembly* GF = s.keep(hom_assembly(s.a, *X, *X2, {{id, {rgf}}}, Side::Right, "[X,BBX]"));
    Elem rl = *s.a.rapp(B, B);
    const Assembly* HH = s.keep(hom_assembly(s.a, *F, *GF, {{{0}, {rl}}}, Side::Right, "[[X,BX],[X,BBX]]"));
    s.map(c + "L: [BX,BBX] -> [[X,BX],[X,BBX]]", G, HH, {0}, B);
}

// monoidal closed structure from L and P
void monoidal_closed(Suite& s, const Assembly* X, const Assembly* Y, const Assembly* Z) {
    const std::string c = "BIILP: ";
    Elem B = s.sym("B"), I = s.sym("I"), Ix = s.sym("Ix"), L = s.sym("L"), P = s.sym("P");
    Pairing pr = pairing_P(s.a, s.sig);
    const Assembly* U = s.keep(unit_assembly(s.a, I));
    const Assembly* X1 = s.keep(image_assembly(s.a, *X, B, "B" + X->name));
    const Assembly* Y1 = s.keep(image_assembly(s.a, *Y, B, "B" + Y->name));
    const Assembly* XY = s.keep(tensor_assembly(s.a, *X, *Y, pr));
    const Assembly* XY1 = s.keep(tensor_assembly(s.a, *X1, *Y1, pr));
    PointMap id = Suite::identity(X->size());
    PointMap idxy = Suite::identity(XY->size());

    Elem ft = s.build(ap(H(L), {lam_p({"p", "q"}, ap(H(P), {ap(H(B), {V("p")}), ap(H(B), {V("q")})}))}));
    s.map(c + "f (x) g", XY, XY1, idxy, ft);

    const Assembly* UX = s.keep(tensor_assembly(s.a, *U, *X, pr));
    const Assembly* XU = s.keep(tensor_assembly(s.a, *X, *U, pr));
    s.map(c + "left unitor", UX, X, id, *s.a.rapp(L, I));
    s.map(c + "left unitor inverse", X, UX, id, *s.a.rapp(P, I));
    s.map(c + "right unitor", X, XU, id, s.build(lam_p({"p"}, ap(H(P), {V("p"), H(I)}))));
    s.map(c + "right unitor inverse", XU, X, id, *s.a.rapp(L, Ix));

    const Assembly* XYZl = s.keep(tensor_assembly(s.a, *XY, *Z, pr));
    const Assembly* YZ = s.keep(tensor_assembly(s.a, *Y, *Z, pr));
    const Assembly* XYZr = s.keep(tensor_assembly(s.a, *X, *YZ, pr));
    PointMap idxyz = Suite::identity(XYZl->size());
    Elem alpha = s.build(ap(H(L), {ap(H(L), {lam_p({"p", "q", "r"}, ap(H(P), {V("p"), ap(H(P), {V("q"), V("r")})}))})}));
    s.map(c + "associator", XYZl, XYZr, idxyz, alpha);
    Elem M = s.build(lam_p({"p", "q", "r"}, ap(H(P), {ap(H(P), {V("p"), V("q")}), V("r")})));
    Elem alpha_inv = s.build(ap(H(L), {lam_p({"p", "u"}, ap(H(L), {ap(H(M), {V("p")}), V("u")}))}));
    s.map(c + "associator inverse", XYZr, XYZl, idxyz, alpha_inv);

    const Assembly* F = s.keep(hom_assembly(s.a, *X, *X1, {{id, {B}}}, Side::Right, "[X,BX]"));
    const Assembly* FX = s.keep(tensor_assembly(s.a, *F, *X, pr));
    s.map(c + "evaluation [X,BX] (x) X -> BX", FX, X1, id, *s.a.rapp(L, I));

    // curry of the identity on Z (x) X
    const Assembly* ZX = s.keep(tensor_assembly(s.a, *Z, *X, pr));
    size_t nx = X->size();
    std::vector<std::pair<PointMap, std::vector<Elem>>> cur;
    for (size_t k = 0; k < Z->size(); ++k) {
        PointMap hz(nx);
        for (size_t i = 0; i < nx; ++i) hz[i] = k * nx + i;
        std::vector<Elem> reps;
        for (const Elem& e : Z->reps[k]) reps.push_back(*s.a.rapp(P, e));
        cur.push_back({hz, reps});
    }
    const Assembly* HC = s.keep(hom_assembly(s.a, *X, *ZX, cur, Side::Right, "[X,Z*X]"));
    Elem curry = s.build(lam_p({"r", "p"}, ap(H(I), {ap(H(P), {V("r"), V("p")})})));
    s.map(c + "currying", Z, HC, Suite::identity(Z->size()), curry);
}

// monoidal bi-closed structure over a bi-BDI-algebra
void bi_closed(Suite& s, const Assembly* X, const Assembly* Y, const Assembly* Z) {
    const std::string c = "biBDI: ";
    Elem Br = s.sym("B>"), Ir = s.sym("I>"), Il = s.sym("I<");
    auto Pc = [](Comb p, Comb q) { return ll("t", ap(V("t"), {std::move(p), std::move(q)})); };
    const ApplicativeStructure* ap_ = &s.a;
    Suite* sp = &s;
    Pairing pr = [sp, Pc](const Elem& p, const Elem& q) -> std::optional<Elem> {
        return interpret(sp->a, Pc(H(p), H(q)), {}, &sp->sig);
    };
    (void)ap_;
    const Assembly* U = s.keep(unit_assembly(s.a, Ir));
    const Assembly* X1 = s.keep(image_assembly(s.a, *X, Br, "B>" + X->name));
    const Assembly* X2 = s.keep(image_assembly(s.a, *X1, Br, "B>" + X1->name));
    const Assembly* Y1 = s.keep(image_assembly(s.a, *Y, Br, "B>" + Y->name));
    PointMap id = Suite::identity(X->size());

    s.map(c + "identity", X, X, id, Ir);
    s.map(c + "f: X -> B>X", X, X1, id, Br);
    s.map(c + "g: B>X -> B>B>X", X1, X2, id, Br);
    Elem rgf = s.build(ap(H(Br), {H(Br), H(Br)}));
    s.map(c + "composition", X, X2, id, rgf);

    const Assembly* XY = s.keep(tensor_assembly(s.a, *X, *Y, pr));
    const Assembly* XY1 = s.keep(tensor_assembly(s.a, *X1, *Y1, pr));
    Comb F = rl("p", rl("q", Pc(ap(H(Br), {V("p")}), ap(H(Br), {V("q")}))));
    s.map(c + "f (x) g", XY, XY1, Suite::identity(XY->size()), s.build(rl("u", la(F, V("u")))));

    const Assembly* UX = s.keep(tensor_assembly(s.a, *U, *X, pr));
    const Assembly* XU = s.keep(tensor_assembly(s.a, *X, *U, pr));
    s.map(c + "left unitor", UX, X, id, s.build(rl("p", la(H(Ir), V("p")))));
    s.map(c + "left unitor inverse", X, UX, id, s.build(rl("p", Pc(H(Ir), V("p")))));
    s.map(c + "right unitor", X, XU, id, s.build(rl("p", Pc(V("p"), H(Ir)))));
    Comb rinv = rl("p", rl("v", la(V("p"), ap(V("v"), {H(Il)}))));
    s.map(c + "right unitor inverse", XU, X, id, s.build(rl("u", la(rinv, V("u")))));

    const Assembly* XYZl = s.keep(tensor_assembly(s.a, *XY, *Z, pr));
    const Assembly* YZ = s.keep(tensor_assembly(s.a, *Y, *Z, pr));
    const Assembly* XYZr = s.keep(tensor_assembly(s.a, *X, *YZ, pr));
    PointMap idxyz = Suite::identity(XYZl->size());
    Comb M = rl("p", rl("q", rl("r", ll("t", ap(V("t"), {V("p"), Pc(V("q"), V("r"))})))));
    s.map(c + "associator", XYZl, XYZr, idxyz, s.build(rl("u", la(rl("v", la(M, V("v"))), V("u")))));
    Comb N = ll("t", ap(V("t"), {Pc(V("p"), V("q")), V("r")}));
    Comb inner = rl("p", rl("v", la(rl("q", rl("r", N)), V("v"))));
    s.map(c + "associator inverse", XYZr, XYZl, idxyz, s.build(rl("u", la(inner, V("u")))));

    // right hom
    const Assembly* F1 = s.keep(hom_assembly(s.a, *X, *X1, {{id, {Br}}}, Side::Right, "[X,B>X]"));
    const Assembly* F2 = s.keep(hom_assembly(s.a, *X, *X2, {{id, {rgf}}}, Side::Right, "[X,B>B>X]"));
    Comb hom = rl("u", rl("v", ap(H(Br), {ap(V("u"), {ap(H(Ir), {V("v")})})})));
    s.map(c + "right hom g -o f", F1, F2, {0}, s.build(hom));
    const Assembly* FX = s.keep(tensor_assembly(s.a, *F1, *X, pr));
    s.map(c + "right evaluation", FX, X1, id, s.build(rl("u", la(H(Ir), V("u")))));

    const Assembly* ZX = s.keep(tensor_assembly(s.a, *Z, *X, pr));
    size_t nx = X->size();
    std::vector<std::pair<PointMap, std::vector<Elem>>> cur;
    for (size_t k = 0; k < Z->size(); ++k) {
        PointMap hz(nx);
        for (size_t i = 0; i < nx; ++i) hz[i] = k * nx + i;
        std::vector<Elem> reps;
        for (const Elem& e : Z->reps[k]) reps.push_back(s.build(rl("p", Pc(H(e), V("p")))));
        cur.push_back({hz, reps});
    }
    const Assembly* HC = s.keep(hom_assembly(s.a, *X, *ZX, cur, Side::Right, "[X,Z*X]"));
    Comb curry = rl("q", rl("p", ap(H(Ir), {Pc(V("q"), V("p"))})));
    s.map(c + "right currying", Z, HC, Suite::identity(Z->size()), s.build(curry));

    // left hom
    auto dagL = s.sig.unary.at("dagL");
    Elem lf = *dagL(Br);
    Elem lgf = *dagL(rgf);
    const Assembly* G1 = s.keep(hom_assembly(s.a, *X, *X1, {{id, {lf}}}, Side::Left, "X-oB>X"));
    const Assembly* G2 = s.keep(hom_assembly(s.a, *X, *X2, {{id, {lgf}}}, Side::Left, "X-oB>B>X"));
    Comb lhom = rl("u", ll("v", ap(H(Br), {la(ap(H(Ir), {V("v")}), V("u"))})));
    s.map(c + "left hom f -o g", G1, G2, {0}, s.build(lhom));
    const Assembly* XG = s.keep(tensor_assembly(s.a, *X, *G1, pr));
    Comb ev2 = rl("u", la(rl("p", rl("v", la(V("p"), V("v")))), V("u")));
    s.map(c + "left evaluation", XG, X1, id, s.build(ev2));

    const Assembly* XZ = s.keep(tensor_assembly(s.a, *X, *Z, pr));
    size_t nz = Z->size();
    std::vector<std::pair<PointMap, std::vector<Elem>>> lcur;
    for (size_t k = 0; k < nz; ++k) {
        PointMap hz(nx);
        for (size_t i = 0; i < nx; ++i) hz[i] = i * nz + k;
        std::vector<Elem> reps;
        for (const Elem& e : Z->reps[k]) reps.push_back(s.build(ll("p", Pc(V("p"), H(e)))));
        lcur.push_back({hz, reps});
    }
    const Assembly* LC = s.keep(hom_assembly(s.a, *X, *XZ, lcur, Side::Left, "X-o(X*Z)"));
    Comb lcurry = rl("q", ll("p", ap(H(Ir), {Pc(V("p"), V("q"))})));
    s.map(c + "left currying", Z, LC, Suite::identity(nz), s.build(lcurry));
}

}  // namespace

SuiteReport closed_structure_suite(const ApplicativeStructure& a, const Assembly& x, const Assembly& y,
                                   const Assembly& z) {
    Signature sig = a.signature();
    if (has_all(sig, basis_info(Basis::BiBDI).symbols, basis_info(Basis::BiBDI).unary))
        if (auto d = derive_candidates(a, Basis::BiBDI, sig, Basis::BIILP)) merge(sig, *d);
    Suite s(a, sig);
    s.rep.structure = a.name();
    for (Basis b : {Basis::BIdot, Basis::BIIdot, Basis::BIILP, Basis::BiBDI})
        if (axioms_hold(a, b, sig)) s.rep.classes.push_back(class_name(b));
    auto has = [&](Basis b) {
        for (const auto& n : s.rep.classes)
            if (n == class_name(b)) return true;
        return false;
    };
    if (!has(Basis::BIdot)) throw MissingElement("closed structure suite needs a BIdot-algebra");
    const Assembly* X = s.keep(x);
    const Assembly* Y = s.keep(y);
    const Assembly* Z = s.keep(z);
    multicategory(s, X, Y);
    if (has(Basis::BIIdot)) closed_category(s, X);
    if (has(Basis::BIILP)) monoidal_closed(s, X, Y, Z);
    if (has(Basis::BiBDI)) bi_closed(s, X, Y, Z);
    s.composition_law();
    return s.rep;
}

FixedAssemblies fixed_assemblies(const TermModel& m) {
    std::vector<std::string> atoms;
    if (m.discipline().allow_left_ops)
        atoms = {"\\>x. x", "\\<x. x", "\\>x. \\>y. x y", "\\>x. x (\\<y. y)"};
    else if (m.discipline().allow_tensor)
        atoms = {"\\x. x", "(\\x. x) * (\\y. y)", "\\x y z. x (y z)", "\\x. x (\\y. y)"};
    else
        atoms = {"\\x. x", "\\x y. x y", "\\x y z. x (y z)", "\\x. x (\\y. y)"};
    std::vector<Elem> e;
    for (const auto& s : atoms) e.push_back(m.elem(s));
    return {make_assembly(m, "X", {"x0", "x1"}, {{e[0], e[2]}, {e[1]}}),
            make_assembly(m, "Y", {"y0", "y1", "y2"}, {{e[3]}, {e[1]}, {e[0]}}),
            make_assembly(m, "Z", {"z0", "z1"}, {{e[2]}, {e[3]}})};
}

NonModestWitness non_modest_tensor_witness(const TreeModel& t) {
    Elem empty(t.finite({}));
    Elem zero(t.finite_text({"0"}));
    Elem one(t.finite_text({"1"}));
    Assembly x = make_assembly(t, "X", {"x0", "x1"}, {{empty}, {zero}});
    Assembly y = make_assembly(t, "Y", {"y0", "y1"}, {{zero}, {one}});
    Assembly xy = tensor_assembly(t, x, y, pairing_P(t, t.signature()));
    NonModestWitness w{is_modest(t, x), is_modest(t, y), is_modest(t, xy), ""};
    auto size = [&](const Elem& e) { return std::to_string(t.members(*e.trees()).size()); };
    w.detail = "over " + t.name() + ": X = {x0: {}, x1: {0}}, Y = {y0: {0}, y1: {1}}; P {} {0} and P {} {1} have " +
               size(xy.reps[0][0]) + " and " + size(xy.reps[1][0]) + " members, so both realize (x0,y0) and (x0,y1)";
    return w;
}

AssemblyFile parse_assembly_file(const std::string& text, const TermModel& m) {
    AssemblyFile out;
    std::istringstream in(text);
    std::string line;
    std::string name;
    std::vector<std::string> pts;
    std::vector<std::vector<Elem>> reps;
    auto flush = [&] {
        if (!name.empty()) out.assemblies.push_back(make_assembly(m, name, pts, reps));
        name.clear();
        pts.clear();
        reps.clear();
    };
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t\r");
        size_t e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto k = line.find("--"); k != std::string::npos) line = line.substr(0, k);
        line = trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("assembly file line " + std::to_string(lineno) + ": " + why);
        };
        if (line.rfind("model ", 0) == 0) {
            out.model = trim(line.substr(6));
        } else if (line.rfind("assembly ", 0) == 0) {
            flush();
            name = trim(line.substr(9));
        } else if (line.rfind("point ", 0) == 0) {
            if (name.empty()) fail("point outside an assembly");
            auto colon = line.find(':');
            if (colon == std::string::npos) fail("expected `point NAME: term ; term`");
            pts.push_back(trim(line.substr(6, colon - 6)));
            std::vector<Elem> rs;
            std::string rest = line.substr(colon + 1);
            size_t start = 0;
            while (start <= rest.size()) {
                size_t semi = rest.find(';', start);
                std::string t = trim(rest.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
                if (!t.empty()) rs.push_back(m.elem(t));
                if (semi == std::string::npos) break;
                start = semi + 1;
            }
            if (rs.empty()) fail("point without realizers");
            reps.push_back(rs);
        } else {
            fail("unrecognized line");
        }
    }
    flush();
    return out;
}

// ---------------------------------------------------------------- morphisms

namespace {

bool within(const ApplicativeStructure& s, const Elem& x, const Elem& y) {
    if (auto* t = dynamic_cast<const TreeModel*>(&s)) return t->subset(*x.trees(), *y.trees());
    return is_eq(s, x, y);
}

}  // namespace

MorphismReport check_morphism(const MorphismSpec& m, const std::vector<Elem>& samples) {
    MorphismReport rep;
    const ApplicativeStructure& src = *m.source;
    const ApplicativeStructure& tgt = *m.target;
    for (const Elem& a : samples)
        for (const Elem& b : samples) {
            ++rep.checked;
            auto ab = src.rapp(a, b);
            if (!ab) continue;
            auto ra = tgt.rapp(m.realizer, m.relation(a));
            auto lhs = ra ? tgt.rapp(*ra, m.relation(b)) : std::nullopt;
            if (!lhs || !within(tgt, *lhs, m.relation(*ab))) {
                rep.witness = m.name + " at a = " + src.show(a) + ", a' = " + src.show(b);
                return rep;
            }
        }
    rep.ok = true;
    return rep;
}

MorphismReport check_below(const ApplicativeStructure& target, const Elem& r,
                           const std::function<Elem(const Elem&)>& lhs_rel,
                           const std::function<Elem(const Elem&)>& rhs_rel, const std::vector<Elem>& samples) {
    MorphismReport rep;
    for (const Elem& a : samples) {
        ++rep.checked;
        auto v = target.rapp(r, lhs_rel(a));
        if (!v || !within(target, *v, rhs_rel(a))) {
            rep.witness = "at " + target.show(a);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

AdjointReport check_adjoint(const TeAdjoint& p, const std::vector<Elem>& t_samples,
                            const std::vector<Elem>& te_samples) {
    AdjointReport rep;
    rep.gamma = check_morphism(p.gamma, t_samples);
    rep.delta = check_morphism(p.delta, te_samples);
    auto id = [](const Elem& a) { return a; };
    auto dg = [&](const Elem& a) { return p.delta.relation(p.gamma.relation(a)); };
    auto gd = [&](const Elem& a) { return p.gamma.relation(p.delta.relation(a)); };
    rep.below_id = check_below(*p.delta.target, p.below_id, dg, id, t_samples);
    rep.above_id = check_below(*p.gamma.target, p.above_id, id, gd, te_samples);
    return rep;
}

}  // namespace wb
