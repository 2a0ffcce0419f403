// Command-line front end.  Exit codes: 0 pass/Equal, 1 fail/NotEqual,
// 2 Unknown, 3 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wb/assemblies.hpp"
#include "wb/separation.hpp"

using namespace wb;
using nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUnknown = 2, kUsage = 3 };

struct Common {
    std::string discipline = "ordinary";
    std::string constants;
    bool eta = false;
    uint64_t fuel = kDefaultFuel;
    uint64_t seed = 1;
    size_t bound = 7;
    std::string basis = "bci";
    bool json = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Discipline discipline_of(const Common& c) {
    auto d = discipline_by_name(c.discipline);
    if (!d) throw UsageError("unknown discipline " + c.discipline);
    std::set<std::string> cs;
    std::stringstream ss(c.constants);
    for (std::string x; std::getline(ss, x, ',');)
        if (!x.empty()) cs.insert(x);
    return d->with_constants(cs).with_eta(c.eta);
}

Basis basis_of(const Common& c) {
    auto b = basis_by_name(c.basis);
    if (!b) throw UsageError("unknown basis " + c.basis);
    return *b;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A report: text lines for humans and a JSON object with fixed field names.
// FNV-1a over the arguments, so reports name their inputs without echoing them
std::string inputs_digest;

std::string fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Report {
    ordered_json j;
    std::vector<std::string> lines;

    Report(const std::string& command, const Common& c) {
        j["command"] = command;
        j["inputs"] = inputs_digest;
        j["seed"] = c.seed;
        j["bound"] = c.bound;
    }
    void line(const std::string& s) { lines.push_back(s); }
    int finish(const Common& c, const std::string& verdict, const std::string& witness = "") {
        j["verdict"] = verdict;
        j["witness"] = witness;
        if (c.json) {
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
            std::cout << "verdict: " << verdict << "\n";
            if (!witness.empty()) std::cout << "witness: " << witness << "\n";
        }
        if (verdict == "pass" || verdict == "Equal") return kPass;
        if (verdict == "Unknown") return kUnknown;
        return kFail;
    }
};

int finish_eq(Report& r, const Common& c, EqVerdict v) { return r.finish(c, verdict_name(v)); }

void add_common(CLI::App* s, Common& c) {
    s->add_option("--discipline", c.discipline, "ordinary|linear|planar|planar-tensor|biplanar");
    s->add_option("--constants", c.constants, "comma separated constant names");
    s->add_flag("--eta", c.eta, "equality up to eta");
    s->add_option("--fuel", c.fuel, "reduction step budget");
    s->add_option("--seed", c.seed, "random seed (default WORKBENCH_SEED or 1)");
    s->add_option("--bound", c.bound, "leaf bound for tree enumeration");
    s->add_option("--basis", c.basis, "sk|bci|bidot|biidot|biilp|bibdi|biidotcirc");
    s->add_flag("--json", c.json, "machine-readable report");
}

std::unique_ptr<ApplicativeStructure> model_of(const std::string& name, const Common& c) {
    auto m = model_by_name(name, c.bound);
    if (!m) throw UsageError("unknown model " + name);
    return m;
}

CheckMode mode_of(const ApplicativeStructure& a, size_t sampled, const Common& c) {
    if (sampled > 0 || !a.fresh_constants(1)) return CheckMode::sampled(sampled ? sampled : 200, c.seed);
    return CheckMode::fresh();
}

// terms outside the discipline are input errors
Term parse_valid(const std::string& text, const Discipline& d) {
    Term t = parse(text, d);
    ValidationReport v = validate(t, d);
    if (!v.ok) throw UsageError("term not in the discipline: " + v.violations.front().rule);
    return t;
}

std::string show_report(const AxiomReport& r) {
    std::string s = r.axiom + ": " + axiom_verdict_name(r.verdict);
    if (r.verdict == AxiomVerdict::FailsAt) {
        s += " at";
        for (const auto& [k, v] : r.witness) s += " " + k + "=" + v;
        s += " (lhs " + r.lhs + ", rhs " + r.rhs + ")";
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    Common c;
    if (const char* s = std::getenv("WORKBENCH_SEED")) c.seed = std::strtoull(s, nullptr, 10);
    std::string args;
    for (int i = 1; i < argc; ++i) args += std::string(argv[i]) + '\0';
    inputs_digest = fnv1a(args);

    CLI::App app{"workbench: planar lambda calculi, combinatory algebras and their assemblies"};
    app.require_subcommand(1);

    std::string t1, t2, strategy = "lo", model = "LP", file, member, group = "Z", variant = "T";
    std::vector<std::string> vars;
    bool trace = false;
    size_t sampled = 0;

    auto* parse_c = app.add_subcommand("parse", "parse and validate a term");
    parse_c->add_option("term", t1)->required();
    auto* norm_c = app.add_subcommand("normalize", "normalize a term");
    norm_c->add_option("term", t1)->required();
    norm_c->add_option("--strategy", strategy, "lo|ri|random");
    norm_c->add_flag("--trace", trace, "print every step");
    auto* eq_c = app.add_subcommand("eq", "decide equality of two terms");
    eq_c->add_option("lhs", t1)->required();
    eq_c->add_option("rhs", t2)->required();
    auto* abs_c = app.add_subcommand("abstract", "bracket abstraction of a polynomial");
    abs_c->add_option("polynomial", t1)->required();
    abs_c->add_option("--var", vars, "variables, abstracted innermost last")->required();
    auto* ct_c = app.add_subcommand("compile-tensor", "compile a closed tensor term to B, I, Ix, L, P, dot");
    ct_c->add_option("term", t1)->required();
    auto* cps_c = app.add_subcommand("cps", "CPS translation");
    cps_c->add_option("term", t1)->required();
    auto* ceq_c = app.add_subcommand("ceq", "computational equality via CPS");
    ceq_c->add_option("lhs", t1)->required();
    ceq_c->add_option("rhs", t2)->required();
    auto* li_c = app.add_subcommand("left-inverse", "left inverse of a closed planar term");
    li_c->add_option("term", t1)->required();
    auto* cls_c = app.add_subcommand("classify", "candidate-relative classification of a model");
    cls_c->add_option("--model", model, "model name");
    cls_c->add_option("--sampled", sampled, "sampled mode with N tuples");
    auto* ax_c = app.add_subcommand("axioms", "check the axioms of a class in a model");
    ax_c->add_option("--model", model, "model name");
    ax_c->add_option("--file", file, "axioms file instead of the basis");
    ax_c->add_option("--sampled", sampled, "sampled mode with N tuples");
    auto* te_c = app.add_subcommand("tree-eval", "evaluate a tree set expression");
    te_c->add_option("expr", t1)->required();
    te_c->add_option("--group", group, "Z|F2");
    te_c->add_option("--variant", variant, "T|T'|T''|Te");
    te_c->add_option("--member", member, "decide membership of this tree");
    auto* as_c = app.add_subcommand("assembly-suite", "closed-structure realizers on finite assemblies");
    as_c->add_option("--model", model, "LP|Ltensor|LB");
    as_c->add_option("--file", file, "assembly file with X, Y, Z");
    auto* sep_c = app.add_subcommand("separation-suite", "refute candidate combinators");
    sep_c->add_option("--candidates", file, "candidates file");

    for (auto* s : app.get_subcommands({})) add_common(s, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e) == 0 ? kPass : kUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*parse_c) {
            Report r("parse", c);
            Discipline d = discipline_of(c);
            Term t = parse(t1, d);
            ValidationReport v = validate(t, d);
            r.line("term: " + pretty(t));
            r.j["term"] = pretty(t);
            std::string w;
            for (const auto& x : v.violations) {
                r.line("violation at [" + x.position + "]: " + x.rule);
                r.j["violations"].push_back({{"position", x.position}, {"rule", x.rule}});
                if (w.empty()) w = x.rule;
            }
            return r.finish(c, v.ok ? "pass" : "fail", w);
        }
        if (*norm_c) {
            Report r("normalize", c);
            Discipline d = discipline_of(c);
            Strategy s = strategy == "lo"   ? Strategy::lo()
                         : strategy == "ri" ? Strategy::ri()
                         : strategy == "random"
                             ? Strategy::random(c.seed)
                             : throw UsageError("unknown strategy " + strategy);
            TraceFn tf = nullptr;
            if (trace)
                tf = [&r](uint64_t i, Rule rule, const std::string& path) {
                    r.line("step " + std::to_string(i) + ": " + rule_name(rule) + " at [" + path + "]");
                    r.j["trace"].push_back({{"step", i}, {"rule", rule_name(rule)}, {"path", path}});
                };
            auto o = normalize(parse_valid(t1, d), d, c.fuel, s, tf);
            r.line("normal form: " + pretty(o.term));
            r.line("steps: " + std::to_string(o.steps));
            r.j["term"] = pretty(o.term);
            r.j["steps"] = o.steps;
            return r.finish(c, o.normal ? "pass" : "Unknown", o.normal ? "" : "fuel exhausted");
        }
        if (*eq_c) {
            Report r("eq", c);
            Discipline d = discipline_of(c);
            Term a = parse_valid(t1, d), b = parse_valid(t2, d);
            auto na = normalize(a, d, c.fuel), nb = normalize(b, d, c.fuel);
            r.line("lhs: " + pretty(na.term));
            r.line("rhs: " + pretty(nb.term));
            r.j["lhs"] = pretty(na.term);
            r.j["rhs"] = pretty(nb.term);
            return finish_eq(r, c, equal(a, b, d, c.fuel));
        }
        if (*abs_c) {
            Report r("abstract", c);
            Basis b = basis_of(c);
            Comb m = parse_comb(t1);
            try {
                for (size_t k = vars.size(); k-- > 0;) m = abstract_with(b, m, vars[k]);
            } catch (const AbstractionError& e) {
                return r.finish(c, "fail", e.what());
            }
            r.line("result: " + show(m));
            r.j["result"] = show(m);
            return r.finish(c, "pass");
        }
        if (*ct_c) {
            Report r("compile-tensor", c);
            Discipline d = Discipline::planar_tensor().with_eta();
            Term t = parse_valid(t1, d);
            Comb m = compile_tensor(t);
            r.line("compiled: " + show(m));
            r.j["compiled"] = show(m);
            return finish_eq(r, c, equal(expand(m), t, d, c.fuel));
        }
        if (*cps_c) {
            Report r("cps", c);
            Term t = cps_translate(parse_valid(t1, discipline_of(c)));
            r.line("translation: " + pretty(t));
            r.j["translation"] = pretty(t);
            return r.finish(c, "pass");
        }
        if (*ceq_c) {
            Report r("ceq", c);
            Discipline d = discipline_of(c);
            return finish_eq(r, c, computational_eq(parse_valid(t1, d), parse_valid(t2, d), c.fuel));
        }
        if (*li_c) {
            Report r("left-inverse", c);
            Discipline d = Discipline::planar();
            Term m = parse_valid(t1, d);
            Term n = left_inverse(m);
            Term nm = normalize(wb::app(n, m), d, c.fuel).term;
            r.line("left inverse: " + pretty(n));
            r.line("applied: " + pretty(nm));
            r.j["left_inverse"] = pretty(n);
            r.j["applied"] = pretty(nm);
            bool ok = alpha_eq(nm, lam("x", var("x")));
            return r.finish(c, ok ? "pass" : "fail", ok ? "" : pretty(nm));
        }
        if (*cls_c) {
            Report r("classify", c);
            auto a = model_of(model, c);
            ClassReport cr = classify(*a, a->signature(), mode_of(*a, sampled, c));
            r.j["model"] = a->name();
            for (const auto& cl : cr.classes) {
                r.line("class " + cl + " (" + cr.provenance[cl] + ")");
                r.j["classes"].push_back(cl);
            }
            for (const auto& n : cr.notes) {
                r.line("note: " + n);
                r.j["notes"].push_back(n);
            }
            return r.finish(c, "pass");
        }
        if (*ax_c) {
            Report r("axioms", c);
            auto a = model_of(model, c);
            std::vector<Axiom> axs = file.empty() ? class_axioms(basis_of(c)) : parse_axioms(read_file(file));
            CheckMode mode = mode_of(*a, sampled, c);
            r.line(std::string("mode: ") + (mode.kind == CheckMode::FreshConstants ? "fresh constants" : "sampled"));
            bool ok = true, unknown = false;
            std::string w;
            for (const Axiom& ax : axs) {
                AxiomReport ar;
                try {
                    ar = check_axiom(*a, ax, mode);
                } catch (const MissingElement& e) {
                    r.line(ax.name + ": not checked, " + e.what());
                    r.j["axioms"].push_back({{"axiom", ax.name}, {"verdict", "missing"}, {"checked", 0}});
                    if (ok) w = ax.name + ": " + e.what();
                    ok = false;
                    continue;
                }
                r.line(show_report(ar));
                r.j["axioms"].push_back(
                    {{"axiom", ar.axiom}, {"verdict", axiom_verdict_name(ar.verdict)}, {"checked", ar.checked}});
                if (ar.verdict == AxiomVerdict::FailsAt && ok) {
                    ok = false;
                    w = show_report(ar);
                }
                if (ar.verdict == AxiomVerdict::Unknown) unknown = true;
            }
            for (const auto& n : a->notes()) r.line("note: " + n);
            return r.finish(c, !ok ? "fail" : unknown ? "Unknown" : "pass", w);
        }
        if (*te_c) {
            Report r("tree-eval", c);
            std::shared_ptr<const OrderedGroup> g;
            if (group == "Z") g = std::make_shared<IntegerGroup>();
            else if (group == "F2") g = std::make_shared<FreeGroup2>();
            else throw UsageError("unknown group " + group);
            std::unique_ptr<TreeModel> m;
            if (variant == "T") m = tree_model(g, Variant::T, c.bound);
            else if (variant == "T'") m = tree_model(g, Variant::Tprime, c.bound);
            else if (variant == "T''") m = tree_model(g, Variant::Tdoubleprime, c.bound);
            else if (variant == "Te") m = te_model(g, c.bound);
            else throw UsageError("unknown variant " + variant);
            Elem e = eval_set_expr(*m, t1);
            if (!member.empty()) {
                Tree t = parse_tree(*g, member);
                bool in = m->engine().member(*e.trees(), t);
                r.line(show_tree(*g, t) + (in ? " is a member" : " is not a member"));
                return r.finish(c, in ? "pass" : "fail");
            }
            TreeBag ms = m->members(*e.trees());
            r.line(std::to_string(ms.size()) + " members with at most " + std::to_string(c.bound) + " leaves");
            for (const Tree& t : ms) {
                r.line("  " + show_tree(*g, t));
                r.j["members"].push_back(show_tree(*g, t));
            }
            return r.finish(c, "pass");
        }
        if (*as_c) {
            Report r("assembly-suite", c);
            std::unique_ptr<TermModel> m;
            if (model == "LP") m = model_LP();
            else if (model == "Ltensor") m = model_Ltensor();
            else if (model == "LB") m = model_LB();
            else throw UsageError("assembly-suite models: LP, Ltensor, LB");
            FixedAssemblies fx = fixed_assemblies(*m);
            if (!file.empty()) {
                AssemblyFile af = parse_assembly_file(read_file(file), *m);
                if (af.assemblies.size() < 3) throw UsageError("assembly file needs three assemblies");
                fx = {af.assemblies[0], af.assemblies[1], af.assemblies[2]};
            }
            SuiteReport s = closed_structure_suite(*m, fx.x, fx.y, fx.z);
            r.j["model"] = s.structure;
            std::string cls;
            for (const auto& k : s.classes) cls += " " + k;
            r.line("model " + s.structure + ", classes witnessed:" + cls);
            std::string w;
            for (const auto& it : s.items) {
                r.line(std::string(it.ok ? "pass " : "FAIL ") + it.datum + ": " + it.detail);
                r.j["items"].push_back({{"datum", it.datum}, {"verdict", it.ok ? "pass" : "fail"}, {"detail", it.detail}});
                if (!it.ok && w.empty()) w = it.datum + ": " + it.detail;
            }
            auto tp = tree_model(std::make_shared<IntegerGroup>(), Variant::Tprime, c.bound);
            NonModestWitness nm = non_modest_tensor_witness(*tp);
            r.line("non-modest tensor: " + nm.detail);
            r.j["non_modest_tensor"] = nm.detail;
            for (const auto& n : m->notes()) r.line("note: " + n);
            r.line("verified on given instances");
            r.j["scope"] = "verified on given instances";
            bool ok = s.ok() && nm.x_modest && nm.y_modest && !nm.tensor_modest;
            return r.finish(c, ok ? "pass" : "fail", w);
        }
        if (*sep_c) {
            Report r("separation-suite", c);
            auto checks = load_candidates(file.empty() ? default_candidates_path() : file);
            SeparationReport s = run_separation(checks);
            r.line(kSeparationPreamble);
            r.j["scope"] = kSeparationPreamble;
            std::string w;
            for (const auto& x : s.results) {
                std::string l = x.verdict + ": " + x.name;
                if (!x.lhs_nf.empty()) l += "  [" + x.lhs_nf + "  vs  " + x.rhs_nf + "]";
                if (!x.detail.empty()) l += "  " + x.detail;
                r.line(l);
                r.j["checks"].push_back({{"name", x.name},
                                         {"verdict", x.verdict},
                                         {"lhs", x.lhs_nf},
                                         {"rhs", x.rhs_nf},
                                         {"detail", x.detail}});
                if (!x.ok && w.empty()) w = x.name;
            }
            return r.finish(c, s.ok() ? "pass" : "fail", w);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const CombParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
