#include "wb/separation.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wb/rewrite.hpp"

namespace wb {

const char* const kSeparationPreamble =
    "candidate refutations: each check shows that the listed candidates fail one required axiom instance. "
    "They are consistent with the separation theorems and are not proofs that no candidate exists.";

bool SeparationReport::ok() const {
    for (const auto& r : results)
        if (!r.ok) return false;
    return true;
}

size_t SeparationReport::required() const {
    size_t n = 0;
    for (const auto& r : results) n += r.required;
    return n;
}

std::vector<SeparationCheck> parse_candidates(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    std::vector<SeparationCheck> out;
    for (const auto& c : j.at("checks")) {
        SeparationCheck s;
        s.name = c.at("name");
        s.kind = c.value("kind", "refute");
        s.discipline = c.at("discipline");
        s.constants = c.value("constants", std::vector<std::string>{});
        s.eta = c.value("eta", false);
        s.required = c.value("required", false);
        s.bind = c.value("bind", std::map<std::string, std::string>{});
        s.lhs = c.value("lhs", "");
        s.rhs = c.value("rhs", "");
        s.expect_lhs = c.value("expect_lhs", "");
        s.expect_rhs = c.value("expect_rhs", "");
        out.push_back(s);
    }
    return out;
}

std::vector<SeparationCheck> load_candidates(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_candidates(ss.str());
}

std::string default_candidates_path() { return std::string(WB_DATA_DIR) + "/candidates.json"; }

namespace {

std::string fill(std::string s, const std::map<std::string, std::string>& bind) {
    for (const auto& [k, v] : bind) {
        std::string key = "{" + k + "}";
        for (size_t p = s.find(key); p != std::string::npos; p = s.find(key, p + v.size() + 2))
            s.replace(p, key.size(), "(" + v + ")");
    }
    if (s.find('{') != std::string::npos) throw std::runtime_error("unbound placeholder in " + s);
    return s;
}

}  // namespace

SeparationResult run_check(const SeparationCheck& c) {
    SeparationResult r{c.name, c.required, false, "error", "", "", ""};
    try {
        auto d0 = discipline_by_name(c.discipline);
        if (!d0) throw std::runtime_error("unknown discipline " + c.discipline);
        Discipline d = d0->with_constants({c.constants.begin(), c.constants.end()}).with_eta(c.eta);
        if (c.kind == "invalid") {
            for (const auto& [k, v] : c.bind) {
                Term t = parse(v, d);
                ValidationReport vr = validate(t, d);
                if (vr.ok) {
                    r.verdict = "unexpected pass";
                    r.detail = k + " = " + v + " is a valid " + d.name() + " term";
                    return r;
                }
                r.detail += (r.detail.empty() ? "" : "; ") + k + " breaks " + vr.violations.front().rule;
            }
            r.verdict = "rejected";
            r.ok = true;
            return r;
        }
        for (const auto& [k, v] : c.bind) {
            ValidationReport vr = validate(parse(v, d), d);
            if (!vr.ok) throw std::runtime_error(k + " is not a " + d.name() + " term: " + vr.violations.front().rule);
        }
        Term lhs = parse(fill(c.lhs, c.bind), d);
        Term rhs = parse(fill(c.rhs, c.bind), d);
        auto nl = normalize(lhs, d);
        auto nr = normalize(rhs, d);
        r.lhs_nf = pretty(nl.term);
        r.rhs_nf = pretty(nr.term);
        EqVerdict v = equal(lhs, rhs, d);
        if (v == EqVerdict::Equal) {
            r.verdict = "unexpected pass";
            return r;
        }
        if (v == EqVerdict::Unknown) {
            r.verdict = "unknown";
            return r;
        }
        auto matches = [&](const std::string& expect, const Term& got) {
            return expect.empty() || alpha_eq(normalize(parse(expect, d), d).term, got);
        };
        if (!matches(c.expect_lhs, nl.term) || !matches(c.expect_rhs, nr.term)) {
            r.verdict = "mismatch";
            r.detail = "normal forms differ from the expected ones";
            return r;
        }
        r.verdict = "refuted";
        r.ok = true;
    } catch (const std::exception& e) {
        r.verdict = "error";
        r.detail = e.what();
    }
    return r;
}

SeparationReport run_separation(const std::vector<SeparationCheck>& checks) {
    SeparationReport rep;
    for (const auto& c : checks) rep.results.push_back(run_check(c));
    return rep;
}

}  // namespace wb
