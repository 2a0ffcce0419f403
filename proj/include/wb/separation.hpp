#pragma once

#include <map>
#include <string>
#include <vector>

#include "wb/term.hpp"

namespace wb {

// One axiom instance that a candidate combinator must satisfy.  `{NAME}` in
// lhs and rhs is replaced by the parenthesized text bound to NAME.
struct SeparationCheck {
    std::string name;
    std::string kind = "refute";   // or "invalid": the term must break the discipline
    std::string discipline;
    std::vector<std::string> constants;
    bool eta = false;
    bool required = false;
    std::map<std::string, std::string> bind;
    std::string lhs, rhs;
    std::string expect_lhs, expect_rhs;   // expected normal forms, empty to skip
};

struct SeparationResult {
    std::string name;
    bool required = false;
    bool ok = false;
    std::string verdict;   // refuted, rejected, unexpected pass, unknown, mismatch, error
    std::string lhs_nf, rhs_nf;
    std::string detail;
};

struct SeparationReport {
    std::vector<SeparationResult> results;
    bool ok() const;
    size_t required() const;
};

extern const char* const kSeparationPreamble;

std::vector<SeparationCheck> parse_candidates(const std::string& json_text);
std::vector<SeparationCheck> load_candidates(const std::string& path);
std::string default_candidates_path();
SeparationResult run_check(const SeparationCheck& c);
SeparationReport run_separation(const std::vector<SeparationCheck>& checks);

}  // namespace wb
