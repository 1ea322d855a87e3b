#pragma once

#include "flagcoh/serialize.hpp"

#include <string>
#include <vector>

namespace flagcoh {

/// Outcome of one acceptance criterion. Every failed case adds an entry to
/// diff with the case name and the expected and actual values.
struct CriterionResult {
    int id = 0;
    std::string title;
    long cases = 0;
    json diff = json::array();

    bool passed() const { return diff.empty(); }
    void check(bool ok, const std::string& name, json expected, json actual);
};

struct VerifyReport {
    int max_rank = 4;
    std::vector<CriterionResult> criteria;

    bool passed() const;
};

/// Simple types of rank at most max_rank in the order A, B, C, D, E, F, G
/// and then by rank; B starts at 2, C at 3 and D at 4.
std::vector<CartanType> sweep_types(int max_rank);

CriterionResult check_borel_schubert(int max_rank);
CriterionResult check_generation(int max_rank);
CriterionResult check_negative_control();
CriterionResult check_example_suite();
CriterionResult check_weyl_orders(int max_rank);
CriterionResult check_properties(int max_rank);

VerifyReport run_verify_all(int max_rank);

/// 0 when every criterion passed, 1 otherwise.
int exit_code(const VerifyReport& report);

json to_json(const CriterionResult& c);
json to_json(const VerifyReport& r);

/// One line per criterion, followed by the diff of each failing one.
std::string to_text(const VerifyReport& r);

}  // namespace flagcoh
