#pragma once

#include <string>
#include <vector>

#include "parkstat/report.hpp"

namespace parkstat {

struct VerifyOptions {
    int max_n = 5;          // cap for exhaustive sweeps
    int N = 6;              // series truncation
    int table_n = 0;        // 0 = run n in 2..min(max_n,5); else that single n
    bool extended = false;  // adds the n=6 parking-function sweeps
    bool corrupt = false;   // run with deliberately corrupted inputs (must fail)
};

struct SuiteResult {
    std::string suite;
    std::vector<Report> reports;

    bool ok() const {
        for (const auto& r : reports)
            if (!r.ok()) return false;
        return !reports.empty();
    }
    std::string to_json() const;
    std::string to_text() const;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

// one id per specified operation; used by the coverage assertion
const std::vector<std::string>& op_catalog();
std::vector<std::string> ops_covered(const std::string& suite);

}  // namespace parkstat
