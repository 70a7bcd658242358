#pragma once

#include <optional>
#include <string>
#include <vector>

namespace parkstat {

// Outcome of one verified identity or suite of assertions. `precondition`
// marks a violated hypothesis (e.g. a non-S_n-invariant family), which is
// distinct from a falsified identity.
struct Report {
    enum class Status { pass, fail, precondition };

    struct Item {
        std::string label;
        bool pass = true;
        std::string lhs;
        std::string rhs;
    };

    std::string identity;
    int n = 0;  // the n or truncation N the run used
    Status status = Status::pass;
    std::vector<Item> items;
    std::optional<std::string> first_mismatch;

    Report() = default;
    Report(std::string id, int n_) : identity(std::move(id)), n(n_) {}

    bool ok() const { return status == Status::pass; }

    void check(const std::string& label, bool pass, const std::string& lhs = "",
               const std::string& rhs = "") {
        items.push_back({label, pass, lhs, rhs});
        if (!pass && status == Status::pass) {
            status = Status::fail;
            if (!first_mismatch) first_mismatch = label;
        }
    }

    void fail_precondition(const std::string& label) {
        items.push_back({label, false, "", ""});
        status = Status::precondition;
        if (!first_mismatch) first_mismatch = label;
    }

    std::string to_json() const;
    std::string summary() const;
};

}  // namespace parkstat
