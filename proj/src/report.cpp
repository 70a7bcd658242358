#include "parkstat/report.hpp"

#include <json.hpp>
#include <sstream>

namespace parkstat {

namespace {

const char* status_name(Report::Status s) {
    switch (s) {
        case Report::Status::pass:
            return "pass";
        case Report::Status::fail:
            return "fail";
        case Report::Status::precondition:
            return "precondition";
    }
    return "?";
}

}  // namespace

std::string Report::to_json() const {
    nlohmann::json j;
    j["identity"] = identity;
    j["n"] = n;
    j["status"] = status_name(status);
    if (first_mismatch) {
        j["first_mismatch"] = *first_mismatch;
        for (const auto& it : items) {
            if (it.pass) continue;
            if (!it.lhs.empty()) j["lhs"] = it.lhs;
            if (!it.rhs.empty()) j["rhs"] = it.rhs;
            break;
        }
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& it : items) {
        nlohmann::json ji;
        ji["label"] = it.label;
        ji["status"] = it.pass ? "pass" : "fail";
        if (!it.lhs.empty()) ji["lhs"] = it.lhs;
        if (!it.rhs.empty()) ji["rhs"] = it.rhs;
        arr.push_back(ji);
    }
    j["checks"] = arr;
    return j.dump();
}

std::string Report::summary() const {
    std::ostringstream os;
    os << identity << " (n=" << n << "): " << status_name(status);
    if (first_mismatch) os << " at " << *first_mismatch;
    os << " [" << items.size() << " checks]";
    return os.str();
}

}  // namespace parkstat
