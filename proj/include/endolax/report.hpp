#pragma once

// Identity verification reports. Wire format (one object per identity):
//   {"identity": str, "paper_ref": str, "status": "pass"|"fail", "witness"?: str}
// where paper_ref carries the formula being checked.

#include <string>
#include <vector>

#include "json.hpp"

namespace endolax {

struct IdentityCheck {
    std::string identity;   // stable id, e.g. "structural:trace-chi"
    std::string statement;  // the formula, e.g. "Tr A = chi(J)"
    bool pass = false;
    std::string witness;    // nonzero components or failure context
};

struct VerificationReport {
    std::vector<IdentityCheck> checks;

    void add(std::string identity, std::string statement, bool pass, std::string witness = "") {
        checks.push_back({std::move(identity), std::move(statement), pass, std::move(witness)});
    }

    void append(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json item;
            item["identity"] = c.identity;
            item["paper_ref"] = c.statement;
            item["status"] = c.pass ? "pass" : "fail";
            if (!c.witness.empty()) item["witness"] = c.witness;
            arr.push_back(std::move(item));
        }
        return arr;
    }
};

}  // namespace endolax
