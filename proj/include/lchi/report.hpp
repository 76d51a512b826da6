#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace lchi {

/// One verified claim: pass/fail plus the evidence. status is "fail"
/// exactly when witnesses is nonempty; add_claim enforces this.
struct Claim {
    std::string claim_id;
    bool pass = true;
    std::uint64_t checks_run = 0;
    nlohmann::json witnesses = nlohmann::json::array();
    std::string detail;
};

struct VerificationReport {
    std::vector<Claim> claims;
    std::int64_t runtime_ms = 0;
    nlohmann::json config = nlohmann::json::object();

    void add_claim(std::string id, std::uint64_t checks, nlohmann::json witnesses,
                   std::string detail = {}) {
        Claim c;
        c.claim_id = std::move(id);
        c.checks_run = checks;
        c.witnesses = std::move(witnesses);
        c.pass = c.witnesses.empty();
        c.detail = std::move(detail);
        claims.push_back(std::move(c));
    }

    void append(const VerificationReport& other) {
        claims.insert(claims.end(), other.claims.begin(), other.claims.end());
    }

    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json out;
        out["claims"] = nlohmann::json::array();
        for (const auto& c : claims) {
            nlohmann::json j;
            j["claim_id"] = c.claim_id;
            j["status"] = c.pass ? "pass" : "fail";
            j["checks_run"] = c.checks_run;
            j["witnesses"] = c.witnesses;
            j["detail"] = c.detail;
            out["claims"].push_back(std::move(j));
        }
        out["runtime_ms"] = runtime_ms;
        out["config"] = config;
        return out;
    }
};

} // namespace lchi
