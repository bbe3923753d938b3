#include "nring/report.hpp"

namespace nring {

namespace {

nlohmann::ordered_json rhs_json(RhsStatus status) {
    switch (status) {
        case RhsStatus::holds: return true;
        case RhsStatus::fails: return false;
        default: return nullptr;
    }
}

const char* rhs_mark(RhsStatus status) {
    switch (status) {
        case RhsStatus::holds: return "1";
        case RhsStatus::fails: return "0";
        default: return "na";
    }
}

}  // namespace

nlohmann::ordered_json to_json(const RelationVerdict& verdict) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(verdict.kind);
    j["params"] = format_params(verdict.kind, verdict.params);
    j["in_J"] = verdict.in_J;
    j["in_I"] = verdict.in_I;
    j["rhs"] = rhs_json(verdict.rhs);
    j["witness"] = verdict.witness.empty() ? nlohmann::ordered_json(nullptr)
                                           : nlohmann::ordered_json(verdict.witness);
    return j;
}

nlohmann::ordered_json to_json(const std::vector<RelationVerdict>& verdicts) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const RelationVerdict& v : verdicts) out.push_back(to_json(v));
    return out;
}

nlohmann::ordered_json to_json(const Counterexample& ce) {
    nlohmann::ordered_json j;
    j["code"] = ce.code;
    j["kind"] = ce.kind;
    j["params"] = ce.params;
    j["in_J"] = ce.in_J;
    j["in_I"] = ce.in_I;
    j["rhs"] = ce.rhs;
    j["witness"] = ce.witness.empty() ? nlohmann::ordered_json(nullptr)
                                      : nlohmann::ordered_json(ce.witness);
    j["note"] = ce.note;
    return j;
}

nlohmann::ordered_json to_json(const Claim& claim) {
    nlohmann::ordered_json j;
    j["id"] = claim.id;
    j["universe"] = claim.universe;
    j["status"] = claim_status_name(claim.status);
    j["codes_checked"] = claim.codes_checked;
    j["params_checked"] = claim.params_checked;
    nlohmann::ordered_json ces = nlohmann::ordered_json::array();
    for (const Counterexample& ce : claim.counterexamples) ces.push_back(to_json(ce));
    j["counterexamples"] = ces;
    return j;
}

nlohmann::ordered_json to_json(const std::vector<Claim>& claims) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Claim& c : claims) out.push_back(to_json(c));
    return out;
}

std::string format_text(const RelationVerdict& verdict) {
    std::string out = std::string(kind_name(verdict.kind)) + " " +
                      format_params(verdict.kind, verdict.params) + ": J=" +
                      (verdict.in_J ? "1" : "0") + " I=" + (verdict.in_I ? "1" : "0") +
                      " RHS=" + rhs_mark(verdict.rhs);
    if (!verdict.witness.empty()) out += " witness[" + verdict.witness + "]";
    return out;
}

std::string format_text(const Claim& claim) {
    std::string out = claim.id + ": " + claim_status_name(claim.status) + " (codes=" +
                      std::to_string(claim.codes_checked) + ", params=" +
                      std::to_string(claim.params_checked) + ")";
    for (const Counterexample& ce : claim.counterexamples)
        out += "\n  counterexample C={" + ce.code + "} " + ce.kind + " " + ce.params +
               ": J=" + (ce.in_J ? "1" : "0") + " I=" + (ce.in_I ? "1" : "0") + " RHS=" + ce.rhs +
               (ce.witness.empty() ? "" : " witness[" + ce.witness + "]") +
               (ce.note.empty() ? "" : " (" + ce.note + ")");
    return out;
}

}  // namespace nring
