#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nring/relations.hpp"
#include "nring/verify.hpp"

namespace nring {

// Stable field names and key order; rhs is true/false/null (not applicable).
nlohmann::ordered_json to_json(const RelationVerdict& verdict);
nlohmann::ordered_json to_json(const std::vector<RelationVerdict>& verdicts);
nlohmann::ordered_json to_json(const Counterexample& ce);
nlohmann::ordered_json to_json(const Claim& claim);
nlohmann::ordered_json to_json(const std::vector<Claim>& claims);

// "T1 σ={1,2}: J=1 I=1 RHS=1"
std::string format_text(const RelationVerdict& verdict);
// "thm-3.3-t5: pass (codes=273, params=1020)"
std::string format_text(const Claim& claim);

}  // namespace nring
