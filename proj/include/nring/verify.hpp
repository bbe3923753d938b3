#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nring/ideal.hpp"
#include "nring/relations.hpp"

namespace nring {

enum class ClaimStatus { pass, fail, undecided };

const char* claim_status_name(ClaimStatus status);

// One instance that violated a claim's predicate, with enough context to
// replay it through check_relation.
struct Counterexample {
    std::string code;    // canonical binary text
    std::string kind;    // relation kind or claim-specific label
    std::string params;  // canonical parameter text
    bool in_J = false;
    bool in_I = false;
    std::string rhs;      // "true", "false", or "na"
    std::string witness;  // violating point / subset reported by the set side
    std::string note;
};

struct Claim {
    std::string id;
    std::string universe;
    ClaimStatus status = ClaimStatus::pass;
    std::vector<Counterexample> counterexamples;
    std::uint64_t codes_checked = 0;
    std::uint64_t params_checked = 0;
};

struct VerifyOptions {
    int n = 3;                   // highest code level swept (claims cap themselves)
    std::size_t sample = 1000;   // sampled codes at n=4
    std::uint64_t seed = 1;
    bool exhaustive_n4 = false;  // sweep all 65535 codes at n=4 instead of sampling
    MonomialOrder order = MonomialOrder::grevlex();
    BuchbergerBudget budget;
    // mutation hooks: flip membership answers for one or both ideals; a
    // joint flip cannot disturb a pure J-vs-I comparison, so the sensitivity
    // test also exercises the single-sided flips
    bool negate_j = false;
    bool negate_i = false;
};

// The five fixed counterexample reproductions: thm-3.2-t4, lem-3.1-t5-even,
// lem-3.1-t5-odd, lem-3.1-t6, sec-3-t4-in-i.
std::vector<Claim> verify_counterexamples(const VerifyOptions& opts = {});

// claim_id in {thm-3.3-t4, thm-3.3-t5, thm-3.3-t6}; universes fixed by the
// statement (t4 and t6 at n=1, t5 at n <= 3).
Claim verify_small_n(std::string_view claim_id, const VerifyOptions& opts = {});

// The iff claims at a single level n: prop-2.5-*, prop-2.6-*, thm-4.1-*,
// thm-4.2-*, cor-4.3, cor-4.4. n <= 3 sweeps exhaustively; n = 4 samples
// (or sweeps fully with exhaustive_n4).
std::vector<Claim> verify_equivalences(int n, const VerifyOptions& opts = {});

// delta_i(J_C) = J_{delta_i(C)} via reduced-basis equality, all codes at
// level n, every coordinate.
Claim verify_bitflip_ideal(int n, const VerifyOptions& opts = {});

// Registry used by the CLI: stable ids, each aggregating its full universe
// under the given options.
std::vector<std::string> claim_ids();
Claim run_claim(std::string_view id, const VerifyOptions& opts = {});
std::vector<Claim> run_all_claims(const VerifyOptions& opts = {});

}  // namespace nring
