#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nring/code.hpp"
#include "nring/ideal.hpp"
#include "nring/indexset.hpp"
#include "nring/polyring.hpp"
#include "nring/realization.hpp"

namespace nring {

enum class RelationKind { T1, T2, T3, T4, T5, T6, T4mod, T5mod, T6mod };

const char* kind_name(RelationKind kind);
std::optional<RelationKind> kind_from_name(std::string_view name);
const std::vector<RelationKind>& all_kinds();

struct RelationParams {
    IndexSet sigma = 0, tau = 0;                      // T1, T2, T3
    IndexSet sigma1 = 0, tau1 = 0, sigma2 = 0, tau2 = 0;  // T4, T4mod
    IndexSet indices = 0;                             // T5/T6 families: {i_1 < ... < i_m}

    friend bool operator==(const RelationParams&, const RelationParams&) = default;
};

bool params_valid(RelationKind kind, const RelationParams& params, int n);
std::string format_params(RelationKind kind, const RelationParams& params);

// Every valid parameter assignment of `kind` on n neurons, index sets
// ascending by bitmask.
std::vector<RelationParams> enumerate_params(RelationKind kind, int n);

// The polynomial on the relation's ideal side; modified kinds share the
// original kind's polynomial.
Polynomial relation_polynomial(RelationKind kind, const RelationParams& params, int n);

enum class RhsStatus { holds, fails, not_applicable };

struct RhsEval {
    RhsStatus status = RhsStatus::holds;
    std::string witness;  // violating point / index set, empty when none
};

// The set-theoretic side, evaluated on a realization.
RhsEval rhs_holds(RelationKind kind, const RelationParams& params, const Realization& r);

struct RelationVerdict {
    RelationKind kind = RelationKind::T1;
    RelationParams params;
    bool in_J = false;
    bool in_I = false;
    RhsStatus rhs = RhsStatus::holds;
    std::string witness;
};

RelationVerdict check_relation(const NeuralCode& code, RelationKind kind,
                               const RelationParams& params, const MembershipOracle& oracle);
RelationVerdict check_relation(const NeuralCode& code, RelationKind kind,
                               const RelationParams& params);

// Verdicts for every valid parameter assignment of each requested kind,
// kinds in enum order.
std::vector<RelationVerdict> scan_relations(const NeuralCode& code,
                                            const std::set<RelationKind>& kinds,
                                            const MembershipOracle& oracle, int cap = 4);

// Sum over odd-size subsets s of [m] of x_s * prod_{j notin s}(1+x_j),
// expanded over m variables. Always equals x_1 + ... + x_m.
Polynomial modified_t5_sum(int m);

// prod_{i<=m}(1+x_i) + sum_{|s|>=2} x_s, expanded. Equals 1 + x_1 + ... + x_m.
Polynomial modified_t6_sum(int m);

// Sum of p_c over C1 = {c : s1 in c, s2 not in c} and C2 symmetric.
// Equals x_{s1} + x_{s2}; requires s1, s2 nonempty and distinct.
Polynomial t4_case1_sum(int n, IndexSet sigma1, IndexSet sigma2);

}  // namespace nring
