#include "nring/verify.hpp"

#include <algorithm>

namespace nring {

namespace {

constexpr std::size_t kMaxStoredCounterexamples = 10;

std::string rhs_text(RhsStatus s) {
    switch (s) {
        case RhsStatus::holds: return "true";
        case RhsStatus::fails: return "false";
        default: return "na";
    }
}

struct Instance {
    bool in_J = false;
    bool in_I = false;
    RhsStatus rhs = RhsStatus::holds;
};

struct SweepSpec {
    std::vector<RelationKind> kinds;
    std::vector<int> levels;   // exhaustive code levels
    bool include_n4 = false;   // sampled (or exhaustive on request) level 4
    bool need_j = true;
    bool need_i = true;
};

std::string levels_text(const SweepSpec& spec, const VerifyOptions& opts) {
    std::string out;
    if (!spec.levels.empty()) {
        out += "exhaustive n=";
        for (std::size_t k = 0; k < spec.levels.size(); ++k) {
            if (k) out += ",";
            out += std::to_string(spec.levels[k]);
        }
    }
    if (spec.include_n4) {
        if (!out.empty()) out += "; ";
        out += opts.exhaustive_n4
                   ? "exhaustive n=4"
                   : "sampled n=4 (" + std::to_string(opts.sample) + " codes, seed " +
                         std::to_string(opts.seed) + ")";
    }
    return out.empty() ? "empty sweep" : out;
}

Claim run_sweep(std::string id, std::string universe, const SweepSpec& spec,
                bool (*ok)(const Instance&), const MembershipOracle& oracle,
                const VerifyOptions& opts) {
    Claim claim;
    claim.id = std::move(id);
    claim.universe = std::move(universe);

    struct KindSlice {
        RelationKind kind;
        std::vector<RelationParams> params;
        std::vector<Polynomial> polys;
    };

    // the parameter space and polynomials depend only on (kind, n)
    auto slices_for = [&](int n) {
        std::vector<KindSlice> slices;
        for (RelationKind kind : spec.kinds) {
            KindSlice slice{kind, enumerate_params(kind, n), {}};
            slice.polys.reserve(slice.params.size());
            for (const RelationParams& params : slice.params)
                slice.polys.push_back(relation_polynomial(kind, params, n));
            slices.push_back(std::move(slice));
        }
        return slices;
    };

    auto process_code = [&](const std::vector<KindSlice>& slices, const NeuralCode& code) {
        ++claim.codes_checked;
        Realization r = realize(code);
        for (const KindSlice& slice : slices) {
            for (std::size_t k = 0; k < slice.params.size(); ++k) {
                ++claim.params_checked;
                const Polynomial& f = slice.polys[k];
                Instance inst;
                RhsEval rhs = rhs_holds(slice.kind, slice.params[k], r);
                inst.rhs = rhs.status;
                if (spec.need_j) inst.in_J = oracle.in_J(f, code);
                if (spec.need_i) inst.in_I = oracle.in_I(f, code);
                if (ok(inst)) continue;
                claim.status = ClaimStatus::fail;
                if (claim.counterexamples.size() >= kMaxStoredCounterexamples) continue;
                Counterexample ce;
                ce.code = format_code(code);
                ce.kind = kind_name(slice.kind);
                ce.params = format_params(slice.kind, slice.params[k]);
                ce.in_J = spec.need_j ? inst.in_J : oracle.in_J(f, code);
                ce.in_I = spec.need_i ? inst.in_I : oracle.in_I(f, code);
                ce.rhs = rhs_text(inst.rhs);
                ce.witness = rhs.witness;
                claim.counterexamples.push_back(std::move(ce));
            }
        }
    };

    try {
        for (int level : spec.levels) {
            auto slices = slices_for(level);
            CodeEnumerator stream(level, false, level);
            while (auto code = stream.next()) process_code(slices, *code);
        }
        if (spec.include_n4) {
            auto slices = slices_for(4);
            if (opts.exhaustive_n4) {
                CodeEnumerator stream(4, false, 4);
                while (auto code = stream.next()) process_code(slices, *code);
            } else {
                for (const NeuralCode& code : sample_codes(4, opts.sample, opts.seed))
                    process_code(slices, code);
            }
        }
    } catch (const UndecidedError&) {
        claim.status = ClaimStatus::undecided;
    }
    return claim;
}

bool rhs_true(const Instance& i) { return i.rhs == RhsStatus::holds; }

bool pred_iff_both(const Instance& i) {
    return i.in_J == rhs_true(i) && i.in_I == rhs_true(i);
}
bool pred_forward_j(const Instance& i) { return !i.in_J || rhs_true(i); }
bool pred_converse_j(const Instance& i) { return !rhs_true(i) || i.in_J; }
bool pred_iff_j(const Instance& i) {
    return i.rhs == RhsStatus::not_applicable || i.in_J == rhs_true(i);
}
bool pred_iff_i(const Instance& i) {
    return i.rhs == RhsStatus::not_applicable || i.in_I == rhs_true(i);
}
bool pred_j_equals_i(const Instance& i) {
    return i.rhs == RhsStatus::not_applicable || i.in_J == i.in_I;
}

MembershipOracle make_oracle(const VerifyOptions& opts) {
    return MembershipOracle(opts.order, opts.budget, opts.negate_j, opts.negate_i);
}

std::vector<int> capped_levels(const VerifyOptions& opts, int cap) {
    std::vector<int> out;
    for (int level = 1; level <= std::min(opts.n, cap); ++level) out.push_back(level);
    return out;
}

struct EquivalenceDesc {
    const char* id;
    std::vector<RelationKind> kinds;
    bool (*pred)(const Instance&);
    bool need_j;
    bool need_i;
    bool extends_to_n4;  // modified kinds take part in the n=4 sample
    const char* what;
};

const std::vector<EquivalenceDesc>& equivalence_table() {
    static const std::vector<EquivalenceDesc> table = {
        {"prop-2.5-t1", {RelationKind::T1}, pred_iff_both, true, true, false,
         "x_sigma membership (J and I) iff U_sigma is empty"},
        {"prop-2.5-t2", {RelationKind::T2}, pred_iff_both, true, true, false,
         "pseudo-monomial membership (J and I) iff U_sigma lies in the union over tau"},
        {"prop-2.5-t3", {RelationKind::T3}, pred_iff_both, true, true, false,
         "product membership (J and I) iff the tau fields cover X"},
        {"prop-2.6-t4", {RelationKind::T4}, pred_forward_j, true, false, false,
         "sum in J_C implies the two regions coincide"},
        {"prop-2.6-t5", {RelationKind::T5}, pred_forward_j, true, false, false,
         "x_{i1}+..+x_{im} in J_C implies the covering conditions"},
        {"prop-2.6-t6", {RelationKind::T6}, pred_forward_j, true, false, false,
         "x_{i1}+..+x_{im}+1 in J_C implies the fields cover X"},
        {"thm-4.1-t4mod", {RelationKind::T4mod}, pred_iff_j, true, false, true,
         "modified Type 4 is an equivalence at J_C"},
        {"thm-4.1-t5mod", {RelationKind::T5mod}, pred_iff_j, true, false, true,
         "modified Type 5 is an equivalence at J_C"},
        {"thm-4.1-t6mod", {RelationKind::T6mod}, pred_iff_j, true, false, true,
         "modified Type 6 is an equivalence at J_C on pairwise disjoint instances"},
        {"thm-4.2-t4mod", {RelationKind::T4mod}, pred_iff_i, false, true, true,
         "modified Type 4 is an equivalence at I(C)"},
        {"thm-4.2-t5mod", {RelationKind::T5mod}, pred_iff_i, false, true, true,
         "modified Type 5 is an equivalence at I(C)"},
        {"thm-4.2-t6mod", {RelationKind::T6mod}, pred_iff_i, false, true, true,
         "modified Type 6 is an equivalence at I(C) on pairwise disjoint instances"},
        {"cor-4.3",
         {RelationKind::T4mod, RelationKind::T5mod, RelationKind::T6mod},
         pred_j_equals_i, true, true, true,
         "the modified relations read the same from J_C and I(C)"},
        {"cor-4.4", {RelationKind::T4}, pred_iff_i, false, true, false,
         "original Type 4 is an equivalence at I(C), overlaps included"},
    };
    return table;
}

Claim run_equivalence(const EquivalenceDesc& desc, std::vector<int> levels, bool include_n4,
                      const MembershipOracle& oracle, const VerifyOptions& opts) {
    SweepSpec spec;
    spec.kinds = desc.kinds;
    spec.levels = std::move(levels);
    spec.include_n4 = include_n4 && desc.extends_to_n4;
    spec.need_j = desc.need_j;
    spec.need_i = desc.need_i;
    return run_sweep(desc.id, std::string(desc.what) + " [" + levels_text(spec, opts) + "]",
                     spec, desc.pred, oracle, opts);
}

Claim counterexample_claim(const std::string& id, const NeuralCode& code, RelationKind kind,
                           const RelationParams& params, std::optional<bool> expect_j,
                           std::optional<bool> expect_i, std::optional<RhsStatus> expect_rhs,
                           std::string universe, const MembershipOracle& oracle) {
    Claim claim;
    claim.id = id;
    claim.universe = std::move(universe);
    claim.codes_checked = 1;
    claim.params_checked = 1;
    try {
        RelationVerdict v = check_relation(code, kind, params, oracle);
        bool ok = (!expect_j || v.in_J == *expect_j) && (!expect_i || v.in_I == *expect_i) &&
                  (!expect_rhs || v.rhs == *expect_rhs);
        if (!ok) {
            claim.status = ClaimStatus::fail;
            Counterexample ce;
            ce.code = format_code(code);
            ce.kind = kind_name(kind);
            ce.params = format_params(kind, params);
            ce.in_J = v.in_J;
            ce.in_I = v.in_I;
            ce.rhs = rhs_text(v.rhs);
            ce.witness = v.witness;
            std::string expected;
            if (expect_j) expected += std::string(" J=") + (*expect_j ? "1" : "0");
            if (expect_i) expected += std::string(" I=") + (*expect_i ? "1" : "0");
            if (expect_rhs) expected += " RHS=" + rhs_text(*expect_rhs);
            ce.note = "expected" + expected;
            claim.counterexamples.push_back(std::move(ce));
        }
    } catch (const UndecidedError&) {
        claim.status = ClaimStatus::undecided;
    }
    return claim;
}

std::vector<Claim> counterexample_claims(const MembershipOracle& oracle) {
    std::vector<Claim> out;

    NeuralCode t4_code = parse_code("e,1,2,12", 2);
    RelationParams t4_params{.sigma1 = singleton(1), .tau1 = singleton(1),
                             .sigma2 = singleton(2), .tau2 = singleton(2)};
    out.push_back(counterexample_claim(
        "thm-3.2-t4", t4_code, RelationKind::T4, t4_params, false, true, RhsStatus::holds,
        "C={00,10,01,11}: both regions empty, x1(1+x1)+x2(1+x2) outside J_C yet inside I(C)",
        oracle));

    NeuralCode t5_even = parse_code("e,12,13,14,123", 4);
    out.push_back(counterexample_claim(
        "lem-3.1-t5-even", t5_even, RelationKind::T5, RelationParams{.indices = full_set(4)},
        false, false, RhsStatus::holds,
        "C={e,12,13,14,123}, m=4: covering holds, x1+x2+x3+x4 outside I(C) and J_C", oracle));

    NeuralCode t5_odd = parse_code("e,12,13,14,123,145", 5);
    out.push_back(counterexample_claim(
        "lem-3.1-t5-odd", t5_odd, RelationKind::T5, RelationParams{.indices = full_set(5)},
        false, false, RhsStatus::holds,
        "C'={e,12,13,14,123,145}, m=5: covering and empty intersection hold, x1+..+x5 outside "
        "I(C') and J_C'",
        oracle));

    NeuralCode t6_code = parse_code("1,2,12", 2);
    out.push_back(counterexample_claim(
        "lem-3.1-t6", t6_code, RelationKind::T6, RelationParams{.indices = full_set(2)}, false,
        false, RhsStatus::holds, "C={10,01,11}: U1 and U2 cover X, x1+x2+1 outside I(C) and J_C",
        oracle));

    out.push_back(counterexample_claim(
        "sec-3-t4-in-i", t4_code, RelationKind::T4, t4_params, std::nullopt, true, std::nullopt,
        "C={00,10,01,11}: the same sum x1(1+x1)+x2(1+x2) lies in I(C)", oracle));

    return out;
}

Claim small_n_claim(std::string_view claim_id, const MembershipOracle& oracle,
                    const VerifyOptions& opts) {
    if (claim_id == "thm-3.3-t4") {
        SweepSpec spec{{RelationKind::T4}, {1}, false, true, false};
        return run_sweep("thm-3.3-t4",
                         "all 3 nonempty codes on n=1, all 16 parameter tuples (overlaps "
                         "included): equal regions force the sum into J_C",
                         spec, pred_converse_j, oracle, opts);
    }
    if (claim_id == "thm-3.3-t5") {
        SweepSpec spec{{RelationKind::T5}, {1, 2, 3}, false, true, false};
        return run_sweep("thm-3.3-t5",
                         "all nonempty codes on n<=3 (3+15+255), every index tuple with m>=2: "
                         "the covering conditions force the sum into J_C",
                         spec, pred_converse_j, oracle, opts);
    }
    if (claim_id == "thm-3.3-t6") {
        SweepSpec spec{{RelationKind::T6}, {1}, false, true, false};
        return run_sweep("thm-3.3-t6",
                         "n=1 admits no m>=2 index tuples; the sweep is empty and the claim "
                         "vacuously holds",
                         spec, pred_converse_j, oracle, opts);
    }
    throw CodeError("unknown claim id: " + std::string(claim_id));
}

Claim bitflip_claim_level(int n, const MembershipOracle& oracle, const VerifyOptions& opts) {
    Claim claim;
    claim.id = "bitflip-ideal";
    claim.universe = "all nonempty codes on n=" + std::to_string(n) +
                     ", every coordinate i: reduced bases of delta_i(J_C) and J_{delta_i(C)} "
                     "coincide";
    try {
        CodeEnumerator stream(n, false, n);
        while (auto code = stream.next()) {
            ++claim.codes_checked;
            IdealPresentation gens = neural_ideal_generators(*code);
            for (int i = 1; i <= n; ++i) {
                ++claim.params_checked;
                IdealPresentation flipped;
                flipped.n = gens.n;
                for (const Polynomial& g : gens.generators)
                    flipped.generators.push_back(bitflip_poly(g, i));
                GroebnerBasis lhs = buchberger(flipped, opts.order, opts.budget);
                const GroebnerBasis& rhs = oracle.groebner(bitflip_code(*code, i));
                if (lhs.basis == rhs.basis) continue;
                claim.status = ClaimStatus::fail;
                if (claim.counterexamples.size() >= kMaxStoredCounterexamples) continue;
                Counterexample ce;
                ce.code = format_code(*code);
                ce.kind = "bitflip";
                ce.params = "i=" + std::to_string(i);
                ce.rhs = "false";
                ce.note = "reduced bases differ";
                claim.counterexamples.push_back(std::move(ce));
            }
        }
    } catch (const UndecidedError&) {
        claim.status = ClaimStatus::undecided;
    }
    return claim;
}

void merge_into(Claim& merged, const Claim& part) {
    merged.codes_checked += part.codes_checked;
    merged.params_checked += part.params_checked;
    if (part.status == ClaimStatus::fail)
        merged.status = ClaimStatus::fail;
    else if (part.status == ClaimStatus::undecided && merged.status == ClaimStatus::pass)
        merged.status = ClaimStatus::undecided;
    for (const Counterexample& ce : part.counterexamples)
        if (merged.counterexamples.size() < kMaxStoredCounterexamples)
            merged.counterexamples.push_back(ce);
}

Claim bitflip_claim(const MembershipOracle& oracle, const VerifyOptions& opts) {
    std::vector<int> levels = capped_levels(opts, 3);
    Claim merged = bitflip_claim_level(levels.front(), oracle, opts);
    for (std::size_t k = 1; k < levels.size(); ++k)
        merge_into(merged, bitflip_claim_level(levels[k], oracle, opts));
    merged.universe = "all nonempty codes on n<=" + std::to_string(levels.back()) +
                      ", every coordinate i: reduced bases of delta_i(J_C) and J_{delta_i(C)} "
                      "coincide";
    return merged;
}

}  // namespace

const char* claim_status_name(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        default: return "undecided";
    }
}

std::vector<Claim> verify_counterexamples(const VerifyOptions& opts) {
    MembershipOracle oracle = make_oracle(opts);
    return counterexample_claims(oracle);
}

Claim verify_small_n(std::string_view claim_id, const VerifyOptions& opts) {
    MembershipOracle oracle = make_oracle(opts);
    return small_n_claim(claim_id, oracle, opts);
}

std::vector<Claim> verify_equivalences(int n, const VerifyOptions& opts) {
    MembershipOracle oracle = make_oracle(opts);
    std::vector<int> levels;
    bool include_n4 = false;
    if (n <= 3)
        levels = {n};
    else if (n == 4)
        include_n4 = true;
    else
        throw CodeError("equivalence sweeps support n <= 4");
    std::vector<Claim> out;
    for (const EquivalenceDesc& desc : equivalence_table()) {
        // the forward-only claims have no iff content; they stay at n <= 3
        if (include_n4 && desc.pred == pred_forward_j) continue;
        SweepSpec probe;
        probe.kinds = desc.kinds;
        probe.levels = levels;
        probe.include_n4 = include_n4;
        probe.need_j = desc.need_j;
        probe.need_i = desc.need_i;
        out.push_back(run_sweep(desc.id,
                                std::string(desc.what) + " [" + levels_text(probe, opts) + "]",
                                probe, desc.pred, oracle, opts));
    }
    return out;
}

Claim verify_bitflip_ideal(int n, const VerifyOptions& opts) {
    if (n > 3) throw CodeError("bit-flip sweep supports n <= 3");
    MembershipOracle oracle = make_oracle(opts);
    return bitflip_claim_level(n, oracle, opts);
}

std::vector<std::string> claim_ids() {
    std::vector<std::string> out = {"thm-3.2-t4", "lem-3.1-t5-even", "lem-3.1-t5-odd",
                                    "lem-3.1-t6", "sec-3-t4-in-i",   "thm-3.3-t4",
                                    "thm-3.3-t5", "thm-3.3-t6"};
    for (const EquivalenceDesc& desc : equivalence_table()) out.emplace_back(desc.id);
    out.emplace_back("bitflip-ideal");
    return out;
}

Claim run_claim(std::string_view id, const VerifyOptions& opts) {
    MembershipOracle oracle = make_oracle(opts);
    const char* counterexample_ids[] = {"thm-3.2-t4", "lem-3.1-t5-even", "lem-3.1-t5-odd",
                                        "lem-3.1-t6", "sec-3-t4-in-i"};
    for (std::size_t k = 0; k < std::size(counterexample_ids); ++k)
        if (id == counterexample_ids[k]) return counterexample_claims(oracle)[k];
    if (id == "thm-3.3-t4" || id == "thm-3.3-t5" || id == "thm-3.3-t6")
        return small_n_claim(id, oracle, opts);
    for (const EquivalenceDesc& desc : equivalence_table())
        if (id == desc.id)
            return run_equivalence(desc, capped_levels(opts, 3), opts.n >= 4, oracle, opts);
    if (id == "bitflip-ideal") return bitflip_claim(oracle, opts);
    throw CodeError("unknown claim id: " + std::string(id));
}

std::vector<Claim> run_all_claims(const VerifyOptions& opts) {
    MembershipOracle oracle = make_oracle(opts);
    std::vector<Claim> out = counterexample_claims(oracle);
    for (const char* id : {"thm-3.3-t4", "thm-3.3-t5", "thm-3.3-t6"})
        out.push_back(small_n_claim(id, oracle, opts));
    for (const EquivalenceDesc& desc : equivalence_table())
        out.push_back(run_equivalence(desc, capped_levels(opts, 3), opts.n >= 4, oracle, opts));
    out.push_back(bitflip_claim(oracle, opts));
    return out;
}

}  // namespace nring
