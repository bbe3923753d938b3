#include "nring/relations.hpp"

#include <algorithm>
#include <array>

namespace nring {

namespace {

constexpr std::array<RelationKind, 9> kAllKinds = {
    RelationKind::T1,    RelationKind::T2,    RelationKind::T3,
    RelationKind::T4,    RelationKind::T5,    RelationKind::T6,
    RelationKind::T4mod, RelationKind::T5mod, RelationKind::T6mod};

constexpr std::array<const char*, 9> kKindNames = {"T1", "T2", "T3",    "T4",    "T5",
                                                   "T6", "T4mod", "T5mod", "T6mod"};

}  // namespace

const char* kind_name(RelationKind kind) {
    return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<RelationKind> kind_from_name(std::string_view name) {
    for (std::size_t k = 0; k < kKindNames.size(); ++k)
        if (name == kKindNames[k]) return kAllKinds[k];
    return std::nullopt;
}

const std::vector<RelationKind>& all_kinds() {
    static const std::vector<RelationKind> kinds(kAllKinds.begin(), kAllKinds.end());
    return kinds;
}

bool params_valid(RelationKind kind, const RelationParams& params, int n) {
    IndexSet full = full_set(n);
    auto in_range = [&](IndexSet s) { return subset_of(s, full); };
    switch (kind) {
        case RelationKind::T1:
            return in_range(params.sigma) && params.sigma != 0;
        case RelationKind::T2:
            return in_range(params.sigma) && in_range(params.tau) && params.sigma != 0 &&
                   params.tau != 0 && (params.sigma & params.tau) == 0;
        case RelationKind::T3:
            return in_range(params.tau) && params.tau != 0;
        case RelationKind::T4:
            // overlaps allowed everywhere (Type 4 at the level of I(C))
            return in_range(params.sigma1) && in_range(params.tau1) && in_range(params.sigma2) &&
                   in_range(params.tau2);
        case RelationKind::T4mod:
            return in_range(params.sigma1) && in_range(params.tau1) && in_range(params.sigma2) &&
                   in_range(params.tau2) &&
                   ((params.sigma1 | params.sigma2) & (params.tau1 | params.tau2)) == 0;
        case RelationKind::T5:
        case RelationKind::T6:
        case RelationKind::T5mod:
        case RelationKind::T6mod:
            return in_range(params.indices) && set_size(params.indices) >= 2;
    }
    return false;
}

std::string format_params(RelationKind kind, const RelationParams& params) {
    switch (kind) {
        case RelationKind::T1:
            return "σ=" + format_set(params.sigma);
        case RelationKind::T2:
            return "σ=" + format_set(params.sigma) + " τ=" + format_set(params.tau);
        case RelationKind::T3:
            return "τ=" + format_set(params.tau);
        case RelationKind::T4:
        case RelationKind::T4mod:
            return "σ1=" + format_set(params.sigma1) + " τ1=" + format_set(params.tau1) +
                   " σ2=" + format_set(params.sigma2) + " τ2=" + format_set(params.tau2);
        default: {
            std::string out = "i=(";
            bool first = true;
            for (int i : elements(params.indices)) {
                if (!first) out += ',';
                out += std::to_string(i);
                first = false;
            }
            return out + ")";
        }
    }
}

std::vector<RelationParams> enumerate_params(RelationKind kind, int n) {
    std::vector<RelationParams> out;
    IndexSet full = full_set(n);
    switch (kind) {
        case RelationKind::T1:
            for (IndexSet s = 1; s <= full; ++s) out.push_back({.sigma = s});
            break;
        case RelationKind::T2:
            for (IndexSet s = 1; s <= full; ++s)
                for (IndexSet t = 1; t <= full; ++t)
                    if ((s & t) == 0) out.push_back({.sigma = s, .tau = t});
            break;
        case RelationKind::T3:
            for (IndexSet t = 1; t <= full; ++t) out.push_back({.tau = t});
            break;
        case RelationKind::T4:
            for (IndexSet s1 = 0; s1 <= full; ++s1)
                for (IndexSet t1 = 0; t1 <= full; ++t1)
                    for (IndexSet s2 = 0; s2 <= full; ++s2)
                        for (IndexSet t2 = 0; t2 <= full; ++t2)
                            out.push_back({.sigma1 = s1, .tau1 = t1, .sigma2 = s2, .tau2 = t2});
            break;
        case RelationKind::T4mod:
            for (IndexSet s1 = 0; s1 <= full; ++s1)
                for (IndexSet t1 = 0; t1 <= full; ++t1)
                    for (IndexSet s2 = 0; s2 <= full; ++s2)
                        for (IndexSet t2 = 0; t2 <= full; ++t2)
                            if (((s1 | s2) & (t1 | t2)) == 0)
                                out.push_back({.sigma1 = s1, .tau1 = t1, .sigma2 = s2, .tau2 = t2});
            break;
        default:
            for (IndexSet s = 1; s <= full; ++s)
                if (set_size(s) >= 2) out.push_back({.indices = s});
            break;
    }
    return out;
}

Polynomial relation_polynomial(RelationKind kind, const RelationParams& params, int n) {
    if (!params_valid(kind, params, n))
        throw PolyError(std::string("invalid parameters for ") + kind_name(kind));
    switch (kind) {
        case RelationKind::T1:
            return Polynomial::from_monomial(Monomial(n, params.sigma));
        case RelationKind::T2:
            return expand(PseudoMonomial{n, params.sigma, params.tau});
        case RelationKind::T3:
            return expand(PseudoMonomial{n, 0, params.tau});
        case RelationKind::T4:
        case RelationKind::T4mod: {
            // x_sigma * prod (1+x_i) as a plain product; sigma and tau may meet
            auto half = [&](IndexSet sigma, IndexSet tau) {
                Polynomial f = Polynomial::from_monomial(Monomial(n, sigma));
                for (int i : elements(tau))
                    f = f * (Polynomial::one(n) + Polynomial::variable(n, i));
                return f;
            };
            return half(params.sigma1, params.tau1) + half(params.sigma2, params.tau2);
        }
        case RelationKind::T5:
        case RelationKind::T5mod: {
            Polynomial f(n);
            for (int i : elements(params.indices)) f = f + Polynomial::variable(n, i);
            return f;
        }
        case RelationKind::T6:
        case RelationKind::T6mod: {
            Polynomial f = Polynomial::one(n);
            for (int i : elements(params.indices)) f = f + Polynomial::variable(n, i);
            return f;
        }
    }
    throw PolyError("unknown relation kind");
}

namespace {

bool in_region(IndexSet membership, IndexSet sigma, IndexSet tau) {
    return subset_of(sigma, membership) && (tau & membership) == 0;
}

}  // namespace

RhsEval rhs_holds(RelationKind kind, const RelationParams& params, const Realization& r) {
    if (!params_valid(kind, params, r.n()))
        throw PolyError(std::string("invalid parameters for ") + kind_name(kind));
    switch (kind) {
        case RelationKind::T1: {
            for (std::size_t p = 0; p < r.size(); ++p)
                if (subset_of(params.sigma, r.membership(p)))
                    return {RhsStatus::fails, "point=" + r.point_id(p)};
            return {};
        }
        case RelationKind::T2: {
            for (std::size_t p = 0; p < r.size(); ++p) {
                IndexSet m = r.membership(p);
                if (subset_of(params.sigma, m) && (m & params.tau) == 0)
                    return {RhsStatus::fails, "point=" + r.point_id(p)};
            }
            return {};
        }
        case RelationKind::T3: {
            for (std::size_t p = 0; p < r.size(); ++p)
                if ((r.membership(p) & params.tau) == 0)
                    return {RhsStatus::fails, "point=" + r.point_id(p)};
            return {};
        }
        case RelationKind::T4:
        case RelationKind::T4mod: {
            for (std::size_t p = 0; p < r.size(); ++p) {
                IndexSet m = r.membership(p);
                if (in_region(m, params.sigma1, params.tau1) !=
                    in_region(m, params.sigma2, params.tau2))
                    return {RhsStatus::fails, "point=" + r.point_id(p)};
            }
            return {};
        }
        case RelationKind::T5: {
            for (int k : elements(params.indices)) {
                IndexSet rest = params.indices & ~singleton(k);
                for (std::size_t p = 0; p < r.size(); ++p) {
                    IndexSet m = r.membership(p);
                    if (contains(m, k) && (m & rest) == 0)
                        return {RhsStatus::fails,
                                "k=" + std::to_string(k) + " point=" + r.point_id(p)};
                }
            }
            if (set_size(params.indices) % 2 == 1) {
                for (std::size_t p = 0; p < r.size(); ++p)
                    if (subset_of(params.indices, r.membership(p)))
                        return {RhsStatus::fails, "intersection point=" + r.point_id(p)};
            }
            return {};
        }
        case RelationKind::T5mod: {
            // every odd-size subset of the chosen indices
            std::vector<int> idx = elements(params.indices);
            IndexSet positions = full_set(static_cast<int>(idx.size()));
            for (IndexSet sel = 1; sel <= positions; ++sel) {
                if (set_size(sel) % 2 == 0) continue;
                IndexSet chosen = 0;
                for (int k : elements(sel))
                    chosen |= singleton(idx[static_cast<std::size_t>(k - 1)]);
                IndexSet others = params.indices & ~chosen;
                for (std::size_t p = 0; p < r.size(); ++p) {
                    IndexSet m = r.membership(p);
                    if (subset_of(chosen, m) && (m & others) == 0)
                        return {RhsStatus::fails,
                                "σ=" + format_set(chosen) + " point=" + r.point_id(p)};
                }
            }
            return {};
        }
        case RelationKind::T6: {
            for (std::size_t p = 0; p < r.size(); ++p)
                if ((r.membership(p) & params.indices) == 0)
                    return {RhsStatus::fails, "point=" + r.point_id(p)};
            return {};
        }
        case RelationKind::T6mod: {
            std::vector<int> idx = elements(params.indices);
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = a + 1; b < idx.size(); ++b) {
                    IndexSet both = singleton(idx[a]) | singleton(idx[b]);
                    for (std::size_t p = 0; p < r.size(); ++p)
                        if (subset_of(both, r.membership(p)))
                            return {RhsStatus::not_applicable,
                                    "U" + std::to_string(idx[a]) + ",U" + std::to_string(idx[b]) +
                                        " meet at point=" + r.point_id(p)};
                }
            for (std::size_t p = 0; p < r.size(); ++p)
                if ((r.membership(p) & params.indices) == 0)
                    return {RhsStatus::fails, "point=" + r.point_id(p)};
            return {};
        }
    }
    throw PolyError("unknown relation kind");
}

RelationVerdict check_relation(const NeuralCode& code, RelationKind kind,
                               const RelationParams& params, const MembershipOracle& oracle) {
    if (code.empty()) throw CodeError("relation verdicts need a nonempty code");
    Polynomial f = relation_polynomial(kind, params, code.n());
    RhsEval rhs = rhs_holds(kind, params, realize(code));
    RelationVerdict verdict;
    verdict.kind = kind;
    verdict.params = params;
    verdict.in_J = oracle.in_J(f, code);
    verdict.in_I = oracle.in_I(f, code);
    verdict.rhs = rhs.status;
    verdict.witness = std::move(rhs.witness);
    return verdict;
}

RelationVerdict check_relation(const NeuralCode& code, RelationKind kind,
                               const RelationParams& params) {
    MembershipOracle oracle;
    return check_relation(code, kind, params, oracle);
}

std::vector<RelationVerdict> scan_relations(const NeuralCode& code,
                                            const std::set<RelationKind>& kinds,
                                            const MembershipOracle& oracle, int cap) {
    if (code.n() > cap)
        throw CodeError("relation scan on n=" + std::to_string(code.n()) +
                        " exceeds the cap of " + std::to_string(cap));
    std::vector<RelationVerdict> out;
    for (RelationKind kind : all_kinds()) {
        if (!kinds.contains(kind)) continue;
        for (const RelationParams& params : enumerate_params(kind, code.n()))
            out.push_back(check_relation(code, kind, params, oracle));
    }
    return out;
}

Polynomial modified_t5_sum(int m) {
    if (m < 1) throw PolyError("m must be positive");
    IndexSet all = full_set(m);
    Polynomial acc(m);
    for (IndexSet s = 1; s <= all; ++s)
        if (set_size(s) % 2 == 1) acc = acc + expand(PseudoMonomial{m, s, all & ~s});
    return acc;
}

Polynomial modified_t6_sum(int m) {
    if (m < 1) throw PolyError("m must be positive");
    IndexSet all = full_set(m);
    Polynomial acc = expand(PseudoMonomial{m, 0, all});
    for (IndexSet s = 1; s <= all; ++s)
        if (set_size(s) >= 2) acc = acc + Polynomial::from_monomial(Monomial(m, s));
    return acc;
}

Polynomial t4_case1_sum(int n, IndexSet sigma1, IndexSet sigma2) {
    if (sigma1 == 0 || sigma2 == 0 || sigma1 == sigma2)
        throw PolyError("t4_case1_sum needs distinct nonempty index sets");
    if (!subset_of(sigma1, full_set(n)) || !subset_of(sigma2, full_set(n)))
        throw PolyError("index set exceeds n");
    Polynomial acc(n);
    for (IndexSet c = 0; c <= full_set(n); ++c) {
        bool in1 = subset_of(sigma1, c) && !subset_of(sigma2, c);
        bool in2 = subset_of(sigma2, c) && !subset_of(sigma1, c);
        if (in1 || in2) acc = acc + expand(char_poly(Codeword{c, n}));
    }
    return acc;
}

}  // namespace nring
