#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nring/code.hpp"
#include "nring/polyring.hpp"

namespace nring {

// Raised when a computation hits its resource budget: the answer is
// "undecided", never wrong.
class UndecidedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct IdealPresentation {
    int n = 0;
    std::vector<Polynomial> generators;  // nonzero
};

// Generators { p_v : v not in C }, v ascending; empty when C = F_2^n.
IdealPresentation neural_ideal_generators(const NeuralCode& code);
std::vector<PseudoMonomial> neural_ideal_pseudo_monomials(const NeuralCode& code);

// f in I(C): f vanishes on every codeword (vacuously true for the empty code).
bool member_I(const Polynomial& f, const NeuralCode& code);

// Remainder of multivariate division: no term of the result is divisible by
// any basis leading monomial; first divisor in basis order wins.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis,
                  const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

struct BuchbergerBudget {
    std::size_t max_pairs = 200000;
    int max_degree = 64;
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> basis;  // reduced, sorted by leading monomial ascending

    friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

GroebnerBasis buchberger(const IdealPresentation& gens, const MonomialOrder& order,
                         const BuchbergerBudget& budget = {});

// Self-checks used by tests and the verification harness.
bool is_groebner(const GroebnerBasis& gb);
bool is_reduced(const GroebnerBasis& gb);

// f in J_C, decided by reduction to zero modulo a reduced Groebner basis.
bool member_J(const Polynomial& f, const NeuralCode& code,
              const MonomialOrder& order = MonomialOrder::grevlex(),
              const BuchbergerBudget& budget = {});

// A checkable positive-membership witness: f = sum of multiplier*generator.
struct SpanCertificate {
    std::vector<std::pair<Monomial, std::size_t>> parts;  // (multiplier, generator index)
};

// Searches the F_2-span of { m*g : deg(m*g) <= max_degree }. Absence is
// inconclusive, never a proof of non-membership.
std::optional<SpanCertificate> span_certificate(const Polynomial& f,
                                                const IdealPresentation& gens, int max_degree);

Polynomial expand_certificate(const SpanCertificate& cert, const IdealPresentation& gens);

// Membership queries with a per-code Groebner cache (one order per oracle).
// The negate flags flip answers for one or both ideals; the verification
// harness uses them to prove its own sensitivity.
class MembershipOracle {
  public:
    explicit MembershipOracle(MonomialOrder order = MonomialOrder::grevlex(),
                              BuchbergerBudget budget = {}, bool negate_j = false,
                              bool negate_i = false)
        : order_(std::move(order)), budget_(budget), negate_j_(negate_j), negate_i_(negate_i) {}

    bool in_J(const Polynomial& f, const NeuralCode& code) const;
    bool in_I(const Polynomial& f, const NeuralCode& code) const;
    const GroebnerBasis& groebner(const NeuralCode& code) const;

    const MonomialOrder& order() const { return order_; }
    const BuchbergerBudget& budget() const { return budget_; }

  private:
    MonomialOrder order_;
    BuchbergerBudget budget_;
    bool negate_j_ = false;
    bool negate_i_ = false;

    using CacheKey = std::pair<int, std::vector<std::uint32_t>>;
    mutable std::mutex mutex_;
    mutable std::map<CacheKey, GroebnerBasis> cache_;
};

}  // namespace nring
