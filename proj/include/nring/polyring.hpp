#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nring/code.hpp"
#include "nring/indexset.hpp"

namespace nring {

class PolyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// A power product x_1^{e_1} ... x_n^{e_n}. Exponents are true nonnegative
// integers: the ring is F_2[x], not the Boolean quotient, so (1+x_1)^2 =
// 1+x_1^2 is representable.
class Monomial {
  public:
    explicit Monomial(int n) : exponents_(static_cast<std::size_t>(n), 0) {}
    Monomial(int n, IndexSet squarefree_support);

    static Monomial one(int n) { return Monomial(n); }
    static Monomial variable(int n, int i);

    int n() const { return static_cast<int>(exponents_.size()); }
    int degree() const { return degree_; }
    int exponent(int i) const { return exponents_[static_cast<std::size_t>(i - 1)]; }
    bool is_one() const { return degree_ == 0; }
    bool squarefree() const;
    IndexSet support() const { return support_; }

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    Monomial quotient(const Monomial& divisor) const;  // requires divisor.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);

    Monomial with_exponent(int i, int e) const;

    // Canonical storage order (plain exponent-vector lexicographic); monomial
    // orders for division live in MonomialOrder.
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        return a.exponents_ <=> b.exponents_;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::vector<std::uint16_t> exponents_;
    int degree_ = 0;
    IndexSet support_ = 0;
};

// A polynomial over F_2[x_1,...,x_n]: the set of monomials with coefficient 1.
// Immutable value; terms kept sorted and unique.
class Polynomial {
  public:
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial one(int n) { return from_monomial(Monomial::one(n)); }
    static Polynomial variable(int n, int i) { return from_monomial(Monomial::variable(n, i)); }
    static Polynomial from_monomial(Monomial m);
    static Polynomial from_terms(int n, std::vector<Monomial> terms);  // collapses mod 2

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    int total_degree() const;  // degree of the zero polynomial reported as -1
    bool contains_term(const Monomial& m) const;

    Polynomial operator+(const Polynomial& other) const;  // char 2: also subtraction
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Monomial& m) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    int n_;
    std::vector<Monomial> terms_;
};

// x_sigma * prod_{j in tau} (1+x_j) with sigma and tau disjoint.
struct PseudoMonomial {
    int n = 0;
    IndexSet sigma = 0;
    IndexSet tau = 0;

    friend bool operator==(const PseudoMonomial&, const PseudoMonomial&) = default;
};

// The characteristic function p_v: 1 at v, 0 elsewhere on F_2^n.
PseudoMonomial char_poly(const Codeword& v);

// Expansion into 2^|tau| squarefree terms.
Polynomial expand(const PseudoMonomial& pm);

// Value of f at the 0/1 point c.
bool evaluate(const Polynomial& f, const Codeword& c);

// Image of f under the ring involution x_i -> 1+x_i.
Polynomial bitflip_poly(const Polynomial& f, int i);

enum class OrderKind { lex, grlex, grevlex };

// A multiplicative total well-order on monomials. `priority` lists variables
// from most to least significant; empty means x_1 > x_2 > ... > x_n.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<int> priority;

    static MonomialOrder lex() { return {OrderKind::lex, {}}; }
    static MonomialOrder grlex() { return {OrderKind::grlex, {}}; }
    static MonomialOrder grevlex() { return {OrderKind::grevlex, {}}; }
    MonomialOrder reversed(int n) const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

// Largest term of a nonzero polynomial under `order`.
const Monomial& leading_monomial(const Polynomial& f, const MonomialOrder& order);

// Grammar: expr := term ('+' term)*; term := factor ('*' factor)*;
// factor := '0' | '1' | var | '(' expr ')' | factor '^' uint; var := 'x' uint.
Polynomial parse_poly(std::string_view text, int n);

// Fully expanded, terms descending under `order`, '^' only for exponents >= 2.
std::string format_poly(const Polynomial& f, const MonomialOrder& order = MonomialOrder::grevlex());
std::string format_monomial(const Monomial& m);

// Factored pseudo-monomial text, e.g. "x3*(1+x1)*(1+x2)"; reparses to expand().
std::string format_pseudo_monomial(const PseudoMonomial& pm);

}  // namespace nring
