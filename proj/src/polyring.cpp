#include "nring/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace nring {

namespace {

void check_var(int i, int n) {
    if (i < 1 || i > n)
        throw PolyError("variable index " + std::to_string(i) + " out of range [1," +
                        std::to_string(n) + "]");
}

void check_same_n(int a, int b) {
    if (a != b)
        throw PolyError("mismatched variable counts: " + std::to_string(a) + " vs " +
                        std::to_string(b));
}

}  // namespace

Monomial::Monomial(int n, IndexSet squarefree_support)
    : exponents_(static_cast<std::size_t>(n), 0) {
    for (int i : elements(squarefree_support)) {
        check_var(i, n);
        exponents_[static_cast<std::size_t>(i - 1)] = 1;
    }
    degree_ = set_size(squarefree_support);
    support_ = squarefree_support;
}

Monomial Monomial::variable(int n, int i) {
    check_var(i, n);
    return Monomial(n, singleton(i));
}

bool Monomial::squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](std::uint16_t e) { return e <= 1; });
}

Monomial Monomial::times(const Monomial& other) const {
    check_same_n(n(), other.n());
    Monomial out(n());
    for (std::size_t k = 0; k < exponents_.size(); ++k)
        out.exponents_[k] = static_cast<std::uint16_t>(exponents_[k] + other.exponents_[k]);
    out.degree_ = degree_ + other.degree_;
    out.support_ = support_ | other.support_;
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    if (n() != other.n()) return false;
    for (std::size_t k = 0; k < exponents_.size(); ++k)
        if (exponents_[k] > other.exponents_[k]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    if (!divisor.divides(*this)) throw PolyError("monomial quotient is not exact");
    Monomial out(n());
    for (std::size_t k = 0; k < exponents_.size(); ++k) {
        out.exponents_[k] = static_cast<std::uint16_t>(exponents_[k] - divisor.exponents_[k]);
        if (out.exponents_[k] > 0) out.support_ |= singleton(static_cast<int>(k) + 1);
    }
    out.degree_ = degree_ - divisor.degree_;
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    check_same_n(a.n(), b.n());
    Monomial out(a.n());
    int deg = 0;
    for (std::size_t k = 0; k < a.exponents_.size(); ++k) {
        out.exponents_[k] = std::max(a.exponents_[k], b.exponents_[k]);
        deg += out.exponents_[k];
    }
    out.degree_ = deg;
    out.support_ = a.support_ | b.support_;
    return out;
}

Monomial Monomial::with_exponent(int i, int e) const {
    check_var(i, n());
    if (e < 0) throw PolyError("negative exponent");
    Monomial out = *this;
    std::size_t k = static_cast<std::size_t>(i - 1);
    out.degree_ += e - out.exponents_[k];
    out.exponents_[k] = static_cast<std::uint16_t>(e);
    if (e > 0)
        out.support_ |= singleton(i);
    else
        out.support_ &= ~singleton(i);
    return out;
}

Polynomial Polynomial::from_monomial(Monomial m) {
    Polynomial out(m.n());
    out.terms_.push_back(std::move(m));
    return out;
}

Polynomial Polynomial::from_terms(int n, std::vector<Monomial> terms) {
    for (const Monomial& m : terms) check_same_n(m.n(), n);
    std::sort(terms.begin(), terms.end());
    Polynomial out(n);
    for (std::size_t k = 0; k < terms.size();) {
        std::size_t j = k;
        while (j < terms.size() && terms[j] == terms[k]) ++j;
        if ((j - k) % 2 == 1) out.terms_.push_back(terms[k]);
        k = j;
    }
    return out;
}

int Polynomial::total_degree() const {
    int deg = -1;
    for (const Monomial& m : terms_) deg = std::max(deg, m.degree());
    return deg;
}

bool Polynomial::contains_term(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_n(n_, other.n_);
    Polynomial out(n_);
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(out.terms_));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_n(n_, other.n_);
    std::vector<Monomial> products;
    products.reserve(terms_.size() * other.terms_.size());
    for (const Monomial& a : terms_)
        for (const Monomial& b : other.terms_) products.push_back(a.times(b));
    return from_terms(n_, std::move(products));
}

Polynomial Polynomial::operator*(const Monomial& m) const {
    check_same_n(n_, m.n());
    std::vector<Monomial> products;
    products.reserve(terms_.size());
    for (const Monomial& a : terms_) products.push_back(a.times(m));
    return from_terms(n_, std::move(products));
}

PseudoMonomial char_poly(const Codeword& v) {
    return PseudoMonomial{v.n, support(v), full_set(v.n) & ~support(v)};
}

Polynomial expand(const PseudoMonomial& pm) {
    if ((pm.sigma & pm.tau) != 0) throw PolyError("pseudo-monomial sigma and tau overlap");
    std::vector<Monomial> terms;
    // subsets tau' of tau, enumerated by the standard submask walk
    IndexSet sub = 0;
    for (;;) {
        terms.push_back(Monomial(pm.n, pm.sigma | sub));
        if (sub == pm.tau) break;
        sub = (sub - pm.tau) & pm.tau;
    }
    return Polynomial::from_terms(pm.n, std::move(terms));
}

bool evaluate(const Polynomial& f, const Codeword& c) {
    check_same_n(f.n(), c.n);
    bool acc = false;
    for (const Monomial& m : f.terms()) {
        // a term vanishes iff some variable with positive exponent is 0
        if (subset_of(m.support(), support(c))) acc = !acc;
    }
    return acc;
}

Polynomial bitflip_poly(const Polynomial& f, int i) {
    check_var(i, f.n());
    std::vector<Monomial> out;
    for (const Monomial& m : f.terms()) {
        int e = m.exponent(i);
        if (e == 0) {
            out.push_back(m);
            continue;
        }
        // x_i^e -> (1+x_i)^e = sum over k with C(e,k) odd (Lucas: k submask of e)
        Monomial base = m.with_exponent(i, 0);
        for (int k = e;; k = (k - 1) & e) {
            out.push_back(base.with_exponent(i, k));
            if (k == 0) break;
        }
    }
    return Polynomial::from_terms(f.n(), std::move(out));
}

MonomialOrder MonomialOrder::reversed(int n) const {
    MonomialOrder out;
    out.kind = kind;
    out.priority.resize(static_cast<std::size_t>(n));
    if (priority.empty()) {
        for (int k = 0; k < n; ++k) out.priority[static_cast<std::size_t>(k)] = n - k;
    } else {
        out.priority.assign(priority.rbegin(), priority.rend());
    }
    return out;
}

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    check_same_n(a.n(), b.n());
    int n = a.n();
    auto var_at = [&](int k) {  // k-th variable by descending priority, 0-based
        return order.priority.empty() ? k + 1 : order.priority[static_cast<std::size_t>(k)];
    };

    if (order.kind != OrderKind::lex) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree() ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    if (order.kind == OrderKind::grevlex) {
        // degree tie: scan from least significant variable; smaller exponent wins
        for (int k = n - 1; k >= 0; --k) {
            int i = var_at(k);
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) > b.exponent(i) ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    for (int k = 0; k < n; ++k) {
        int i = var_at(k);
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

const Monomial& leading_monomial(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw PolyError("zero polynomial has no leading monomial");
    const Monomial* best = &f.terms().front();
    for (const Monomial& m : f.terms())
        if (compare(order, m, *best) == std::strong_ordering::greater) best = &m;
    return *best;
}

namespace {

class PolyParser {
  public:
    PolyParser(std::string_view text, int n) : text_(text), n_(n) {}

    Polynomial parse() {
        Polynomial f = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

  private:
    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char ch) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    unsigned parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        unsigned value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
            if (value > 1u << 20) fail("number too large");
            ++pos_;
        }
        return value;
    }

    Polynomial parse_expr() {
        Polynomial f = parse_term();
        while (eat('+')) f = f + parse_term();
        return f;
    }

    Polynomial parse_term() {
        Polynomial f = parse_factor();
        while (eat('*')) f = f * parse_factor();
        return f;
    }

    Polynomial parse_factor() {
        Polynomial f = parse_primary();
        while (eat('^')) {
            unsigned e = parse_uint();
            Polynomial p = Polynomial::one(n_);
            for (unsigned k = 0; k < e; ++k) p = p * f;
            f = p;
        }
        return f;
    }

    Polynomial parse_primary() {
        char ch = peek();
        if (ch == '0') {
            ++pos_;
            return Polynomial::zero(n_);
        }
        if (ch == '1') {
            ++pos_;
            return Polynomial::one(n_);
        }
        if (ch == 'x') {
            ++pos_;
            unsigned idx = parse_uint();
            if (idx < 1 || static_cast<int>(idx) > n_)
                fail("variable x" + std::to_string(idx) + " exceeds n=" + std::to_string(n_));
            return Polynomial::variable(n_, static_cast<int>(idx));
        }
        if (ch == '(') {
            ++pos_;
            Polynomial f = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return f;
        }
        fail("expected '0', '1', a variable, or '('");
    }
};

}  // namespace

Polynomial parse_poly(std::string_view text, int n) {
    if (n < 1) throw PolyError("variable count must be positive");
    return PolyParser(text, n).parse();
}

std::string format_monomial(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (int i = 1; i <= m.n(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
        if (e >= 2) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

std::string format_poly(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return "0";
    std::vector<Monomial> terms = f.terms();
    std::sort(terms.begin(), terms.end(), [&](const Monomial& a, const Monomial& b) {
        return compare(order, a, b) == std::strong_ordering::greater;
    });
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k) out += '+';
        out += format_monomial(terms[k]);
    }
    return out;
}

std::string format_pseudo_monomial(const PseudoMonomial& pm) {
    if ((pm.sigma & pm.tau) != 0) throw PolyError("pseudo-monomial sigma and tau overlap");
    std::string out;
    for (int i : elements(pm.sigma)) {
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
    }
    for (int j : elements(pm.tau)) {
        if (!out.empty()) out += '*';
        out += "(1+x";
        out += std::to_string(j);
        out += ')';
    }
    return out.empty() ? "1" : out;
}

}  // namespace nring
