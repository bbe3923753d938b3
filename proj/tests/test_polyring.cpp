#include <doctest.h>

#include <random>

#include "nring/polyring.hpp"

using namespace nring;

namespace {

Polynomial P(const std::string& text, int n) { return parse_poly(text, n); }

Polynomial random_poly(std::mt19937& rng, int n, int max_terms, int max_exp) {
    std::vector<Monomial> terms;
    int count = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
    for (int t = 0; t < count; ++t) {
        Monomial m(n);
        for (int i = 1; i <= n; ++i)
            m = m.with_exponent(i, static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1)));
        terms.push_back(m);
    }
    return Polynomial::from_terms(n, terms);
}

Codeword random_word(std::mt19937& rng, int n) {
    return Codeword{static_cast<std::uint32_t>(rng()) & full_set(n), n};
}

}  // namespace

TEST_CASE("poly_add: characteristic 2") {
    Polynomial f = P("x1*x2+x1", 2);
    CHECK((f + f).is_zero());
    CHECK((Polynomial::zero(2) + f) == f);
    // (1+x1+x2+x1x2) + (x1+x2+1) = x1x2
    CHECK(P("1+x1+x2+x1*x2", 2) + P("x1+x2+1", 2) == P("x1*x2", 2));
}

TEST_CASE("poly_mul examples") {
    CHECK(P("(1+x1)*(1+x2)", 2) == P("1+x1+x2+x1*x2", 2));
    CHECK(P("(1+x1)*(1+x1)", 1) == P("1+x1^2", 1));
    CHECK((P("x1+x2", 2) * Polynomial::zero(2)).is_zero());
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        Polynomial f = random_poly(rng, n, 5, 2);
        Polynomial g = random_poly(rng, n, 5, 2);
        Polynomial h = random_poly(rng, n, 5, 2);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f + f).is_zero());
        CHECK(f * Polynomial::one(n) == f);
    }
}

TEST_CASE("evaluate examples") {
    // x1+x2+x3+x4 at 1110
    Polynomial f = P("x1+x2+x3+x4", 4);
    CHECK(evaluate(f, Codeword{0b0111, 4}) == true);  // supp {1,2,3}
    CHECK(evaluate(Polynomial::zero(3), Codeword{0b101, 3}) == false);
    // exponents >= 1 evaluate as the base bit
    CHECK(evaluate(P("x1^3", 1), Codeword{1, 1}) == true);
    CHECK(evaluate(P("x1^3", 1), Codeword{0, 1}) == false);
    CHECK(evaluate(P("x1^0", 1), Codeword{0, 1}) == true);
}

TEST_CASE("evaluate is a ring homomorphism") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Polynomial f = random_poly(rng, n, 4, 2);
        Polynomial g = random_poly(rng, n, 4, 2);
        Codeword c = random_word(rng, n);
        CHECK(evaluate(f + g, c) == (evaluate(f, c) != evaluate(g, c)));
        CHECK(evaluate(f * g, c) == (evaluate(f, c) && evaluate(g, c)));
    }
}

TEST_CASE("char_poly examples and characteristic property") {
    PseudoMonomial p11 = char_poly(Codeword{0b11, 2});
    CHECK(p11.sigma == full_set(2));
    CHECK(p11.tau == 0u);
    CHECK(format_pseudo_monomial(p11) == "x1*x2");

    CHECK(expand(char_poly(Codeword{0b00, 2})) == P("1+x1+x2+x1*x2", 2));
    CHECK(format_pseudo_monomial(char_poly(Codeword{0b100, 3})) == "x3*(1+x1)*(1+x2)");

    for (int n = 1; n <= 4; ++n) {
        std::uint32_t limit = 1u << n;
        for (std::uint32_t v = 0; v < limit; ++v) {
            Polynomial pv = expand(char_poly(Codeword{v, n}));
            for (std::uint32_t w = 0; w < limit; ++w)
                CHECK(evaluate(pv, Codeword{w, n}) == (v == w));
        }
    }
}

TEST_CASE("expand: term count, squarefree, divisibility") {
    Polynomial e = expand(PseudoMonomial{3, singleton(1), singleton(2) | singleton(3)});
    CHECK(e == P("x1+x1*x2+x1*x3+x1*x2*x3", 3));
    CHECK(expand(PseudoMonomial{2, 0, 0}) == Polynomial::one(2));
    CHECK(expand(PseudoMonomial{3, full_set(3), 0}) == P("x1*x2*x3", 3));
    CHECK_THROWS_AS(expand(PseudoMonomial{2, 1, 1}), PolyError);

    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        IndexSet sigma = static_cast<IndexSet>(rng()) & full_set(n);
        IndexSet tau = static_cast<IndexSet>(rng()) & full_set(n) & ~sigma;
        Polynomial p = expand(PseudoMonomial{n, sigma, tau});
        CHECK(p.term_count() == (std::size_t{1} << set_size(tau)));
        Monomial xs(n, sigma);
        for (const Monomial& t : p.terms()) {
            CHECK(t.squarefree());
            CHECK(xs.divides(t));
        }
    }
}

TEST_CASE("bitflip_poly examples and properties") {
    CHECK(bitflip_poly(P("x1", 1), 1) == P("1+x1", 1));
    CHECK(bitflip_poly(P("x1*x2", 2), 1) == P("x2+x1*x2", 2));

    std::mt19937 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        int i = 1 + static_cast<int>(rng() % n);
        Polynomial f = random_poly(rng, n, 4, 3);
        Polynomial g = random_poly(rng, n, 4, 3);
        CHECK(bitflip_poly(bitflip_poly(f, i), i) == f);  // involution
        CHECK(bitflip_poly(f + g, i) == bitflip_poly(f, i) + bitflip_poly(g, i));
        CHECK(bitflip_poly(f * g, i) == bitflip_poly(f, i) * bitflip_poly(g, i));
        // compatibility with the point flip, exhaustively over F_2^n
        Polynomial d = bitflip_poly(f, i);
        for (std::uint32_t w = 0; w < (1u << n); ++w) {
            Codeword c{w, n};
            CHECK(evaluate(d, c) == evaluate(f, flip_bit(c, i)));
        }
    }
}

TEST_CASE("parse_poly examples and errors") {
    CHECK(P("(1+x1)*(1+x2)", 2) == P("1+x1+x2+x1*x2", 2));
    CHECK(P("x1+x1", 2).is_zero());
    CHECK(P("x1*(1+x1)+x2*(1+x2)", 2) == P("x1+x1^2+x2+x2^2", 2));
    CHECK(P("(x1+1)^2", 1) == P("1+x1^2", 1));
    CHECK(P("x1^0", 1) == Polynomial::one(1));
    CHECK(P(" 1 + x1 * x2 ", 2) == P("1+x1*x2", 2));

    CHECK_THROWS_AS(P("x3", 2), ParseError);  // variable exceeds n
    CHECK_THROWS_AS(P("x1+", 2), ParseError);
    CHECK_THROWS_AS(P("(x1", 2), ParseError);
    CHECK_THROWS_AS(P("x1 x2", 2), ParseError);  // missing '*'
    CHECK_THROWS_AS(P("", 2), ParseError);
    CHECK_THROWS_AS(P("y1", 2), ParseError);
    try {
        P("x1+*x2", 2);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("format_poly: descending order, '^' only for exponents >= 2") {
    CHECK(format_poly(P("1+x1+x2+x1*x2", 2)) == "x1*x2+x1+x2+1");
    CHECK(format_poly(P("x1+x1^2", 1)) == "x1^2+x1");
    CHECK(format_poly(Polynomial::zero(2)) == "0");
    CHECK(format_poly(Polynomial::one(2)) == "1");
}

TEST_CASE("parse/format round trip") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Polynomial f = random_poly(rng, n, 6, 3);
        CHECK(parse_poly(format_poly(f), n) == f);
    }
}

TEST_CASE("monomial orders: pinned comparisons") {
    int n = 2;
    Monomial x1 = Monomial::variable(n, 1);
    Monomial x2 = Monomial::variable(n, 2);
    Monomial x1x2 = x1.times(x2);

    for (auto order : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()}) {
        CHECK(compare(order, x1, x2) == std::strong_ordering::greater);
        CHECK(compare(order, x1, x1) == std::strong_ordering::equal);
        CHECK(compare(order, Monomial::one(n), x2) == std::strong_ordering::less);
    }
    CHECK(compare(MonomialOrder::grevlex(), x1x2, x1) == std::strong_ordering::greater);
    CHECK(compare(MonomialOrder::grlex(), x1x2, x1) == std::strong_ordering::greater);

    // grevlex vs grlex differ at degree ties in >= 3 variables
    Monomial a = Monomial::variable(3, 1).times(Monomial::variable(3, 3));  // x1*x3
    Monomial b = Monomial::variable(3, 2).times(Monomial::variable(3, 2));  // x2^2
    CHECK(compare(MonomialOrder::grlex(), a, b) == std::strong_ordering::greater);
    CHECK(compare(MonomialOrder::grevlex(), a, b) == std::strong_ordering::less);

    // reversed priority flips the x1 vs x2 verdict
    MonomialOrder rev = MonomialOrder::grevlex().reversed(n);
    CHECK(compare(rev, x1, x2) == std::strong_ordering::less);
}

TEST_CASE("monomial orders: total, multiplicative, 1 minimal") {
    std::mt19937 rng(23);
    for (auto base : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()}) {
        for (int trial = 0; trial < 300; ++trial) {
            int n = 1 + static_cast<int>(rng() % 4);
            MonomialOrder order = base;
            if (trial % 3 == 1) order = base.reversed(n);
            if (trial % 3 == 2) {  // random variable priority
                order.priority.resize(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) order.priority[static_cast<std::size_t>(i)] = i + 1;
                std::shuffle(order.priority.begin(), order.priority.end(), rng);
            }
            auto random_monomial = [&] {
                Monomial m(n);
                for (int i = 1; i <= n; ++i)
                    m = m.with_exponent(i, static_cast<int>(rng() % 4));
                return m;
            };
            Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
            auto ab = compare(order, a, b);
            CHECK(compare(order, b, a) == (0 <=> ab));
            CHECK((ab == std::strong_ordering::equal) == (a == b));
            CHECK(compare(order, a.times(c), b.times(c)) == ab);  // multiplicative
            if (!a.is_one())
                CHECK(compare(order, Monomial::one(n), a) == std::strong_ordering::less);
        }
    }
}

TEST_CASE("monomial orders: priority permutations relabel variables") {
    // comparing under priority (2,3,1) must agree with comparing the
    // relabeled monomials under the default priority
    std::mt19937 rng(29);
    int n = 3;
    MonomialOrder permuted;
    permuted.priority = {2, 3, 1};
    for (auto kind : {OrderKind::lex, OrderKind::grlex, OrderKind::grevlex}) {
        permuted.kind = kind;
        MonomialOrder plain{kind, {}};
        for (int trial = 0; trial < 200; ++trial) {
            auto random_monomial = [&] {
                Monomial m(n);
                for (int i = 1; i <= n; ++i)
                    m = m.with_exponent(i, static_cast<int>(rng() % 4));
                return m;
            };
            auto relabel = [&](const Monomial& m) {
                // priority slot k holds variable priority[k]
                Monomial out(n);
                out = out.with_exponent(1, m.exponent(2));
                out = out.with_exponent(2, m.exponent(3));
                out = out.with_exponent(3, m.exponent(1));
                return out;
            };
            Monomial a = random_monomial(), b = random_monomial();
            CHECK(compare(permuted, a, b) == compare(plain, relabel(a), relabel(b)));
        }
    }
}
