#include <doctest.h>

#include <random>
#include <set>

#include "nring/code.hpp"

using namespace nring;

TEST_CASE("parse_code: shorthand and binary tokens") {
    NeuralCode c = parse_code("e,3,13,23", 3);
    CHECK(format_code(c) == "000,001,011,101");
    CHECK(c.size() == 4);

    CHECK(format_code(parse_code("00", 2)) == "00");
    CHECK(format_code(parse_code("∅, 12", 2)) == "00,11");
    CHECK(format_code(parse_code("10, 10, 01", 2)) == "01,10");  // duplicates collapse
}

TEST_CASE("parse_code: errors") {
    CHECK_THROWS_AS(parse_code("14", 3), CodeError);   // digit 4 > n=3
    CHECK_THROWS_AS(parse_code("010", 2), CodeError);  // wrong-length binary
    CHECK_THROWS_AS(parse_code("", 2), CodeError);
    CHECK_THROWS_AS(parse_code("1,,2", 2), CodeError);
    CHECK_THROWS_AS(parse_code("x1", 2), CodeError);
    CHECK_THROWS_AS(parse_code("10", 3), CodeError);  // not length 3, '0' not shorthand
}

TEST_CASE("support") {
    CHECK(support(parse_code("011", 3).word(0)) == (singleton(2) | singleton(3)));
    CHECK(support(Codeword{0, 3}) == 0u);
    CHECK(elements(support(parse_code("101", 3).word(0))) == std::vector<int>{1, 3});
}

TEST_CASE("bitflip_code examples") {
    NeuralCode c = parse_code("10,01", 2);
    CHECK(format_code(bitflip_code(c, 1)) == "00,11");
    CHECK(bitflip_code(bitflip_code(c, 1), 1) == c);
    CHECK(format_code(bitflip_code(parse_code("000", 3), 3)) == "001");
    CHECK_THROWS_AS(bitflip_code(c, 3), CodeError);
}

TEST_CASE("bitflip_code is an involution and preserves size") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        std::vector<std::uint32_t> words;
        std::uint32_t limit = 1u << n;
        for (std::uint32_t w = 0; w < limit; ++w)
            if (rng() % 2) words.push_back(w);
        if (words.empty()) words.push_back(static_cast<std::uint32_t>(rng() % limit));
        NeuralCode c(n, words);
        int i = 1 + static_cast<int>(rng() % n);
        NeuralCode flipped = bitflip_code(c, i);
        CHECK(flipped.size() == c.size());
        CHECK(bitflip_code(flipped, i) == c);
    }
}

TEST_CASE("round trip through both notations") {
    // exhaustive at n = 2
    CodeEnumerator stream(2, true);
    while (auto c = stream.next()) {
        if (c->empty()) continue;
        CHECK(parse_code(format_code(*c), 2) == *c);
        CHECK(parse_code(format_code_shorthand(*c), 2) == *c);
    }
    // random larger codes
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        std::vector<std::uint32_t> words;
        for (int k = 0; k < 6; ++k)
            words.push_back(static_cast<std::uint32_t>(rng()) & full_set(n));
        NeuralCode c(n, words);
        CHECK(parse_code(format_code(c), n) == c);
        CHECK(parse_code(format_code_shorthand(c), n) == c);
    }
}

TEST_CASE("enumerate_codes counts and uniqueness") {
    CHECK(enumerate_codes(1).size() == 3);
    CHECK(enumerate_codes(2).size() == 15);
    auto all3 = enumerate_codes(3);
    CHECK(all3.size() == 255);
    std::set<NeuralCode> distinct(all3.begin(), all3.end());
    CHECK(distinct.size() == all3.size());

    CHECK(enumerate_codes(2, true).size() == 16);
    CHECK(enumerate_codes(2, true).front().empty());
    CHECK_THROWS_AS(enumerate_codes(5), CodeError);     // above the default cap
    CHECK_THROWS_AS(enumerate_codes(6, false, 6), CodeError);
    CHECK(code_universe_size(4, false) == 65535);
    CHECK_THROWS_AS(NeuralCode(17, {}), CodeError);     // beyond the supported width
}

TEST_CASE("sample_codes is deterministic and nonempty") {
    auto a = sample_codes(4, 100, 1);
    auto b = sample_codes(4, 100, 1);
    CHECK(a == b);
    CHECK(a.size() == 100);
    for (const NeuralCode& c : a) CHECK(!c.empty());
    CHECK(sample_codes(4, 100, 2) != a);
}

TEST_CASE("codeword helpers") {
    Codeword c{0b101, 3};  // bits: c1=1, c2=0, c3=1
    CHECK(to_binary(c) == "101");
    CHECK(to_binary(flip_bit(c, 2)) == "111");
    CHECK(codeword_from_support(singleton(2), 3).bits == 0b010);
    CHECK_THROWS_AS(codeword_from_support(singleton(4), 3), CodeError);
}
