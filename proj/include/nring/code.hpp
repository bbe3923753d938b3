#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nring/indexset.hpp"

namespace nring {

class CodeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// One firing pattern of n neurons; bit i-1 of `bits` is component c_i.
struct Codeword {
    std::uint32_t bits = 0;
    int n = 0;

    friend auto operator<=>(const Codeword&, const Codeword&) = default;
};

// supp(c) = { i : c_i = 1 }
inline IndexSet support(const Codeword& c) { return c.bits; }

Codeword flip_bit(const Codeword& c, int i);

std::string to_binary(const Codeword& c);  // "101", component 1 printed first

Codeword codeword_from_support(IndexSet s, int n);

// A set of codewords in F_2^n. Immutable after construction.
class NeuralCode {
  public:
    NeuralCode(int n, std::vector<std::uint32_t> words);

    int n() const { return n_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    bool contains(std::uint32_t bits) const;
    const std::vector<std::uint32_t>& words() const { return words_; }
    Codeword word(std::size_t k) const { return Codeword{words_[k], n_}; }

    friend bool operator==(const NeuralCode&, const NeuralCode&) = default;
    friend bool operator<(const NeuralCode& a, const NeuralCode& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.words_ < b.words_;
    }

  private:
    int n_;
    std::vector<std::uint32_t> words_;  // sorted, unique
};

// Comma-separated tokens, each a length-n binary string or a support
// shorthand over digits 1..9 ("e" or "∅" for the empty support).
NeuralCode parse_code(std::string_view text, int n);

std::string format_code(const NeuralCode& code);            // canonical binary tokens
std::string format_code_shorthand(const NeuralCode& code);  // requires n <= 9

// { u : supp(u) = supp(c) XOR {i} for some c in C }
NeuralCode bitflip_code(const NeuralCode& code, int i);

// Streams every subset of F_2^n exactly once (subset bitmask ascending),
// skipping the empty code unless asked for it.
class CodeEnumerator {
  public:
    static constexpr int kDefaultCap = 4;

    CodeEnumerator(int n, bool include_empty_code = false, int cap = kDefaultCap);
    std::optional<NeuralCode> next();

  private:
    int n_;
    std::uint64_t next_mask_;
    std::uint64_t count_;  // masks still to emit
};

std::uint64_t code_universe_size(int n, bool include_empty_code);
std::vector<NeuralCode> enumerate_codes(int n, bool include_empty_code = false,
                                        int cap = CodeEnumerator::kDefaultCap);

// `count` distinct nonempty codes on n neurons, deterministic for a seed.
std::vector<NeuralCode> sample_codes(int n, std::size_t count, std::uint64_t seed);

}  // namespace nring
