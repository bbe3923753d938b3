#include "nring/code.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace nring {

namespace {

constexpr int kMaxNeurons = 16;

void check_n(int n) {
    if (n < 1 || n > kMaxNeurons)
        throw CodeError("neuron count must be between 1 and " + std::to_string(kMaxNeurons) +
                        ", got " + std::to_string(n));
}

void check_index(int i, int n) {
    if (i < 1 || i > n)
        throw CodeError("neuron index " + std::to_string(i) + " out of range [1," +
                        std::to_string(n) + "]");
}

}  // namespace

Codeword flip_bit(const Codeword& c, int i) {
    check_index(i, c.n);
    return Codeword{c.bits ^ singleton(i), c.n};
}

std::string to_binary(const Codeword& c) {
    std::string out(static_cast<std::size_t>(c.n), '0');
    for (int i = 1; i <= c.n; ++i)
        if (contains(c.bits, i)) out[static_cast<std::size_t>(i - 1)] = '1';
    return out;
}

Codeword codeword_from_support(IndexSet s, int n) {
    check_n(n);
    if (!subset_of(s, full_set(n))) throw CodeError("support exceeds neuron count");
    return Codeword{s, n};
}

NeuralCode::NeuralCode(int n, std::vector<std::uint32_t> words) : n_(n), words_(std::move(words)) {
    check_n(n);
    for (std::uint32_t w : words_)
        if (!subset_of(w, full_set(n_))) throw CodeError("codeword does not fit in n bits");
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool NeuralCode::contains(std::uint32_t bits) const {
    return std::binary_search(words_.begin(), words_.end(), bits);
}

namespace {

std::uint32_t parse_token(std::string_view tok, int n) {
    if (tok.empty()) throw CodeError("empty codeword token");
    if (tok == "e" || tok == "∅") return 0;

    bool binary_chars = std::all_of(tok.begin(), tok.end(),
                                    [](char ch) { return ch == '0' || ch == '1'; });
    if (binary_chars && tok.size() == static_cast<std::size_t>(n)) {
        std::uint32_t bits = 0;
        for (int i = 1; i <= n; ++i)
            if (tok[static_cast<std::size_t>(i - 1)] == '1') bits |= singleton(i);
        return bits;
    }

    bool shorthand_chars = std::all_of(tok.begin(), tok.end(),
                                       [](char ch) { return ch >= '1' && ch <= '9'; });
    if (shorthand_chars) {
        std::uint32_t bits = 0;
        for (char ch : tok) {
            int i = ch - '0';
            if (i > n)
                throw CodeError("shorthand digit " + std::string(1, ch) + " exceeds n=" +
                                std::to_string(n) + " in token \"" + std::string(tok) + "\"");
            bits |= singleton(i);
        }
        return bits;
    }
    if (binary_chars)
        throw CodeError("binary token \"" + std::string(tok) + "\" is not length " +
                        std::to_string(n));
    throw CodeError("token \"" + std::string(tok) + "\" is neither binary nor shorthand");
}

}  // namespace

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

NeuralCode parse_code(std::string_view text, int n) {
    check_n(n);
    if (trimmed(text).empty()) throw CodeError("code text contains no tokens");
    std::vector<std::uint32_t> words;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        std::string_view tok = trimmed(text.substr(pos, end - pos));
        if (tok.empty()) throw CodeError("empty codeword token");
        words.push_back(parse_token(tok, n));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return NeuralCode(n, std::move(words));
}

std::string format_code(const NeuralCode& code) {
    std::vector<std::string> tokens;
    tokens.reserve(code.size());
    for (std::size_t k = 0; k < code.size(); ++k) tokens.push_back(to_binary(code.word(k)));
    std::sort(tokens.begin(), tokens.end());
    std::string out;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        if (k) out += ',';
        out += tokens[k];
    }
    return out;
}

std::string format_code_shorthand(const NeuralCode& code) {
    if (code.n() > 9) throw CodeError("shorthand is only defined for n <= 9");
    std::vector<std::string> binary;
    binary.reserve(code.size());
    for (std::size_t k = 0; k < code.size(); ++k) binary.push_back(to_binary(code.word(k)));
    std::sort(binary.begin(), binary.end());
    std::string out;
    for (std::size_t k = 0; k < binary.size(); ++k) {
        if (k) out += ',';
        std::string tok;
        for (std::size_t j = 0; j < binary[k].size(); ++j)
            if (binary[k][j] == '1') tok += static_cast<char>('1' + j);
        out += tok.empty() ? "e" : tok;
    }
    return out;
}

NeuralCode bitflip_code(const NeuralCode& code, int i) {
    check_index(i, code.n());
    std::vector<std::uint32_t> words;
    words.reserve(code.size());
    for (std::uint32_t w : code.words()) words.push_back(w ^ singleton(i));
    return NeuralCode(code.n(), std::move(words));
}

CodeEnumerator::CodeEnumerator(int n, bool include_empty_code, int cap) : n_(n) {
    check_n(n);
    if (n > 5) throw CodeError("code enumeration supports n <= 5");
    if (n > cap)
        throw CodeError("enumeration of codes on n=" + std::to_string(n) +
                        " neurons exceeds the cap of " + std::to_string(cap));
    next_mask_ = include_empty_code ? 0 : 1;
    count_ = code_universe_size(n, include_empty_code);
}

std::optional<NeuralCode> CodeEnumerator::next() {
    if (count_ == 0) return std::nullopt;
    std::vector<std::uint32_t> words;
    for (std::uint64_t m = next_mask_; m != 0; m &= m - 1)
        words.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    ++next_mask_;
    --count_;
    return NeuralCode(n_, std::move(words));
}

std::uint64_t code_universe_size(int n, bool include_empty_code) {
    std::uint64_t vectors = std::uint64_t{1} << n;
    std::uint64_t subsets = vectors >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vectors);
    return include_empty_code ? subsets : subsets - 1;
}

std::vector<NeuralCode> enumerate_codes(int n, bool include_empty_code, int cap) {
    CodeEnumerator stream(n, include_empty_code, cap);
    std::vector<NeuralCode> out;
    while (auto code = stream.next()) out.push_back(std::move(*code));
    return out;
}

std::vector<NeuralCode> sample_codes(int n, std::size_t count, std::uint64_t seed) {
    check_n(n);
    if (n > 6) throw CodeError("sampling supported for n <= 6");
    std::uint64_t universe = code_universe_size(n, false);
    if (count > universe) count = static_cast<std::size_t>(universe);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, universe);
    std::set<std::uint64_t> masks;
    while (masks.size() < count) masks.insert(dist(rng));

    std::vector<NeuralCode> out;
    out.reserve(count);
    for (std::uint64_t mask : masks) {
        std::vector<std::uint32_t> words;
        for (std::uint64_t m = mask; m != 0; m &= m - 1)
            words.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
        out.push_back(NeuralCode(n, std::move(words)));
    }
    return out;
}

}  // namespace nring
