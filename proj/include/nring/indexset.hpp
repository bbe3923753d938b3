#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace nring {

// Subsets of [n] = {1,...,n} as bitmasks: bit i-1 holds element i.
using IndexSet = std::uint32_t;

constexpr IndexSet full_set(int n) {
    return n >= 32 ? ~IndexSet{0} : (IndexSet{1} << n) - 1;
}

constexpr IndexSet singleton(int i) { return IndexSet{1} << (i - 1); }

constexpr bool contains(IndexSet s, int i) { return (s >> (i - 1)) & 1u; }

constexpr bool subset_of(IndexSet a, IndexSet b) { return (a & ~b) == 0; }

constexpr int set_size(IndexSet s) { return std::popcount(s); }

std::vector<int> elements(IndexSet s);

// "{1,2}" for nonempty sets, "{}" for the empty set.
std::string format_set(IndexSet s);

}  // namespace nring
