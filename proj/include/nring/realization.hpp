#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nring/code.hpp"
#include "nring/indexset.hpp"

namespace nring {

// A finite stimulus space X with receptive fields U_1..U_n. Each point
// carries the set of regions containing it, so c(p) is immediate.
class Realization {
  public:
    Realization(int n, std::vector<std::string> point_ids, std::vector<IndexSet> memberships);

    int n() const { return n_; }
    std::size_t size() const { return ids_.size(); }
    const std::string& point_id(std::size_t p) const { return ids_[p]; }
    IndexSet membership(std::size_t p) const { return memberships_[p]; }

    // U_i as point indices.
    std::vector<std::size_t> field(int i) const;

  private:
    int n_;
    std::vector<std::string> ids_;
    std::vector<IndexSet> memberships_;
};

// Canonical finite realization: one point per codeword, U_i = { c : c_i = 1 }.
Realization realize(const NeuralCode& code);

// C(U) = { c(p) : p in X }.
NeuralCode code_of_realization(const Realization& r);

// U_sigma intersect (intersection over i in tau of U_i^c); U_empty = X.
// sigma and tau may overlap (then the region is empty).
std::vector<std::size_t> region(const Realization& r, IndexSet sigma, IndexSet tau);

// One line per point: "point_id: i,j,k" or "point_id: -" for no memberships.
Realization parse_realization(std::string_view text, int n);
std::string format_realization(const Realization& r);

}  // namespace nring
