#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "csys/errors.hpp"

namespace csys {

// Subsets of a ground set are bitmasks over label indices.
using Mask = std::uint32_t;
using Value = std::int64_t;

inline constexpr int kMaxGroundSize = 16;   // single-subset exhaustive routines walk 2^n
inline constexpr int kMaxPairwiseSize = 10; // pairwise checks walk 4^n ordered pairs
inline constexpr int kMaxDpSize = 14;       // branch-width DP does 3^n partition work

inline int set_size(Mask m) { return std::popcount(m); }

// Canonical subset order: smaller sets first, ties broken lexicographically
// on the sorted member index sequence.
bool canonical_less(Mask a, Mask b);

class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    Mask full_mask() const {
        return size() == 0 ? 0 : static_cast<Mask>((1u << size()) - 1);
    }
    Mask complement(Mask m) const { return full_mask() & ~m; }

    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const { return labels_; }

    int index_of(const std::string& name) const; // throws InputError on unknown name
    Mask mask_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(Mask m) const;

    bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

// All masks 0..2^n-1 in canonical order.
std::vector<Mask> all_masks_canonical(int n);

} // namespace csys
