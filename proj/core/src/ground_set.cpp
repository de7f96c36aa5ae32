#include "csys/ground_set.hpp"

#include <algorithm>
#include <numeric>

namespace csys {

bool canonical_less(Mask a, Mask b) {
    if (a == b) return false;
    const int sa = set_size(a), sb = set_size(b);
    if (sa != sb) return sa < sb;
    // Same size: compare sorted member indices lexicographically. The first
    // index where the sets differ decides; the set holding the smaller one wins.
    Mask diff = a ^ b;
    const int lowest = std::countr_zero(diff);
    return (a >> lowest) & 1u;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > kMaxGroundSize) {
        throw CapacityError("ground set of size " + std::to_string(labels_.size()) +
                            " exceeds the hard cap of " + std::to_string(kMaxGroundSize));
    }
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        auto [it, fresh] = index_.emplace(labels_[static_cast<std::size_t>(i)], i);
        if (!fresh) throw InputError("duplicate element label '" + labels_[static_cast<std::size_t>(i)] + "'");
    }
}

int GroundSet::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InputError("element '" + name + "' is not in the ground set");
    return it->second;
}

Mask GroundSet::mask_of(const std::vector<std::string>& names) const {
    Mask m = 0;
    for (const auto& name : names) m |= Mask{1} << index_of(name);
    return m;
}

std::vector<std::string> GroundSet::names_of(Mask m) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if (m & (Mask{1} << i)) out.push_back(labels_[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<Mask> all_masks_canonical(int n) {
    std::vector<Mask> masks(std::size_t{1} << n);
    std::iota(masks.begin(), masks.end(), Mask{0});
    std::sort(masks.begin(), masks.end(), canonical_less);
    return masks;
}

} // namespace csys
