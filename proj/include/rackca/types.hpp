#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace rackca {

// Elements of every finite structure are dense indices 0..n-1.
using Element = std::uint32_t;
// Alphabet symbols 0..q-1.
using Symbol = std::uint32_t;
// Little-endian base-q encoding of a configuration or pattern.
using ConfigIndex = std::uint64_t;

// A subset of a universe, kept sorted and duplicate-free.
using Subset = std::vector<Element>;

inline Subset normalized(Subset s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool contains(const Subset& s, Element e) { return std::binary_search(s.begin(), s.end(), e); }

inline bool is_subset_of(const Subset& inner, const Subset& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

inline Subset intersection(const Subset& a, const Subset& b) {
    Subset out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Subset full_set(std::size_t n) {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Element>(i);
    return s;
}

// Subset whose members are the set bits of `mask`.
inline Subset subset_from_mask(std::uint64_t mask) {
    Subset s;
    for (Element i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1) s.push_back(i);
    }
    return s;
}

} // namespace rackca
