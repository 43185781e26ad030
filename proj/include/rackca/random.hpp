#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rackca/ca.hpp"

namespace rackca {

// SplitMix64: state advances by 0x9e3779b97f4a7c15 and each output is the
// finalizer z ^= z >> 30; z *= 0xbf58476d1ce4e5b9; z ^= z >> 27;
// z *= 0x94d049bb133111eb; z ^= z >> 31 applied to the new state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, bound) by rejection: outputs at or above the largest
    // multiple of bound are redrawn, the rest are reduced mod bound.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Subsets of {0..n-1} with at most k elements, by size and then
// lexicographically.
std::vector<Subset> subsets_up_to(std::size_t n, std::size_t k);

// Memory set: one below() draw over subsets_up_to(n, max_memory); then one
// below(q) draw per rule entry in pattern order.
CellularAutomaton random_ca(const RackPtr& rack, std::size_t q, std::size_t max_memory, std::uint64_t seed);

// One below(q^n) draw per table entry in configuration order.
GlobalMap random_global_map(const FiniteRack& rack, std::size_t q, std::uint64_t seed,
                            std::uint64_t budget = kDefaultBudget);

// Every automaton with |M| <= max_memory, memory sets in subsets_up_to order
// and rules in increasing little-endian order. SizeLimitExceeded past budget.
std::vector<CellularAutomaton> all_cas(const RackPtr& rack, std::size_t q, std::size_t max_memory,
                                       std::uint64_t budget = kDefaultBudget);

} // namespace rackca
