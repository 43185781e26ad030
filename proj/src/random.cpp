#include "rackca/random.hpp"

#include <limits>

namespace rackca {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw ValidationError("InvalidBound", "bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    for (;;) {
        const std::uint64_t v = next();
        if (v <= limit) return v % bound;
    }
}

std::vector<Subset> subsets_up_to(std::size_t n, std::size_t k) {
    std::vector<Subset> out{Subset{}};
    for (std::size_t size = 1; size <= std::min(k, n); ++size) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            Subset s;
            for (std::size_t i = 0; i < n; ++i) {
                if (pick[i]) s.push_back(static_cast<Element>(i));
            }
            out.push_back(std::move(s));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

CellularAutomaton random_ca(const RackPtr& rack, std::size_t q, std::size_t max_memory, std::uint64_t seed) {
    if (max_memory > rack->order()) throw ValidationError("MemoryTooLarge", "max_memory exceeds the rack order");
    SplitMix64 rng(seed);
    const auto memories = subsets_up_to(rack->order(), max_memory);
    Subset memory = memories[rng.below(memories.size())];
    const std::uint64_t size = checked_power(q, memory.size(), kDefaultBudget, "rule table");
    std::vector<Symbol> rule(size);
    for (auto& v : rule) v = static_cast<Symbol>(rng.below(q));
    return CellularAutomaton(rack, q, std::move(memory), std::move(rule));
}

GlobalMap random_global_map(const FiniteRack& rack, std::size_t q, std::uint64_t seed, std::uint64_t budget) {
    const ConfigIndex size = config_count(rack.order(), q, budget);
    SplitMix64 rng(seed);
    std::vector<ConfigIndex> table(size);
    for (auto& v : table) v = rng.below(size);
    return GlobalMap(rack.order(), q, std::move(table));
}

std::vector<CellularAutomaton> all_cas(const RackPtr& rack, std::size_t q, std::size_t max_memory,
                                       std::uint64_t budget) {
    std::vector<CellularAutomaton> out;
    std::uint64_t total = 0;
    for (const Subset& memory : subsets_up_to(rack->order(), max_memory)) {
        const std::uint64_t patterns = checked_power(q, memory.size(), budget, "rule table");
        const std::uint64_t rules = checked_power(q, patterns, budget, "automaton family");
        total += rules;
        if (total > budget) throw SizeLimitExceeded("automaton family exceeds budget of " + std::to_string(budget));
        std::vector<Symbol> rule(patterns, 0);
        for (std::uint64_t i = 0; i < rules; ++i) {
            out.emplace_back(rack, q, memory, rule);
            for (auto& d : rule) {
                if (++d < q) break;
                d = 0;
            }
        }
    }
    return out;
}

} // namespace rackca
