#include <string>

#include "rackca/ca.hpp"

namespace rackca {

namespace {

std::int64_t as_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::int64_t mask_of(const Subset& s) {
    std::int64_t m = 0;
    for (Element e : s) m |= std::int64_t{1} << e;
    return m;
}

// Scans (x, r) in ascending order; `shifted(r, x)` is the index of r.x.
template <class Shifted>
MemoryOracleResult scan_memory(const ConfigSpace& space, const GlobalMap& f, const Subset& memory, Shifted shifted) {
    const std::size_t q = space.alphabet();
    const ConfigIndex patterns = checked_power(q, memory.size(), ~std::uint64_t{0}, "pattern table");
    const ConfigIndex unset = space.size();
    std::vector<ConfigIndex> owner_x(patterns, unset);
    std::vector<Element> owner_r(patterns, 0);
    LocalRule rule{memory, std::vector<Symbol>(patterns, 0), std::vector<bool>(patterns, false)};

    for (ConfigIndex x = 0; x < space.size(); ++x) {
        for (Element r = 0; r < space.cells(); ++r) {
            const ConfigIndex moved = shifted(r, x);
            ConfigIndex key = 0;
            for (std::size_t i = memory.size(); i-- > 0;) key = key * q + space.digit(moved, memory[i]);
            const Symbol out = f.value(x, r);
            if (owner_x[key] == unset) {
                owner_x[key] = x;
                owner_r[key] = r;
                rule.rule[key] = out;
                rule.constrained[key] = true;
            } else if (rule.rule[key] != out) {
                return MemoryConflict{owner_x[key], owner_r[key], x, r, key, rule.rule[key], out};
            }
        }
    }
    return rule;
}

} // namespace

Witness MemoryConflict::witness() const {
    return Witness("memory-conflict")
        .add("x", as_i64(x))
        .add("r", r)
        .add("y", as_i64(y))
        .add("r2", r2)
        .add("pattern", as_i64(pattern))
        .add("lhs", out_x)
        .add("rhs", out_y);
}

NotACellularAutomaton::NotACellularAutomaton(const MemoryConflict& c)
    : ValidationError("NotACellularAutomaton",
                      "configurations " + std::to_string(c.x) + " at cell " + std::to_string(c.r) + " and " +
                          std::to_string(c.y) + " at cell " + std::to_string(c.r2) +
                          " share a shifted pattern but map to " + std::to_string(c.out_x) + " and " +
                          std::to_string(c.out_y),
                      {as_i64(c.x), c.r, as_i64(c.y), c.r2}),
      conflict_(c) {}

MemoryOracleResult memory_oracle(const FiniteRack& rack, const GlobalMap& f, const Subset& memory_in) {
    if (f.cells() != rack.order()) throw ValidationError("SizeMismatch", "map and rack sizes differ");
    const Subset memory = normalized(memory_in);
    if (!memory.empty() && memory.back() >= rack.order()) {
        throw ValidationError("MemoryOutOfRange", "memory element " + std::to_string(memory.back()), {memory.back()});
    }
    const ConfigSpace space(f.cells(), f.alphabet(), ~std::uint64_t{0});
    std::vector<Symbol> x(space.cells());
    return scan_memory(space, f, memory, [&](Element r, ConfigIndex i) {
        space.decode(i, x);
        ConfigIndex out = 0;
        for (Element s = 0; s < space.cells(); ++s) out += x[rack.inv_op(r, s)] * space.weight(s);
        return out;
    });
}

MinimalMemory minimal_memory(const FiniteRack& rack, const GlobalMap& f) {
    if (f.cells() != rack.order()) throw ValidationError("SizeMismatch", "map and rack sizes differ");
    const std::size_t n = rack.order();
    if (n > 20) throw SizeLimitExceeded("memory subset scan is limited to n <= 20");
    const ConfigSpace space(n, f.alphabet(), ~std::uint64_t{0});
    const auto shifts = shift_table(rack, space);
    auto shifted = [&shifts](Element r, ConfigIndex x) { return shifts[r][x]; };

    auto full = scan_memory(space, f, full_set(n), shifted);
    if (auto* conflict = std::get_if<MemoryConflict>(&full)) throw NotACellularAutomaton(*conflict);

    MinimalMemory result;
    std::vector<LocalRule> rules;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const Subset m = subset_from_mask(mask);
        auto outcome = scan_memory(space, f, m, shifted);
        if (auto* rule = std::get_if<LocalRule>(&outcome)) {
            result.memory_sets.push_back(m);
            rules.push_back(std::move(*rule));
        }
    }

    std::size_t best = n + 1;
    for (const auto& m : result.memory_sets) best = std::min(best, m.size());
    result.intersection = full_set(n);
    for (std::size_t i = 0; i < result.memory_sets.size(); ++i) {
        const auto& m = result.memory_sets[i];
        result.intersection = intersection(result.intersection, m);
        if (m.size() == best) {
            if (result.minimal.empty()) result.rule = rules[i];
            result.minimal.push_back(m);
        }
    }

    if (result.minimal.size() == 1 && result.minimal.front() == result.intersection) {
        result.uniqueness = Verdict::holds("P3.16");
    } else {
        Witness w("memory-uniqueness");
        for (std::size_t i = 0; i < result.minimal.size(); ++i) {
            w.add("minimal_mask_" + std::to_string(i), mask_of(result.minimal[i]));
        }
        w.add("intersection_mask", mask_of(result.intersection));
        result.uniqueness = Verdict::fails("P3.16", std::move(w));
    }
    return result;
}

} // namespace rackca
