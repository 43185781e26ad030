#include "rackca/config.hpp"

#include <string>

#include "rackca/error.hpp"

namespace rackca {

Configuration::Configuration(std::size_t q, std::vector<Symbol> cells) : q_(q), cells_(std::move(cells)) {
    if (q_ == 0) throw ValidationError("InvalidAlphabet", "alphabet size must be positive");
    for (std::size_t s = 0; s < cells_.size(); ++s) {
        if (cells_[s] >= q_) {
            throw ValidationError("SymbolOutOfRange",
                                  "cell " + std::to_string(s) + " holds " + std::to_string(cells_[s]) +
                                      " but q = " + std::to_string(q_),
                                  {static_cast<std::int64_t>(s)});
        }
    }
}

Configuration Configuration::constant(std::size_t n, std::size_t q, Symbol value) {
    return Configuration(q, std::vector<Symbol>(n, value));
}

ConfigIndex encode_config(const Configuration& x) {
    ConfigIndex i = 0;
    for (std::size_t s = x.size(); s-- > 0;) i = i * x.alphabet() + x[static_cast<Element>(s)];
    return i;
}

Configuration decode_config(std::size_t n, std::size_t q, ConfigIndex i) {
    const ConfigIndex limit = checked_power(q, n, ~ConfigIndex{0}, "configuration space");
    if (i >= limit) {
        throw ValidationError("IndexOutOfRange", std::to_string(i) + " >= q^n = " + std::to_string(limit),
                              {static_cast<std::int64_t>(i)});
    }
    std::vector<Symbol> cells(n);
    for (std::size_t s = 0; s < n; ++s) {
        cells[s] = static_cast<Symbol>(i % q);
        i /= q;
    }
    return Configuration(q, std::move(cells));
}

PatternKey encode_pattern(const Configuration& x, const Subset& memory) {
    PatternKey key{memory, 0};
    for (std::size_t i = memory.size(); i-- > 0;) {
        if (memory[i] >= x.size()) {
            throw ValidationError("IndexOutOfRange", "memory element " + std::to_string(memory[i]),
                                  {static_cast<std::int64_t>(memory[i])});
        }
        key.index = key.index * x.alphabet() + x[memory[i]];
    }
    return key;
}

std::vector<Symbol> decode_pattern(const PatternKey& key, std::size_t q) {
    const ConfigIndex limit = checked_power(q, key.memory.size(), ~ConfigIndex{0}, "pattern space");
    if (key.index >= limit) {
        throw ValidationError("IndexOutOfRange", std::to_string(key.index) + " >= " + std::to_string(limit),
                              {static_cast<std::int64_t>(key.index)});
    }
    std::vector<Symbol> values(key.memory.size());
    ConfigIndex i = key.index;
    for (auto& v : values) {
        v = static_cast<Symbol>(i % q);
        i /= q;
    }
    return values;
}

ConfigIndex config_count(std::size_t n, std::size_t q, std::uint64_t budget) {
    return checked_power(q, n, budget, "configuration space q^n");
}

Configuration shift(const FiniteRack& rack, Element r, const Configuration& x) {
    if (r >= rack.order()) throw ValidationError("IndexOutOfRange", "element " + std::to_string(r), {r});
    if (x.size() != rack.order()) {
        throw ValidationError("SizeMismatch", "configuration has " + std::to_string(x.size()) + " cells, rack has " +
                                                  std::to_string(rack.order()));
    }
    std::vector<Symbol> out(x.size());
    for (Element s = 0; s < x.size(); ++s) out[s] = x[rack.inv_op(r, s)];
    return Configuration(x.alphabet(), std::move(out));
}

// ---- ConfigSpace ----------------------------------------------------------

ConfigSpace::ConfigSpace(std::size_t n, std::size_t q, std::uint64_t budget)
    : n_(n), q_(q), size_(config_count(n, q, budget)), weight_(n) {
    if (q == 0) throw ValidationError("InvalidAlphabet", "alphabet size must be positive");
    ConfigIndex w = 1;
    for (std::size_t s = 0; s < n; ++s) {
        weight_[s] = w;
        w *= q;
    }
}

void ConfigSpace::decode(ConfigIndex i, std::span<Symbol> out) const {
    for (std::size_t s = 0; s < n_; ++s) {
        out[s] = static_cast<Symbol>(i % q_);
        i /= q_;
    }
}

ConfigIndex ConfigSpace::encode(std::span<const Symbol> cells) const {
    ConfigIndex i = 0;
    for (std::size_t s = 0; s < n_; ++s) i += cells[s] * weight_[s];
    return i;
}

std::vector<std::vector<ConfigIndex>> shift_table(const FiniteRack& rack, const ConfigSpace& space) {
    const std::size_t n = rack.order();
    std::vector<std::vector<ConfigIndex>> table(n, std::vector<ConfigIndex>(space.size()));
    std::vector<Symbol> x(n);
    for (ConfigIndex i = 0; i < space.size(); ++i) {
        space.decode(i, x);
        for (Element r = 0; r < n; ++r) {
            ConfigIndex out = 0;
            for (Element s = 0; s < n; ++s) out += x[rack.inv_op(r, s)] * space.weight(s);
            table[r][i] = out;
        }
    }
    return table;
}

// ---- checks ---------------------------------------------------------------

Verdict shift_action_check(const FiniteRack& rack, std::size_t q, std::uint64_t budget) {
    const ConfigSpace space(rack.order(), q, budget);
    const auto table = shift_table(rack, space);
    const auto n = static_cast<Element>(rack.order());

    for (Element r = 0; r < n; ++r) {
        std::vector<ConfigIndex> preimage(space.size(), space.size());
        for (ConfigIndex i = 0; i < space.size(); ++i) {
            const ConfigIndex j = table[r][i];
            if (preimage[j] != space.size()) {
                return Verdict::fails("P2.15", Witness("shift-not-injective")
                                                   .add("r", r)
                                                   .add("x", static_cast<std::int64_t>(preimage[j]))
                                                   .add("y", static_cast<std::int64_t>(i))
                                                   .add("image", static_cast<std::int64_t>(j)));
            }
            preimage[j] = i;
        }
    }
    for (Element r1 = 0; r1 < n; ++r1) {
        for (Element r2 = 0; r2 < n; ++r2) {
            const Element prod = rack.op(r1, r2);
            for (ConfigIndex i = 0; i < space.size(); ++i) {
                const ConfigIndex lhs = table[r1][table[r2][i]];
                const ConfigIndex rhs = table[prod][table[r1][i]];
                if (lhs != rhs) {
                    return Verdict::fails("P2.15", Witness("shift-compatibility")
                                                       .add("r1", r1)
                                                       .add("r2", r2)
                                                       .add("x", static_cast<std::int64_t>(i))
                                                       .add("lhs", static_cast<std::int64_t>(lhs))
                                                       .add("rhs", static_cast<std::int64_t>(rhs)));
                }
            }
        }
    }
    Verdict v = Verdict::holds("P2.15");
    v.note = "continuity of each shift holds by finiteness of the discrete space";
    return v;
}

Verdict shift_continuity_check(const FiniteRack& rack, std::size_t q, std::uint64_t budget) {
    const ConfigSpace space(rack.order(), q, budget);
    const auto table = shift_table(rack, space);
    const auto n = static_cast<Element>(rack.order());
    for (Element r = 0; r < n; ++r) {
        for (ConfigIndex i = 0; i < space.size(); ++i) {
            for (Element s = 0; s < n; ++s) {
                const Symbol lhs = space.digit(table[r][i], s);
                const Symbol rhs = space.digit(i, rack.inv_op(r, s));
                if (lhs != rhs) {
                    return Verdict::fails("P4.1", Witness("projection")
                                                      .add("r", r)
                                                      .add("s", s)
                                                      .add("x", static_cast<std::int64_t>(i))
                                                      .add("lhs", lhs)
                                                      .add("rhs", rhs));
                }
            }
        }
    }
    return Verdict::holds("P4.1");
}

Verdict closure_check(const FiniteRack& rack, const Subset& s, const std::string& claim) {
    for (Element r1 : s) {
        for (Element r2 : s) {
            const Element prod = rack.op(r1, r2);
            if (!contains(s, prod)) {
                return Verdict::fails(claim, Witness("not-closed").add("r1", r1).add("r2", r2).add("product", prod));
            }
        }
    }
    return Verdict::holds(claim);
}

CheckedSubset config_stabilizer(const FiniteRack& rack, const Configuration& x) {
    if (x.size() != rack.order()) {
        throw ValidationError("SizeMismatch", "configuration and rack sizes differ");
    }
    Subset by_shift;
    Subset pointwise;
    for (Element r = 0; r < rack.order(); ++r) {
        if (shift(rack, r, x) == x) by_shift.push_back(r);
        bool fixed = true;
        for (Element s = 0; s < rack.order() && fixed; ++s) fixed = x[s] == x[rack.inv_op(r, s)];
        if (fixed) pointwise.push_back(r);
    }
    if (by_shift != pointwise) {
        Element r = 0;
        while (r < rack.order() && contains(by_shift, r) == contains(pointwise, r)) ++r;
        return {by_shift, Verdict::fails("P2.19", Witness("stabilizer-characterizations")
                                                      .add("x", static_cast<std::int64_t>(encode_config(x)))
                                                      .add("r", r)
                                                      .add("lhs", contains(by_shift, r))
                                                      .add("rhs", contains(pointwise, r)))};
    }
    return {by_shift, closure_check(rack, by_shift, "L2.14")};
}

bool in_cylinder(const Configuration& x, const Subset& omega, const Configuration& y) {
    for (Element s : omega) {
        if (x[s] != y[s]) return false;
    }
    return true;
}

} // namespace rackca
