#include "rackca/ca.hpp"

#include <memory>
#include <string>

namespace rackca {

namespace {

constexpr std::uint64_t kRuleLimit = std::uint64_t{1} << 24;

std::int64_t as_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

void require_same_rack_size(const FiniteRack& rack, const GlobalMap& f) {
    if (f.cells() != rack.order()) {
        throw ValidationError("SizeMismatch", "map acts on " + std::to_string(f.cells()) + " cells, rack has " +
                                                  std::to_string(rack.order()));
    }
}

} // namespace

// ---- GlobalMap ------------------------------------------------------------

GlobalMap::GlobalMap(std::size_t n, std::size_t q, std::vector<ConfigIndex> table)
    : n_(n), q_(q), table_(std::move(table)) {
    const ConfigIndex count = checked_power(q, n, ~ConfigIndex{0} >> 1, "configuration space");
    if (table_.size() != count) {
        throw ValidationError("SizeMismatch", "map table has " + std::to_string(table_.size()) +
                                                  " entries, expected q^n = " + std::to_string(count));
    }
    for (ConfigIndex i = 0; i < count; ++i) {
        if (table_[i] >= count) {
            throw ValidationError("EntryOutOfRange", "table[" + std::to_string(i) + "] = " + std::to_string(table_[i]),
                                  {as_i64(i)});
        }
    }
}

Symbol GlobalMap::value(ConfigIndex x, Element r) const {
    ConfigIndex v = table_[x];
    for (Element s = 0; s < r; ++s) v /= q_;
    return static_cast<Symbol>(v % q_);
}

Configuration GlobalMap::apply(const Configuration& x) const {
    if (x.size() != n_ || x.alphabet() != q_) throw ValidationError("SizeMismatch", "configuration does not match map");
    return decode_config(n_, q_, table_[encode_config(x)]);
}

GlobalMap identity_map(std::size_t n, std::size_t q, std::uint64_t budget) {
    const ConfigIndex count = config_count(n, q, budget);
    std::vector<ConfigIndex> t(count);
    for (ConfigIndex i = 0; i < count; ++i) t[i] = i;
    return GlobalMap(n, q, std::move(t));
}

GlobalMap constant_map(const Configuration& value, std::uint64_t budget) {
    const ConfigIndex count = config_count(value.size(), value.alphabet(), budget);
    return GlobalMap(value.size(), value.alphabet(), std::vector<ConfigIndex>(count, encode_config(value)));
}

GlobalMap compose(const GlobalMap& outer, const GlobalMap& inner) {
    if (outer.cells() != inner.cells() || outer.alphabet() != inner.alphabet()) {
        throw ValidationError("SizeMismatch", "composed maps live on different configuration spaces");
    }
    std::vector<ConfigIndex> t(inner.size());
    for (ConfigIndex i = 0; i < inner.size(); ++i) t[i] = outer(inner(i));
    return GlobalMap(inner.cells(), inner.alphabet(), std::move(t));
}

bool is_constant(const GlobalMap& f) {
    for (ConfigIndex i = 1; i < f.size(); ++i) {
        if (f(i) != f(0)) return false;
    }
    return true;
}

bool is_bijective(const GlobalMap& f) {
    std::vector<bool> hit(f.size(), false);
    for (ConfigIndex i = 0; i < f.size(); ++i) {
        if (hit[f(i)]) return false;
        hit[f(i)] = true;
    }
    return true;
}

GlobalMap inverse(const GlobalMap& f) {
    if (!is_bijective(f)) throw ValidationError("NotBijective", "map has no inverse");
    std::vector<ConfigIndex> t(f.size());
    for (ConfigIndex i = 0; i < f.size(); ++i) t[f(i)] = i;
    return GlobalMap(f.cells(), f.alphabet(), std::move(t));
}

// ---- CellularAutomaton ----------------------------------------------------

CellularAutomaton::CellularAutomaton(RackPtr rack, std::size_t q, Subset memory, std::vector<Symbol> rule)
    : rack_(std::move(rack)), q_(q), memory_(normalized(std::move(memory))), rule_(std::move(rule)) {
    if (!rack_) throw ValidationError("MissingRack", "a cellular automaton needs a rack");
    if (q_ == 0) throw ValidationError("InvalidAlphabet", "alphabet size must be positive");
    if (!memory_.empty() && memory_.back() >= rack_->order()) {
        throw ValidationError("MemoryOutOfRange", "memory element " + std::to_string(memory_.back()),
                              {memory_.back()});
    }
    const std::uint64_t patterns = checked_power(q_, memory_.size(), kRuleLimit, "rule table q^|M|");
    if (rule_.size() != patterns) {
        throw ValidationError("RuleSizeMismatch", "rule has " + std::to_string(rule_.size()) +
                                                      " entries, expected q^|M| = " + std::to_string(patterns));
    }
    for (std::size_t i = 0; i < rule_.size(); ++i) {
        if (rule_[i] >= q_) {
            throw ValidationError("SymbolOutOfRange", "rule[" + std::to_string(i) + "] = " + std::to_string(rule_[i]),
                                  {as_i64(i)});
        }
    }
}

Symbol CellularAutomaton::local(std::span<const Symbol> x, Element r) const {
    ConfigIndex pattern = 0;
    for (std::size_t i = memory_.size(); i-- > 0;) pattern = pattern * q_ + x[rack_->inv_op(r, memory_[i])];
    return rule_[pattern];
}

CellularAutomaton constant_ca(RackPtr rack, std::size_t q, Symbol value) {
    return CellularAutomaton(std::move(rack), q, {}, {value});
}

Configuration ca_apply(const CellularAutomaton& ca, const Configuration& x) {
    if (x.size() != ca.rack().order() || x.alphabet() != ca.alphabet()) {
        throw ValidationError("SizeMismatch", "configuration does not match the automaton");
    }
    std::vector<Symbol> out(x.size());
    for (Element r = 0; r < x.size(); ++r) out[r] = ca.local(x.cells(), r);
    return Configuration(ca.alphabet(), std::move(out));
}

std::vector<Configuration> ca_evolve(const CellularAutomaton& ca, const Configuration& x, std::size_t steps) {
    std::vector<Configuration> trace{x};
    trace.reserve(steps + 1);
    for (std::size_t i = 0; i < steps; ++i) trace.push_back(ca_apply(ca, trace.back()));
    return trace;
}

GlobalMap global_map(const CellularAutomaton& ca, std::uint64_t budget) {
    const ConfigSpace space(ca.rack().order(), ca.alphabet(), budget);
    std::vector<ConfigIndex> t(space.size());
    std::vector<Symbol> x(space.cells());
    for (ConfigIndex i = 0; i < space.size(); ++i) {
        space.decode(i, x);
        ConfigIndex out = 0;
        for (Element r = 0; r < space.cells(); ++r) out += ca.local(x, r) * space.weight(r);
        t[i] = out;
    }
    return GlobalMap(space.cells(), space.alphabet(), std::move(t));
}

Subset dependence_set(const CellularAutomaton& ca, Element r) {
    if (r >= ca.rack().order()) throw ValidationError("IndexOutOfRange", "element " + std::to_string(r), {r});
    Subset d;
    for (Element m : ca.memory()) d.push_back(ca.rack().inv_op(r, m));
    return normalized(std::move(d));
}

Verdict locality_check(const CellularAutomaton& ca, std::uint64_t budget) {
    const GlobalMap f = global_map(ca, budget);
    const ConfigSpace space(f.cells(), f.alphabet(), budget);
    for (Element r = 0; r < f.cells(); ++r) {
        const Subset d = dependence_set(ca, r);
        const ConfigIndex patterns = checked_power(f.alphabet(), d.size(), budget, "dependence patterns");
        std::vector<ConfigIndex> owner(patterns, space.size());
        for (ConfigIndex i = 0; i < space.size(); ++i) {
            ConfigIndex key = 0;
            for (std::size_t k = d.size(); k-- > 0;) key = key * f.alphabet() + space.digit(i, d[k]);
            if (owner[key] == space.size()) {
                owner[key] = i;
            } else if (f.value(owner[key], r) != f.value(i, r)) {
                return Verdict::fails("P4.2", Witness("locality")
                                                  .add("r", r)
                                                  .add("x", as_i64(owner[key]))
                                                  .add("y", as_i64(i))
                                                  .add("lhs", f.value(owner[key], r))
                                                  .add("rhs", f.value(i, r)));
            }
        }
    }
    Verdict v = Verdict::holds("P4.2");
    v.note = "continuity on the finite discrete space reduces to this locality scan";
    return v;
}

// ---- equivariance ---------------------------------------------------------

Verdict equivariance_check(const FiniteRack& rack, const GlobalMap& f, const Subset& s, const std::string& claim) {
    require_same_rack_size(rack, f);
    const ConfigSpace space(f.cells(), f.alphabet(), ~std::uint64_t{0});
    const auto shifts = shift_table(rack, space);
    for (Element r : s) {
        for (ConfigIndex i = 0; i < space.size(); ++i) {
            const ConfigIndex lhs = f(shifts[r][i]);
            const ConfigIndex rhs = shifts[r][f(i)];
            if (lhs != rhs) {
                return Verdict::fails(claim, Witness("equivariance")
                                                 .add("s", r)
                                                 .add("x", as_i64(i))
                                                 .add("lhs", as_i64(lhs))
                                                 .add("rhs", as_i64(rhs)));
            }
        }
    }
    return Verdict::holds(claim);
}

CheckedSubset eq_set(const FiniteRack& rack, const GlobalMap& f) {
    require_same_rack_size(rack, f);
    const ConfigSpace space(f.cells(), f.alphabet(), ~std::uint64_t{0});
    const auto shifts = shift_table(rack, space);
    Subset eq;
    for (Element r = 0; r < rack.order(); ++r) {
        bool commutes = true;
        for (ConfigIndex i = 0; i < space.size() && commutes; ++i) commutes = f(shifts[r][i]) == shifts[r][f(i)];
        if (commutes) eq.push_back(r);
    }
    return {eq, closure_check(rack, eq, "P3.7")};
}

CheckedSubset eq_set(const CellularAutomaton& ca, std::uint64_t budget) {
    return eq_set(ca.rack(), global_map(ca, budget));
}

CheckedSubset stab_eq(const FiniteRack& rack, const GlobalMap& f, const Configuration& x) {
    require_same_rack_size(rack, f);
    const Subset eq = eq_set(rack, f).elements;
    const Subset here = intersection(config_stabilizer(rack, x).elements, eq);
    const Configuration fx = f.apply(x);
    const Subset there = intersection(config_stabilizer(rack, fx).elements, eq);

    Verdict check = closure_check(rack, here, "P3.11");
    if (check.held() && !is_subset_of(here, there)) {
        Element r = 0;
        for (Element e : here) {
            if (!contains(there, e)) {
                r = e;
                break;
            }
        }
        check = Verdict::fails("P3.11", Witness("stab-eq-inclusion")
                                            .add("x", as_i64(encode_config(x)))
                                            .add("r", r)
                                            .add("image", as_i64(encode_config(fx))));
    }
    if (check.held() && here != there && is_bijective(f)) {
        Element r = 0;
        for (Element e : there) {
            if (!contains(here, e)) {
                r = e;
                break;
            }
        }
        check = Verdict::fails("P3.11", Witness("stab-eq-injective-equality")
                                            .add("x", as_i64(encode_config(x)))
                                            .add("r", r)
                                            .add("image", as_i64(encode_config(fx))));
    }
    return {here, check};
}

// ---- restriction ----------------------------------------------------------

CellularAutomaton restrict(const CellularAutomaton& ca, const Subset& s_in) {
    const Subset s = normalized(s_in);
    if (!is_subset_of(ca.memory(), s)) {
        throw ValidationError("MemoryNotContained", "the memory set is not contained in the restriction domain");
    }
    auto induced = std::make_shared<const FiniteRack>(induced_rack(ca.rack(), s));
    Subset memory;
    for (Element m : ca.memory()) {
        memory.push_back(static_cast<Element>(std::lower_bound(s.begin(), s.end(), m) - s.begin()));
    }
    return CellularAutomaton(std::move(induced), ca.alphabet(), std::move(memory), ca.rule());
}

GlobalMap restrict_map(const FiniteRack& rack, const GlobalMap& f, const Subset& s_in) {
    require_same_rack_size(rack, f);
    const Subset s = normalized(s_in);
    if (!is_subrack(rack, s)) throw ValidationError("NotASubrack", "restriction domain is not a subrack");
    const ConfigSpace full(f.cells(), f.alphabet(), ~std::uint64_t{0});
    const ConfigSpace sub(s.size(), f.alphabet(), ~std::uint64_t{0});
    std::vector<ConfigIndex> t(sub.size());
    for (ConfigIndex y = 0; y < sub.size(); ++y) {
        ConfigIndex x = 0;
        for (std::size_t i = 0; i < s.size(); ++i) x += sub.digit(y, static_cast<Element>(i)) * full.weight(s[i]);
        const ConfigIndex fx = f(x);
        ConfigIndex out = 0;
        for (std::size_t i = 0; i < s.size(); ++i) out += full.digit(fx, s[i]) * sub.weight(static_cast<Element>(i));
        t[y] = out;
    }
    return GlobalMap(s.size(), f.alphabet(), std::move(t));
}

} // namespace rackca
