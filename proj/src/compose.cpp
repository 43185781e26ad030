#include <algorithm>
#include <memory>
#include <string>

#include "rackca/ca.hpp"

namespace rackca {

namespace {

std::int64_t as_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// First (x, r) where the two maps differ, ascending in x then r.
std::optional<Witness> first_difference(const GlobalMap& lhs, const GlobalMap& rhs, const char* kind,
                                        const char* lhs_name, const char* rhs_name) {
    for (ConfigIndex x = 0; x < lhs.size(); ++x) {
        if (lhs(x) == rhs(x)) continue;
        for (Element r = 0; r < lhs.cells(); ++r) {
            if (lhs.value(x, r) != rhs.value(x, r)) {
                return Witness(kind)
                    .add("x", as_i64(x))
                    .add("r", r)
                    .add(lhs_name, lhs.value(x, r))
                    .add(rhs_name, rhs.value(x, r));
            }
        }
    }
    return std::nullopt;
}

void require_compatible(const CellularAutomaton& a, const CellularAutomaton& b) {
    if (!(a.rack() == b.rack()) || a.alphabet() != b.alphabet()) {
        throw ValidationError("IncompatibleAutomata", "automata must share rack and alphabet");
    }
}

} // namespace

Subset inverse_product(const FiniteRack& rack, const Subset& m1, const Subset& m2) {
    Subset out;
    for (Element a : m1) {
        for (Element b : m2) out.push_back(rack.inv_op(a, b));
    }
    return normalized(std::move(out));
}

Composition compose_checked(const CellularAutomaton& sigma, const CellularAutomaton& tau, std::uint64_t budget) {
    require_compatible(sigma, tau);
    const FiniteRack& rack = tau.rack();
    const std::size_t q = tau.alphabet();
    const Subset& m1 = sigma.memory();
    const Subset& m2 = tau.memory();
    const Subset m3 = inverse_product(rack, m1, m2);

    // position of m1 |>^-1 m2 inside m3, per (i, j)
    std::vector<std::vector<std::size_t>> slot(m1.size(), std::vector<std::size_t>(m2.size()));
    for (std::size_t i = 0; i < m1.size(); ++i) {
        for (std::size_t j = 0; j < m2.size(); ++j) {
            const Element e = rack.inv_op(m1[i], m2[j]);
            const auto it = std::lower_bound(m3.begin(), m3.end(), e);
            if (it == m3.end() || *it != e) {
                throw ValidationError("PatternNotCovered", "cell " + std::to_string(e) + " missing from M1 |>^-1 M2");
            }
            slot[i][j] = static_cast<std::size_t>(it - m3.begin());
        }
    }

    const ConfigIndex patterns = checked_power(q, m3.size(), budget, "composed rule table");
    std::vector<Symbol> rule(patterns);
    std::vector<Symbol> y(m3.size());
    for (ConfigIndex p = 0; p < patterns; ++p) {
        ConfigIndex rest = p;
        for (auto& v : y) {
            v = static_cast<Symbol>(rest % q);
            rest /= q;
        }
        // y_bar(m1_i) = mu2(y_{m1_i}); mu3(y) = mu1(y_bar)
        ConfigIndex bar_key = 0;
        for (std::size_t i = m1.size(); i-- > 0;) {
            ConfigIndex key = 0;
            for (std::size_t j = m2.size(); j-- > 0;) key = key * q + y[slot[i][j]];
            bar_key = bar_key * q + tau.rule()[key];
        }
        rule[p] = sigma.rule()[bar_key];
    }

    Composition c{compose(global_map(sigma, budget), global_map(tau, budget)),
                  CellularAutomaton(tau.rack_ptr(), q, m3, std::move(rule)), Verdict::holds("P5.1")};
    if (auto w = first_difference(c.composite, global_map(c.claimed, budget), "composition", "composite", "claimed")) {
        c.verdict = Verdict::fails("P5.1", std::move(*w));
    }
    return c;
}

Verdict memory_identity_check(const FiniteRack& rack, const Subset& memory) {
    for (Element a : memory) {
        for (Element b : memory) {
            const Element e = rack.inv_op(a, b);
            if (!contains(memory, e)) {
                return Verdict::fails("P5.4-memory", Witness("memory-identity").add("m1", a).add("m2", b).add("element", e));
            }
        }
    }
    // and M |>^-1 M must cover M
    const Subset product = inverse_product(rack, memory, memory);
    for (Element m : memory) {
        if (!contains(product, m)) {
            return Verdict::fails("P5.4-memory", Witness("memory-identity-missing").add("element", m));
        }
    }
    return Verdict::holds("P5.4-memory");
}

ShelfCheck shelf_claims_check(const CellularAutomaton& sigma, const CellularAutomaton& tau,
                              const CellularAutomaton& psi, std::uint64_t budget) {
    require_compatible(sigma, tau);
    require_compatible(sigma, psi);
    const GlobalMap s = global_map(sigma, budget);
    const GlobalMap t = global_map(tau, budget);
    const GlobalMap p = global_map(psi, budget);
    const GlobalMap lhs = compose(s, compose(t, p));
    const GlobalMap rhs = compose(compose(s, t), compose(s, p));

    ShelfCheck out{Verdict::holds("P5.3"), Verdict::holds("P5.4-memory")};
    if (auto w = first_difference(lhs, rhs, "self-distributivity", "lhs", "rhs")) {
        out.law = Verdict::fails("P5.3", std::move(*w));
    }
    const CellularAutomaton* parts[] = {&sigma, &tau, &psi};
    for (std::size_t i = 0; i < 3; ++i) {
        Verdict v = memory_identity_check(sigma.rack(), parts[i]->memory());
        if (v.failed()) {
            v.witness->add("which", static_cast<std::int64_t>(i));
            out.memory_identity = std::move(v);
            break;
        }
    }
    return out;
}

ShelfCheck idempotence_check(const CellularAutomaton& tau, std::uint64_t budget) {
    if (!tau.rack().is_quandle()) {
        return {Verdict::skipped("P5.4", "universe is not a quandle"),
                Verdict::skipped("P5.4-memory", "universe is not a quandle")};
    }
    const GlobalMap t = global_map(tau, budget);
    ShelfCheck out{Verdict::holds("P5.4"), memory_identity_check(tau.rack(), tau.memory())};
    if (auto w = first_difference(compose(t, t), t, "idempotence", "lhs", "rhs")) {
        out.law = Verdict::fails("P5.4", std::move(*w));
    }
    return out;
}

bool is_bijective(const CellularAutomaton& ca, std::uint64_t budget) { return is_bijective(global_map(ca, budget)); }

Inversion invert_checked(const RackPtr& rack, const GlobalMap& f) {
    Inversion out;
    out.bijective = is_bijective(f);
    if (!out.bijective) {
        out.verdict = Verdict::skipped("T5.6", "map is not bijective");
        return out;
    }
    out.inverse = inverse(f);
    try {
        MinimalMemory mm = minimal_memory(*rack, *out.inverse);
        out.inverse_ca = CellularAutomaton(rack, f.alphabet(), mm.rule.memory, mm.rule.rule);
        out.verdict = Verdict::holds("T5.6");
    } catch (const NotACellularAutomaton& e) {
        out.not_a_ca = e.conflict();
        out.verdict = Verdict::fails("T5.6", e.conflict().witness());
    }
    return out;
}

Inversion invert_checked(const CellularAutomaton& ca, std::uint64_t budget) {
    return invert_checked(ca.rack_ptr(), global_map(ca, budget));
}

Majority majority_ca(const FiniteGroup& g, const Subset& memory_in, std::uint64_t budget) {
    const Subset m = normalized(memory_in);
    if (m.empty()) throw ValidationError("EmptyMemory", "majority needs a non-empty memory set");
    if (m.back() >= g.order()) throw ValidationError("MemoryOutOfRange", "memory element outside the group");
    auto rack = std::make_shared<const FiniteRack>(conjugation_rack(g));
    const Element e = g.identity();
    Subset full = m;
    full.push_back(e);
    full = normalized(std::move(full));
    const std::size_t e_pos = static_cast<std::size_t>(std::lower_bound(full.begin(), full.end(), e) - full.begin());

    const ConfigIndex patterns = checked_power(2, full.size(), budget, "majority rule table");
    std::vector<Symbol> rule(patterns);
    for (ConfigIndex p = 0; p < patterns; ++p) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < full.size(); ++i) {
            if (contains(m, full[i]) && ((p >> i) & 1)) ++ones;
        }
        const std::size_t twice = 2 * ones;
        rule[p] = twice > m.size() ? 1 : twice < m.size() ? 0 : static_cast<Symbol>((p >> e_pos) & 1);
    }
    CellularAutomaton ca(rack, 2, full, std::move(rule));

    const ConfigSpace space(rack->order(), 2, budget);
    std::vector<ConfigIndex> direct(space.size());
    for (ConfigIndex x = 0; x < space.size(); ++x) {
        ConfigIndex out = 0;
        for (Element r = 0; r < space.cells(); ++r) {
            std::size_t ones = 0;
            for (Element k : m) ones += space.digit(x, rack->op(r, k));
            const std::size_t twice = 2 * ones;
            const Symbol v = twice > m.size() ? 1 : twice < m.size() ? 0 : space.digit(x, r);
            out += v * space.weight(r);
        }
        direct[x] = out;
    }
    Majority result{std::move(ca), GlobalMap(space.cells(), 2, std::move(direct)), Verdict::holds("majority-consistency")};
    if (auto w = first_difference(global_map(result.ca, budget), result.direct, "majority", "automaton", "direct")) {
        result.agreement = Verdict::fails("majority-consistency", std::move(*w));
    }
    return result;
}

} // namespace rackca
