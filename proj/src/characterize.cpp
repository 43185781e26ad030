#include <string>

#include "rackca/ca.hpp"

namespace rackca {

namespace {

std::int64_t as_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

Subset reindex(const Subset& s, const Subset& inside) {
    Subset out;
    for (Element e : inside) out.push_back(static_cast<Element>(std::lower_bound(s.begin(), s.end(), e) - s.begin()));
    return out;
}

} // namespace

LocalCharacterization local_characterization_check(const FiniteRack& rack, const GlobalMap& f, const Subset& s_in,
                                                   const Subset& memory_in, const std::vector<Symbol>& rule) {
    const Subset s = normalized(s_in);
    const Subset memory = normalized(memory_in);
    if (!is_subrack(rack, s)) throw ValidationError("NotASubrack", "S is not a subrack");
    if (!is_subset_of(memory, s)) throw ValidationError("MemoryNotContained", "M is not contained in S");

    const FiniteRack sub = induced_rack(rack, s);
    const GlobalMap fs = restrict_map(rack, f, s);
    const Subset m = reindex(s, memory);
    const std::size_t q = f.alphabet();
    if (rule.size() != checked_power(q, m.size(), ~std::uint64_t{0}, "rule table")) {
        throw ValidationError("RuleSizeMismatch", "rule table does not match q^|M|");
    }
    const ConfigSpace space(sub.order(), q, ~std::uint64_t{0});
    const auto shifts = shift_table(sub, space);
    auto mu = [&](ConfigIndex y) {
        ConfigIndex key = 0;
        for (std::size_t i = m.size(); i-- > 0;) key = key * q + space.digit(y, m[i]);
        return rule[key];
    };

    LocalCharacterization out;
    out.automaton = true;
    out.local = true;
    std::optional<Witness> local_witness;
    for (ConfigIndex y = 0; y < space.size(); ++y) {
        for (Element r = 0; r < sub.order(); ++r) {
            const Symbol value = fs.value(y, r);
            if (out.automaton && value != mu(shifts[r][y])) out.automaton = false;
            if (shifts[r][y] == y && value != mu(y) && out.local) {
                out.local = false;
                local_witness = Witness("local-characterization")
                                    .add("x", as_i64(y))
                                    .add("r", r)
                                    .add("lhs", value)
                                    .add("rhs", mu(y));
            }
        }
    }
    Verdict eq = equivariance_check(sub, fs, full_set(sub.order()), "P3.12");
    out.equivariant = eq.held();
    if (!out.equivariant) {
        out.verdict = std::move(eq);
    } else if (!out.local) {
        out.verdict = Verdict::fails("P3.12", std::move(*local_witness));
    } else {
        out.verdict = Verdict::holds("P3.12");
    }
    out.verdict.note = "configurations and cells are indexed within S";
    return out;
}

CurtisHedlund curtis_hedlund_check(const FiniteRack& rack, const GlobalMap& f, const Subset& s_in) {
    const Subset s = normalized(s_in);
    const FiniteRack sub = induced_rack(rack, s);
    const GlobalMap fs = restrict_map(rack, f, s);

    CurtisHedlund out;
    // memory sets are upward closed, so some M within S works iff S itself does
    auto oracle = memory_oracle(sub, fs, full_set(sub.order()));
    Verdict equivariance = equivariance_check(sub, fs, full_set(sub.order()), "T4.3");
    out.equivariant = equivariance.held();
    if (auto* rule = std::get_if<LocalRule>(&oracle)) {
        out.automaton = true;
        out.rule = *rule;
    }
    if (out.automaton == out.equivariant) {
        out.verdict = Verdict::holds("T4.3");
    } else if (out.automaton) {
        out.verdict = std::move(equivariance);
        out.verdict.witness->add("direction", 0);
    } else {
        Witness w = std::get<MemoryConflict>(oracle).witness();
        w.add("direction", 1);
        out.verdict = Verdict::fails("T4.3", std::move(w));
    }
    out.verdict.note = std::string("A=") + (out.automaton ? "true" : "false") +
                       " B=" + (out.equivariant ? "true" : "false") +
                       "; continuity is automatic on the finite discrete space; indices are within S";
    return out;
}

Verdict prop35_check(const FiniteRack& rack, const GlobalMap& f) {
    if (f.cells() != rack.order()) throw ValidationError("SizeMismatch", "map and rack sizes differ");
    const ConfigSpace space(f.cells(), f.alphabet(), ~std::uint64_t{0});
    const auto shifts = shift_table(rack, space);
    const auto n = static_cast<Element>(rack.order());
    for (ConfigIndex x = 0; x < space.size(); ++x) {
        for (Element r = 0; r < n; ++r) {
            for (Element s = 0; s < n; ++s) {
                const Symbol lhs = f.value(shifts[r][x], s);
                const Symbol rhs = f.value(shifts[s][x], rack.op(s, r));
                if (lhs != rhs) {
                    return Verdict::fails("P3.5", Witness("shifted-evaluation")
                                                      .add("x", as_i64(x))
                                                      .add("r", r)
                                                      .add("s", s)
                                                      .add("lhs", lhs)
                                                      .add("rhs", rhs));
                }
                const Symbol shifted = space.digit(shifts[r][f(x)], s);
                const Symbol direct = f.value(x, rack.inv_op(r, s));
                if (shifted != direct) {
                    return Verdict::fails("P3.5", Witness("shifted-output")
                                                      .add("x", as_i64(x))
                                                      .add("r", r)
                                                      .add("s", s)
                                                      .add("lhs", shifted)
                                                      .add("rhs", direct));
                }
            }
        }
    }
    return Verdict::holds("P3.5");
}

} // namespace rackca
