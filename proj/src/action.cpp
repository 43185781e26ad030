#include "rackca/action.hpp"

#include <memory>
#include <string>

#include "rackca/error.hpp"

namespace rackca {

IndexTable RackAction::table() const {
    IndexTable t(rack_->order(), std::vector<Element>(m_));
    for (Element r = 0; r < rack_->order(); ++r) {
        for (Element x = 0; x < m_; ++x) t[r][x] = act(r, x);
    }
    return t;
}

RackAction action_from_table(RackPtr rack, const IndexTable& act) {
    const std::size_t n = rack->order();
    if (act.size() != n) {
        throw ValidationError("NotSquare", "action table has " + std::to_string(act.size()) + " rows, rack has " +
                                               std::to_string(n));
    }
    RackAction a;
    a.rack_ = std::move(rack);
    a.m_ = act.empty() ? 0 : act.front().size();
    for (Element r = 0; r < n; ++r) {
        if (act[r].size() != a.m_) {
            throw ValidationError("NotSquare", "row " + std::to_string(r) + " has the wrong length", {r});
        }
        std::vector<bool> seen(a.m_, false);
        for (Element x = 0; x < a.m_; ++x) {
            const Element v = act[r][x];
            if (v >= a.m_) throw ValidationError("EntryOutOfRange", "act[" + std::to_string(r) + "][" + std::to_string(x) + "]", {r, x});
            if (seen[v]) throw ValidationError("RowNotBijective", "row " + std::to_string(r) + " repeats " + std::to_string(v), {r});
            seen[v] = true;
            a.act_.push_back(v);
        }
    }
    const FiniteRack& R = *a.rack_;
    for (Element r1 = 0; r1 < n; ++r1) {
        for (Element r2 = 0; r2 < n; ++r2) {
            for (Element x = 0; x < a.m_; ++x) {
                const Element lhs = a.act(r1, a.act(r2, x));
                const Element rhs = a.act(R.op(r1, r2), a.act(r1, x));
                if (lhs != rhs) {
                    throw ValidationError("CompatibilityViolation",
                                          "r1=" + std::to_string(r1) + " r2=" + std::to_string(r2) + " x=" +
                                              std::to_string(x) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs),
                                          {r1, r2, x, lhs, rhs});
                }
            }
        }
    }
    return a;
}

RackAction self_action(RackPtr rack) {
    const IndexTable t = rack->op_table();
    return action_from_table(std::move(rack), t);
}

RackAction action_from_permutation(RackPtr rack, const Permutation& sigma) {
    const IndexTable t(rack->order(), sigma.map());
    return action_from_table(std::move(rack), t);
}

RackAction action_from_group_action(const FiniteGroup& g, const IndexTable& act) {
    const std::size_t order = g.order();
    if (act.size() != order) throw ValidationError("NotSquare", "group action table needs one row per group element");
    const std::size_t m = act.front().size();
    for (Element a = 0; a < order; ++a) {
        if (act[a].size() != m) throw ValidationError("NotSquare", "row " + std::to_string(a) + " has the wrong length", {a});
        for (Element x = 0; x < m; ++x) {
            if (act[a][x] >= m) throw ValidationError("EntryOutOfRange", "act[" + std::to_string(a) + "][" + std::to_string(x) + "]", {a, x});
        }
    }
    const Element e = g.identity();
    for (Element x = 0; x < m; ++x) {
        if (act[e][x] != x) {
            throw ValidationError("NotAGroupAction", "identity moves " + std::to_string(x), {e, x});
        }
    }
    for (Element a = 0; a < order; ++a) {
        for (Element b = 0; b < order; ++b) {
            for (Element x = 0; x < m; ++x) {
                if (act[a][act[b][x]] != act[g.mul(a, b)][x]) {
                    throw ValidationError("NotAGroupAction",
                                          "a=" + std::to_string(a) + " b=" + std::to_string(b) + " x=" + std::to_string(x),
                                          {a, b, x});
                }
            }
        }
    }
    return action_from_table(std::make_shared<const FiniteRack>(conjugation_rack(g)), act);
}

CheckedSubset action_stabilizer(const RackAction& action, Element x) {
    if (x >= action.set_size()) throw ValidationError("IndexOutOfRange", "point " + std::to_string(x), {x});
    Subset stab;
    for (Element r = 0; r < action.rack().order(); ++r) {
        if (action.act(r, x) == x) stab.push_back(r);
    }
    return {stab, closure_check(action.rack(), stab, "L2.14")};
}

} // namespace rackca
