#pragma once

#include <cstddef>
#include <vector>

#include "rackca/config.hpp"
#include "rackca/group.hpp"
#include "rackca/rack.hpp"

namespace rackca {

// A rack action R x X -> X on X = {0..m-1}: act(r, x) = r . x. Every instance
// is validated: rows are bijections of X and
// r1.(r2.x) = (r1 |> r2).(r1.x).
class RackAction {
public:
    const FiniteRack& rack() const noexcept { return *rack_; }
    const RackPtr& rack_ptr() const noexcept { return rack_; }
    std::size_t set_size() const noexcept { return m_; }
    Element act(Element r, Element x) const { return act_[r * m_ + x]; }
    IndexTable table() const;

private:
    RackAction() = default;
    friend RackAction action_from_table(RackPtr rack, const IndexTable& act);

    RackPtr rack_;
    std::size_t m_ = 0;
    std::vector<Element> act_;
};

// Errors: NotSquare / EntryOutOfRange (shape), RowNotBijective (r),
// CompatibilityViolation (r1, r2, x, lhs, rhs).
RackAction action_from_table(RackPtr rack, const IndexTable& act);

// The rack acting on itself through its operation.
RackAction self_action(RackPtr rack);

// r . x = sigma(x) for every r.
RackAction action_from_permutation(RackPtr rack, const Permutation& sigma);

// The action of conj(G) induced by a group action of G on {0..m-1}. The
// group action is re-validated: NotAGroupAction (a, b, x) or (identity, x).
RackAction action_from_group_action(const FiniteGroup& g, const IndexTable& act);

// {r : r . x = x}, with a closure-under-|> check attached.
CheckedSubset action_stabilizer(const RackAction& action, Element x);

} // namespace rackca
