#include "doctest.h"

#include <memory>

#include "rackca/action.hpp"
#include "rackca/error.hpp"

using namespace rackca;

namespace {

RackPtr ptr(FiniteRack r) { return std::make_shared<const FiniteRack>(std::move(r)); }

std::string action_error(RackPtr rack, const IndexTable& t) {
    try {
        action_from_table(std::move(rack), t);
    } catch (const Error& e) {
        return e.name();
    }
    return {};
}

} // namespace

TEST_SUITE("rack_action") {

TEST_CASE("self action and trivial action") {
    const auto d3 = ptr(dihedral_rack(3));
    CHECK(self_action(d3).table() == d3->op_table());
    CHECK_NOTHROW(action_from_table(d3, {{0, 1}, {0, 1}, {0, 1}}));
}

TEST_CASE("incompatible table") {
    const auto d3 = ptr(dihedral_rack(3));
    CHECK(action_error(d3, {{1, 0}, {0, 1}, {0, 1}}) == "CompatibilityViolation");
    CHECK(action_error(d3, {{0, 0}, {0, 1}, {0, 1}}) == "RowNotBijective");
}

TEST_CASE("actions through a permutation") {
    const auto d3 = ptr(dihedral_rack(3));
    const auto id = action_from_permutation(d3, Permutation::identity(3));
    for (Element r = 0; r < 3; ++r)
        for (Element x = 0; x < 3; ++x) CHECK(id.act(r, x) == x);
    CHECK_NOTHROW(action_from_permutation(d3, Permutation({1, 2, 0})));

    // every permutation of up to four points acts compatibly on every small builtin
    std::vector<RackPtr> racks{ptr(trivial_rack(3)), ptr(cyclic_rack(4)), ptr(dihedral_rack(4)),
                               ptr(conjugation_rack(symmetric_group(3)))};
    for (const auto& rack : racks) {
        for (std::size_t m = 1; m <= 4; ++m) {
            std::vector<Element> p(m);
            for (Element i = 0; i < m; ++i) p[i] = i;
            do CHECK_NOTHROW(action_from_permutation(rack, Permutation(p)));
            while (std::next_permutation(p.begin(), p.end()));
        }
    }
}

TEST_CASE("actions induced by group actions") {
    const auto z2 = cyclic_group(2);
    CHECK_NOTHROW(action_from_group_action(z2, {{0, 1}, {1, 0}}));
    const auto s3 = symmetric_group(3);
    IndexTable natural;
    for (const auto& p : symmetric_group_permutations(3)) natural.push_back(p);
    CHECK_NOTHROW(action_from_group_action(s3, natural));
    CHECK_NOTHROW(action_from_group_action(s3, IndexTable(6, {0, 1, 2, 3})));
    CHECK_THROWS_AS(action_from_group_action(z2, {{1, 0}, {1, 0}}), ValidationError);
}

TEST_CASE("stabilizers") {
    const auto d3 = ptr(dihedral_rack(3));
    const auto trivial = action_from_table(d3, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(action_stabilizer(trivial, 1).elements == Subset{0, 1, 2});
    const auto self = self_action(d3);
    const auto st = action_stabilizer(self, 0);
    CHECK(st.elements == Subset{0});
    CHECK(st.check.held());
    // closure of every stabilizer of the self action of conj(S3)
    const auto s3 = self_action(ptr(conjugation_rack(symmetric_group(3))));
    for (Element x = 0; x < 6; ++x) CHECK(action_stabilizer(s3, x).check.held());
}

}
