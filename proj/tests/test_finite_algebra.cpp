#include "doctest.h"

#include "rackca/error.hpp"
#include "rackca/group.hpp"

using namespace rackca;

namespace {

std::string error_name(const IndexTable& t) {
    try {
        group_from_table(t);
    } catch (const Error& e) {
        return e.name();
    }
    return {};
}

bool associative(const FiniteGroup& g) {
    const auto n = static_cast<Element>(g.order());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    return true;
}

} // namespace

TEST_SUITE("finite_algebra") {

TEST_CASE("two-element group") {
    const auto g = group_from_table({{0, 1}, {1, 0}});
    CHECK(g.order() == 2);
    CHECK(g.identity() == 0);
    CHECK(g.inverse(0) == 0);
    CHECK(g.inverse(1) == 1);
}

TEST_CASE("malformed tables") {
    CHECK(error_name({{0, 1}, {0, 1}}) == "NoIdentity");
    CHECK(error_name({{0, 1}, {1}}) == "NotSquare");
    CHECK(error_name({{0, 2}, {1, 0}}) == "EntryOutOfRange");
    // 0 is the identity but 1*1 = 1 leaves 1 without an inverse
    CHECK(error_name({{0, 1}, {1, 1}}) == "NoInverse");
    // a left-zero style table fails associativity before anything else
    CHECK(error_name({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}) == "NotAssociative");
}

TEST_CASE("builtins") {
    CHECK(cyclic_group(3).mul(1, 2) == 0);
    CHECK(group_builtin(GroupKind::symmetric, 3).order() == 6);
    CHECK(group_builtin(GroupKind::dihedral, 4).order() == 8);
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(associative(cyclic_group(n)));
        CHECK(associative(dihedral_group(n)));
        CHECK(associative(symmetric_group(n)));
    }
    CHECK_THROWS_AS(symmetric_group(6), SizeLimitExceeded);
}

TEST_CASE("symmetric group indexing") {
    const auto perms = symmetric_group_permutations(3);
    REQUIRE(perms.size() == 6);
    CHECK(perms[0] == std::vector<Element>{0, 1, 2});
    CHECK(perms[1] == std::vector<Element>{0, 2, 1});
    CHECK(perms[5] == std::vector<Element>{2, 1, 0});
    const auto g = symmetric_group(3);
    for (Element a = 0; a < 6; ++a) {
        for (Element b = 0; b < 6; ++b) {
            const auto& ab = perms[g.mul(a, b)];
            for (Element i = 0; i < 3; ++i) CHECK(ab[i] == perms[a][perms[b][i]]);
        }
    }
}

TEST_CASE("dihedral group is rotations then reflections") {
    const auto g = dihedral_group(4);
    // reflection composed with itself is the identity rotation
    for (Element k = 4; k < 8; ++k) CHECK(g.mul(k, k) == 0);
    CHECK(g.mul(1, 1) == 2);
    CHECK(g.table() == group_from_table(g.table()).table());
}

}
