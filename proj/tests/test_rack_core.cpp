#include "doctest.h"

#include "oracles.hpp"
#include "rackca/error.hpp"
#include "rackca/rack.hpp"

using namespace rackca;

namespace {

oracle::Table plain(const IndexTable& t) {
    oracle::Table out;
    for (const auto& row : t) out.emplace_back(row.begin(), row.end());
    return out;
}

std::vector<FiniteRack> builtins_up_to(std::size_t max_n) {
    std::vector<FiniteRack> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        out.push_back(trivial_rack(n));
        out.push_back(cyclic_rack(n));
        out.push_back(dihedral_rack(n));
        out.push_back(core_rack(cyclic_group(n)));
        for (long long a = 1; a < static_cast<long long>(n); ++a) {
            if (std::gcd(a, static_cast<long long>(n)) == 1) out.push_back(affine_rack(n, a));
        }
    }
    out.push_back(conjugation_rack(symmetric_group(3)));
    out.push_back(conjugation_rack(cyclic_group(4)));
    out.push_back(conjugation_rack(dihedral_group(4)));
    return out;
}

} // namespace

TEST_SUITE("rack_core") {

TEST_CASE("small tables") {
    const auto t = rack_from_table({{0, 1}, {0, 1}});
    CHECK(t.is_quandle());
    CHECK(t.is_trivial());
    const auto c = rack_from_table({{1, 0}, {1, 0}});
    CHECK_FALSE(c.is_quandle());
    try {
        rack_from_table({{0, 1}, {1, 0}});
        FAIL("expected a self-distributivity violation");
    } catch (const ValidationError& e) {
        CHECK(e.name() == "SelfDistributivityViolation");
        REQUIRE(e.witness().size() >= 3);
        CHECK(e.witness()[0] == 1);
        CHECK(e.witness()[1] == 0);
        CHECK(e.witness()[2] == 0);
    }
    CHECK_THROWS_AS(rack_from_table({{0, 0}, {0, 1}}), ValidationError);
}

TEST_CASE("builtin formulas") {
    CHECK(dihedral_rack(3).op_table() == IndexTable{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
    CHECK(core_rack(cyclic_group(3)) == dihedral_rack(3));
    CHECK(affine_rack(5, 1) == trivial_rack(5));
    for (std::size_t p : {3u, 5u, 7u}) CHECK(affine_rack(p, static_cast<long long>(p) - 1) == dihedral_rack(p));
    CHECK_THROWS_AS(affine_rack(6, 2), ValidationError);
    for (Element r = 0; r < 3; ++r)
        for (Element s = 0; s < 3; ++s) CHECK(cyclic_rack(3).op(r, s) == (s + 1) % 3);
}

TEST_CASE("every builtin satisfies the axioms") {
    for (const auto& r : builtins_up_to(8)) {
        const auto t = plain(r.op_table());
        CHECK(oracle::is_rack(t));
        CHECK(r.is_quandle() == oracle::is_quandle(t));
        for (Element a = 0; a < r.order(); ++a)
            for (Element b = 0; b < r.order(); ++b) CHECK(r.inv_op(a, b) == oracle::inv(t, a, b));
    }
    for (std::size_t n = 2; n <= 8; ++n) CHECK_FALSE(cyclic_rack(n).is_quandle());
}

TEST_CASE("inner automorphisms and the inner group") {
    CHECK(inner_automorphism(trivial_rack(4), 2).is_identity());
    CHECK(inner_automorphism(cyclic_rack(3), 1).map() == std::vector<Element>{1, 2, 0});
    CHECK(inner_automorphism(dihedral_rack(3), 0).map() == std::vector<Element>{0, 2, 1});
    CHECK(inner_group(trivial_rack(5)).size() == 1);
    CHECK(inner_group(cyclic_rack(3)).size() == 3);
    CHECK(inner_group(dihedral_rack(3)).size() == 6);
    CHECK(inner_group(dihedral_rack(4)).size() == 4);
    CHECK_THROWS_AS(inner_group(dihedral_rack(7), 5), SizeLimitExceeded);
}

TEST_CASE("closed subsets and subracks") {
    CHECK(is_closed_subset(dihedral_rack(3), {0}));
    CHECK(is_subrack(dihedral_rack(3), {0}));
    CHECK(is_closed_subset(dihedral_rack(4), {0, 2}));
    CHECK(is_subrack(dihedral_rack(4), {0, 2}));
    CHECK_FALSE(is_closed_subset(dihedral_rack(3), {0, 1}));
    CHECK(induced_rack(dihedral_rack(4), {0, 2}) == trivial_rack(2));
    CHECK_THROWS_AS(induced_rack(dihedral_rack(3), {0, 1}), ValidationError);
}

TEST_CASE("closed subsets are subracks up to order 5") {
    for (const auto& r : builtins_up_to(5)) {
        CHECK(closed_implies_subrack_check(r).held());
        const auto t = plain(r.op_table());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.order()); ++mask) {
            const auto s = subset_from_mask(mask);
            CHECK(is_closed_subset(r, s) == oracle::closed(t, std::vector<unsigned>(s.begin(), s.end())));
        }
    }
}

TEST_CASE("inner conjugation identity") {
    for (const auto& r : builtins_up_to(8)) CHECK(inner_conjugation_check(r).held());
    // a near-rack: bijective rows, R2 broken
    const auto near = rack_from_table_unchecked({{0, 1}, {1, 0}});
    const auto v = inner_conjugation_check(near);
    CHECK(v.failed());
    CHECK(v.witness.has_value());
}

TEST_CASE("transpositions of S3") {
    CHECK(transposition_indices(3) == std::vector<Element>{1, 5, 2});
    const auto t = transposition_rack(3);
    CHECK(t.order() == 3);
    CHECK(t.is_quandle());
    // conjugating one transposition by another gives the third
    CHECK(t.op(0, 1) == 2);
    CHECK(t.op(1, 2) == 0);
    CHECK(transposition_indices(4).size() == 6);
}

TEST_CASE("enumeration counts") {
    const std::size_t classes[] = {1, 2, 6, 19};
    const std::size_t quandles[] = {1, 1, 3, 7};
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto iso = enumerate_racks(n, true);
        const auto labelled = enumerate_racks(n, false);
        const auto brute = oracle::count_racks(static_cast<unsigned>(n));
        CHECK(iso.size() == classes[n - 1]);
        CHECK(iso.size() == brute.classes);
        CHECK(labelled.size() == brute.labelled);
        std::size_t q = 0;
        for (const auto& r : iso) q += r.is_quandle();
        CHECK(q == quandles[n - 1]);
        CHECK(q == brute.quandle_classes);
    }
    CHECK_THROWS_AS(enumerate_racks(5, true), SizeLimitExceeded);
}

}
