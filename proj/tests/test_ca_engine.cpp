#include "doctest.h"

#include <memory>

#include "oracles.hpp"
#include "rackca/ca.hpp"
#include "rackca/error.hpp"
#include "rackca/random.hpp"

using namespace rackca;

namespace {

RackPtr ptr(FiniteRack r) { return std::make_shared<const FiniteRack>(std::move(r)); }

Configuration cfg(std::vector<Symbol> cells, std::size_t q = 2) { return Configuration(q, std::move(cells)); }

oracle::Table plain(const FiniteRack& r) {
    oracle::Table out;
    for (const auto& row : r.op_table()) out.emplace_back(row.begin(), row.end());
    return out;
}

oracle::Cells cells(const Configuration& x) { return {x.cells().begin(), x.cells().end()}; }

// F as a function on oracle configurations.
auto as_function(const GlobalMap& f, std::size_t q) {
    return [&f, q](const oracle::Cells& x) {
        const auto y = f.apply(Configuration(q, std::vector<Symbol>(x.begin(), x.end())));
        return cells(y);
    };
}

CellularAutomaton identity_rule(const RackPtr& rack) { return CellularAutomaton(rack, 2, {0}, {0, 1}); }
CellularAutomaton negation_rule(const RackPtr& rack) { return CellularAutomaton(rack, 2, {0}, {1, 0}); }

GlobalMap identity_on(const FiniteRack& r) { return identity_map(r.order(), 2); }

std::vector<RackPtr> small_racks() {
    return {ptr(trivial_rack(3)), ptr(trivial_rack(4)), ptr(cyclic_rack(3)), ptr(cyclic_rack(4)),
            ptr(dihedral_rack(3)), ptr(dihedral_rack(4))};
}

} // namespace

TEST_SUITE("ca_engine") {

TEST_CASE("apply follows the defining formula") {
    const auto d3 = ptr(dihedral_rack(3));
    CHECK(ca_apply(identity_rule(d3), cfg({0, 1, 0})) == cfg({0, 0, 1}));
    CHECK(ca_apply(constant_ca(d3, 2, 1), cfg({0, 1, 0})) == cfg({1, 1, 1}));
    const auto t3 = ptr(trivial_rack(3));
    const CellularAutomaton pick(t3, 3, {1}, {0, 1, 2});
    CHECK(ca_apply(pick, Configuration(3, {2, 1, 0})) == Configuration(3, {1, 1, 1}));

    for (const auto& rack : small_racks()) {
        const auto t = plain(*rack);
        for (const auto& ca : all_cas(rack, 2, 2)) {
            const std::vector<unsigned> memory(ca.memory().begin(), ca.memory().end());
            const oracle::Cells rule(ca.rule().begin(), ca.rule().end());
            for (const auto& x : oracle::all_configs(static_cast<unsigned>(rack->order()), 2)) {
                const auto got = ca_apply(ca, cfg(std::vector<Symbol>(x.begin(), x.end())));
                CHECK(cells(got) == oracle::apply(t, 2, memory, rule, x));
            }
        }
    }
}

TEST_CASE("identity rule on the dihedral rack") {
    // tau(x)(r) = x(2r mod 3): cell 0 is kept and cells 1, 2 swap. A rule that
    // fixes x when x(0) = x(1) and swaps cells 0 and 1 otherwise is a different map.
    const auto d3 = ptr(dihedral_rack(3));
    const auto tau = identity_rule(d3);
    for (ConfigIndex i = 0; i < 8; ++i) {
        const auto x = decode_config(3, 2, i);
        CHECK(ca_apply(tau, x) == cfg({x[0], x[2], x[1]}));
    }
    CHECK(ca_apply(tau, cfg({1, 0, 0})) == cfg({1, 0, 0}));
    CHECK(ca_apply(tau, cfg({0, 1, 1})) == cfg({0, 1, 1}));
}

TEST_CASE("evolution") {
    const auto d3 = ptr(dihedral_rack(3));
    CHECK(ca_evolve(identity_rule(d3), cfg({0, 1, 0}), 0) == std::vector<Configuration>{cfg({0, 1, 0})});
    CHECK(ca_evolve(identity_rule(d3), cfg({0, 1, 0}), 2) ==
          std::vector<Configuration>{cfg({0, 1, 0}), cfg({0, 0, 1}), cfg({0, 1, 0})});
    const auto run = ca_evolve(constant_ca(d3, 2, 1), cfg({0, 1, 0}), 3);
    REQUIRE(run.size() == 4);
    for (std::size_t i = 1; i < 4; ++i) CHECK(run[i] == cfg({1, 1, 1}));
}

TEST_CASE("dependence sets and locality") {
    const auto t3 = ptr(trivial_rack(3));
    const CellularAutomaton two(t3, 2, {0, 2}, {0, 1, 1, 0});
    for (Element r = 0; r < 3; ++r) CHECK(dependence_set(two, r) == Subset{0, 2});
    const auto d3 = ptr(dihedral_rack(3));
    CHECK(dependence_set(identity_rule(d3), 1) == Subset{2});
    for (const auto& rack : small_racks())
        for (const auto& ca : all_cas(rack, 2, 2)) CHECK(locality_check(ca).held());
}

TEST_CASE("rule validation") {
    const auto d3 = ptr(dihedral_rack(3));
    CHECK_THROWS_AS(CellularAutomaton(d3, 2, {3}, {0, 1}), ValidationError);
    CHECK_THROWS_AS(CellularAutomaton(d3, 2, {0}, {0, 1, 0}), ValidationError);
    CHECK_THROWS_AS(CellularAutomaton(d3, 2, {0}, {0, 2}), ValidationError);
}

TEST_CASE("equivariance sets") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto t = ptr(trivial_rack(n));
        for (const auto& ca : all_cas(t, 2, 2)) CHECK(eq_set(ca).elements == full_set(n));
    }
    const auto d3 = ptr(dihedral_rack(3));
    CHECK(eq_set(identity_rule(d3)).elements == Subset{0});

    const auto s3 = ptr(conjugation_rack(symmetric_group(3)));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto ca = random_ca(s3, 2, 2, seed);
        CHECK(contains(eq_set(ca).elements, symmetric_group(3).identity()));
    }

    for (const auto& rack : small_racks()) {
        const auto t = plain(*rack);
        for (const auto& ca : all_cas(rack, 2, 2)) {
            const auto f = global_map(ca);
            const auto got = eq_set(ca);
            CHECK(got.check.held());
            const auto expect = oracle::eq_set(t, 2, as_function(f, 2));
            CHECK(got.elements == Subset(expect.begin(), expect.end()));
        }
    }
}

TEST_CASE("stabilizers inside the equivariance set") {
    const auto d3 = ptr(dihedral_rack(3));
    const auto f = global_map(identity_rule(d3));
    CHECK(stab_eq(*d3, f, cfg({1, 0, 0})).elements == Subset{0});
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto t = ptr(trivial_rack(n));
        const auto g = global_map(CellularAutomaton(t, 2, {0}, {1, 0}));
        for (ConfigIndex i = 0; i < g.size(); ++i) CHECK(stab_eq(*t, g, decode_config(n, 2, i)).elements == full_set(n));
    }
    // injective: the stabilizer of x and of its image agree
    for (const auto& rack : small_racks()) {
        for (const auto& ca : all_cas(rack, 2, 2)) {
            const auto g = global_map(ca);
            for (ConfigIndex i = 0; i < g.size(); ++i) {
                const auto x = decode_config(rack->order(), 2, i);
                const auto s = stab_eq(*rack, g, x);
                CHECK(s.check.held());
                if (is_bijective(g)) CHECK(s.elements == stab_eq(*rack, g, g.apply(x)).elements);
            }
        }
    }
}

TEST_CASE("restriction") {
    const auto d3 = ptr(dihedral_rack(3));
    const auto tau = CellularAutomaton(d3, 2, {0}, {1, 0});
    const auto whole = restrict(tau, {0, 1, 2});
    CHECK(whole == tau);
    const auto one = restrict(tau, {0});
    CHECK(one.rack().order() == 1);
    CHECK(one.memory() == Subset{0});
    CHECK(ca_apply(one, cfg({0})) == cfg({1}));
    CHECK_THROWS_AS(restrict(tau, {1, 2}), ValidationError);
    const auto d4 = ptr(dihedral_rack(4));
    const auto on_even = restrict(CellularAutomaton(d4, 2, {0, 2}, {0, 1, 1, 0}), {0, 2});
    CHECK(on_even.rack() == trivial_rack(2));
}

TEST_CASE("memory oracle") {
    const auto d3 = ptr(dihedral_rack(3));
    const auto tau = identity_rule(d3);
    const auto result = memory_oracle(*d3, global_map(tau), {0});
    REQUIRE(std::holds_alternative<LocalRule>(result));
    CHECK(std::get<LocalRule>(result).rule == tau.rule());

    // identity: x = [a, b, c] at r = 0 and y = [b, c, a] at r = 1 share the
    // shifted pattern [a, c, b] with outputs a and c
    const auto conflict = memory_oracle(*d3, identity_on(*d3), {0, 1, 2});
    REQUIRE(std::holds_alternative<MemoryConflict>(conflict));
    const auto& c = std::get<MemoryConflict>(conflict);
    CHECK(c.out_x != c.out_y);
    CHECK(shift(*d3, c.r, decode_config(3, 2, c.x)) == shift(*d3, c.r2, decode_config(3, 2, c.y)));
    CHECK(decode_config(3, 2, c.x)[c.r] == c.out_x);
    CHECK(decode_config(3, 2, c.y)[c.r2] == c.out_y);

    const auto k = constant_map(cfg({1, 1, 1}));
    const auto empty = memory_oracle(*d3, k, {});
    REQUIRE(std::holds_alternative<LocalRule>(empty));
    CHECK(std::get<LocalRule>(empty).rule == std::vector<Symbol>{1});
}

TEST_CASE("minimal memory") {
    const auto d3 = ptr(dihedral_rack(3));
    const auto k = minimal_memory(*d3, constant_map(cfg({0, 0, 0})));
    CHECK(k.minimal == std::vector<Subset>{Subset{}});
    CHECK(k.uniqueness.held());
    const auto m = minimal_memory(*d3, global_map(identity_rule(d3)));
    CHECK(m.minimal == std::vector<Subset>{Subset{0}});
    CHECK(m.intersection == Subset{0});
    CHECK(m.uniqueness.held());
    CHECK_THROWS_AS(minimal_memory(*d3, identity_on(*d3)), NotACellularAutomaton);

    // every memory set the library reports is one by direct pairwise test
    for (const auto& rack : {d3, ptr(trivial_rack(3))}) {
        const auto t = plain(*rack);
        for (const auto& ca : all_cas(rack, 2, 2)) {
            const auto f = global_map(ca);
            const auto mm = minimal_memory(*rack, f);
            CHECK(mm.uniqueness.held());
            CHECK(mm.minimal.size() == 1);
            CHECK((mm.minimal.front().empty() == is_constant(f)));
            for (std::uint64_t mask = 0; mask < 8; ++mask) {
                const auto s = subset_from_mask(mask);
                const bool listed = std::find(mm.memory_sets.begin(), mm.memory_sets.end(), s) != mm.memory_sets.end();
                CHECK(listed == oracle::is_memory_set(t, 2, as_function(f, 2), std::vector<unsigned>(s.begin(), s.end())));
            }
        }
    }
}

TEST_CASE("composition") {
    const auto t3 = ptr(trivial_rack(3));
    for (const auto& sigma : all_cas(t3, 2, 1)) {
        for (const auto& tau : all_cas(t3, 2, 2)) {
            const auto c = compose_checked(sigma, tau);
            CHECK(c.verdict.held());
            if (!sigma.memory().empty()) CHECK(c.claimed.memory() == tau.memory());
        }
    }

    const auto d3 = ptr(dihedral_rack(3));
    const auto tau = identity_rule(d3);
    const auto c = compose_checked(tau, tau);
    CHECK(c.composite == identity_on(*d3));
    CHECK(c.claimed.memory() == Subset{0});
    REQUIRE(c.verdict.failed());
    const auto& w = *c.verdict.witness;
    CHECK(w.at("x") == 2);
    CHECK(w.at("r") == 1);
    CHECK(w.at("composite") == 1);
    CHECK(w.at("claimed") == 0);
    CHECK(ca_apply(c.claimed, cfg({0, 1, 0}))[1] == 0);

    for (const auto& other : all_cas(d3, 2, 2)) CHECK(compose_checked(constant_ca(d3, 2, 1), other).verdict.held());
}

TEST_CASE("composition laws") {
    // composition is not self-distributive even on a trivial rack: with sigma a
    // negation the left side negates once and the right side twice
    const auto t3 = ptr(trivial_rack(3));
    const auto neg = negation_rule(t3);
    const auto id = identity_rule(t3);
    const auto law = shelf_claims_check(neg, id, id).law;
    REQUIRE(law.failed());
    const auto x = decode_config(3, 2, static_cast<ConfigIndex>(law.witness->at("x")));
    CHECK(law.witness->at("lhs") == 1 - static_cast<std::int64_t>(x[0]));
    CHECK(law.witness->at("rhs") == x[0]);
    // it holds whenever sigma is idempotent
    const auto cas = all_cas(t3, 2, 1);
    for (const auto& b : cas)
        for (const auto& c : cas) {
            CHECK(shelf_claims_check(id, b, c).law.held());
            CHECK(shelf_claims_check(constant_ca(t3, 2, 1), b, c).law.held());
        }

    const auto d3 = ptr(dihedral_rack(3));
    const auto v = memory_identity_check(*d3, {0, 1});
    REQUIRE(v.failed());
    CHECK(v.witness->at("element") == 2);
    CHECK(memory_identity_check(*d3, {0}).held());

    const auto idem = idempotence_check(identity_rule(d3));
    REQUIRE(idem.law.failed());
    CHECK(idem.law.witness->at("x") == 2);
    CHECK(idem.law.witness->at("r") == 1);
    CHECK(idempotence_check(identity_rule(ptr(cyclic_rack(3)))).law.status == Status::skipped);
    // on a trivial rack tau > tau reads the cells tau reads, so a negation fails idempotence
    CHECK(idempotence_check(negation_rule(t3)).law.failed());
    CHECK(idempotence_check(identity_rule(t3)).law.held());
}

TEST_CASE("inversion") {
    const auto d3 = ptr(dihedral_rack(3));
    const auto id = invert_checked(identity_rule(d3));
    CHECK(id.bijective);
    CHECK(*id.inverse == global_map(identity_rule(d3)));
    REQUIRE(id.inverse_ca.has_value());
    CHECK(*id.inverse_ca == identity_rule(d3));
    CHECK(id.verdict.held());

    const auto neg = invert_checked(negation_rule(d3));
    CHECK(neg.bijective);
    REQUIRE(neg.inverse_ca.has_value());
    CHECK(neg.inverse_ca->memory() == Subset{0});

    for (Symbol s = 0; s < 2; ++s) {
        const auto k = invert_checked(constant_ca(d3, 2, s));
        CHECK_FALSE(k.bijective);
        CHECK(k.verdict.status == Status::skipped);
    }
}

TEST_CASE("majority") {
    // conj(Z2) is trivial, so a tie between x(0) and x(1) is broken by x(e) = x(0)
    const auto z2 = majority_ca(cyclic_group(2), {0, 1});
    CHECK(ca_apply(z2.ca, cfg({0, 1})) == cfg({0, 0}));
    CHECK(ca_apply(z2.ca, cfg({1, 0})) == cfg({1, 1}));
    // the formula that breaks ties by x(r) disagrees at r = 1
    REQUIRE(z2.agreement.failed());
    CHECK(z2.agreement.witness->at("x") == 1);
    CHECK(z2.agreement.witness->at("r") == 1);

    const auto s3 = majority_ca(symmetric_group(3), {1, 2, 3});
    const auto ones = Configuration::constant(6, 2, 1);
    CHECK(ca_apply(s3.ca, ones) == ones);
    CHECK(ca_apply(majority_ca(cyclic_group(3), {0, 1, 2}).ca, Configuration::constant(3, 2, 1)) ==
          Configuration::constant(3, 2, 1));
    // odd memory in an abelian group: no ties, and r |> m = m = r |>^-1 m
    CHECK(majority_ca(cyclic_group(5), {0, 1, 2}).agreement.held());
}

TEST_CASE("local characterization") {
    const auto d3 = ptr(dihedral_rack(3));
    for (const auto& rack : small_racks()) {
        for (const auto& ca : all_cas(rack, 2, 2)) {
            const auto f = global_map(ca);
            for (ConfigIndex i = 0; i < f.size(); ++i) {
                const auto s = stab_eq(*rack, f, decode_config(rack->order(), 2, i)).elements;
                if (s.empty() || !is_subrack(*rack, s) || !is_subset_of(ca.memory(), s)) continue;
                CHECK(local_characterization_check(*rack, f, s, ca.memory(), ca.rule()).verdict.held());
                CHECK(curtis_hedlund_check(*rack, f, s).verdict.held());
            }
        }
    }
    // a one-point universe: every symbol function is an automaton with memory {0}
    for (const auto& rule : {std::vector<Symbol>{0, 1}, {1, 0}, {1, 1}}) {
        const auto f = global_map(CellularAutomaton(d3, 2, {0}, rule));
        CHECK(local_characterization_check(*d3, f, {0}, {0}, rule).verdict.held());
    }
    // the identity on D3 is no automaton, whatever rule is offered on M = R
    for (const auto& rule : {std::vector<Symbol>(8, 0), std::vector<Symbol>{0, 1, 0, 1, 0, 1, 0, 1}}) {
        const auto v = local_characterization_check(*d3, identity_on(*d3), {0, 1, 2}, {0, 1, 2}, rule);
        CHECK(v.verdict.failed());
        CHECK(v.verdict.witness.has_value());
    }
    CHECK_THROWS_AS(local_characterization_check(*d3, identity_on(*d3), {0, 1}, {0}, {0, 1}), ValidationError);
    CHECK_THROWS_AS(local_characterization_check(*d3, identity_on(*d3), {0}, {1}, {0, 1}), ValidationError);
}

TEST_CASE("curtis hedlund") {
    // identity on a trivial rack is equivariant but reads its own cell, which
    // no automaton over a trivial rack can do
    const auto t3 = ptr(trivial_rack(3));
    const auto ch = curtis_hedlund_check(*t3, identity_on(*t3), {0, 1, 2});
    CHECK(ch.equivariant);
    CHECK_FALSE(ch.automaton);
    CHECK(ch.verdict.failed());

    const auto d3 = ptr(dihedral_rack(3));
    std::size_t holds = 0, fails = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto f = random_global_map(*d3, 2, seed);
        const auto v = curtis_hedlund_check(*d3, f, {0}).verdict;
        (v.held() ? holds : fails) += 1;
        // on {0} every map is an automaton (memory {0}) and equivariant
        CHECK(v.held());
    }
    CHECK(holds == 200);
    CHECK(fails == 0);
}

TEST_CASE("shift identities") {
    for (const auto& rack : small_racks())
        for (const auto& ca : all_cas(rack, 2, 2)) CHECK(prop35_check(*rack, global_map(ca)).held());
    // the identity on a trivial rack commutes with every shift yet varies across cells
    CHECK(prop35_check(trivial_rack(3), identity_on(trivial_rack(3))).failed());
    // a map that writes x(0) to cell 1 and leaves the rest: not built from shifts
    const auto d3 = ptr(dihedral_rack(3));
    std::vector<ConfigIndex> table(8);
    for (ConfigIndex i = 0; i < 8; ++i) {
        auto x = decode_config(3, 2, i).cells();
        x[1] = x[0];
        table[i] = encode_config(cfg(x));
    }
    const auto v = prop35_check(*d3, GlobalMap(3, 2, table));
    REQUIRE(v.failed());
    CHECK(v.witness.has_value());
}

}
