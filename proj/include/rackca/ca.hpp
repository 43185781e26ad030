#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "rackca/config.hpp"
#include "rackca/error.hpp"
#include "rackca/group.hpp"
#include "rackca/rack.hpp"
#include "rackca/verdict.hpp"

namespace rackca {

// An arbitrary self-map of A^R, tabulated: table[encode(x)] = encode(F(x)).
class GlobalMap {
public:
    GlobalMap() = default;
    // Throws ValidationError "SizeMismatch" / "EntryOutOfRange".
    GlobalMap(std::size_t n, std::size_t q, std::vector<ConfigIndex> table);

    std::size_t cells() const noexcept { return n_; }
    std::size_t alphabet() const noexcept { return q_; }
    ConfigIndex size() const noexcept { return table_.size(); }
    ConfigIndex operator()(ConfigIndex x) const { return table_[x]; }
    // F(x)(r).
    Symbol value(ConfigIndex x, Element r) const;
    Configuration apply(const Configuration& x) const;
    const std::vector<ConfigIndex>& table() const noexcept { return table_; }

    friend bool operator==(const GlobalMap&, const GlobalMap&) = default;

private:
    std::size_t n_ = 0;
    std::size_t q_ = 0;
    std::vector<ConfigIndex> table_;
};

GlobalMap identity_map(std::size_t n, std::size_t q, std::uint64_t budget = kDefaultBudget);
GlobalMap constant_map(const Configuration& value, std::uint64_t budget = kDefaultBudget);
// (outer after inner)(x) = outer(inner(x)).
GlobalMap compose(const GlobalMap& outer, const GlobalMap& inner);
bool is_constant(const GlobalMap& f);
bool is_bijective(const GlobalMap& f);
// Throws ValidationError "NotBijective".
GlobalMap inverse(const GlobalMap& f);

// tau(x)(r) = rule[(r . x)|_M], with the pattern encoded little-endian over
// the sorted memory set M.
class CellularAutomaton {
public:
    // Throws ValidationError for memory elements outside the rack
    // ("MemoryOutOfRange"), a rule of the wrong length ("RuleSizeMismatch")
    // or rule values >= q ("SymbolOutOfRange").
    CellularAutomaton(RackPtr rack, std::size_t q, Subset memory, std::vector<Symbol> rule);

    const FiniteRack& rack() const noexcept { return *rack_; }
    const RackPtr& rack_ptr() const noexcept { return rack_; }
    std::size_t alphabet() const noexcept { return q_; }
    const Subset& memory() const noexcept { return memory_; }
    const std::vector<Symbol>& rule() const noexcept { return rule_; }

    // Local output at cell r for configuration x given as digits.
    Symbol local(std::span<const Symbol> x, Element r) const;

    friend bool operator==(const CellularAutomaton& a, const CellularAutomaton& b) {
        return *a.rack_ == *b.rack_ && a.q_ == b.q_ && a.memory_ == b.memory_ && a.rule_ == b.rule_;
    }

private:
    RackPtr rack_;
    std::size_t q_;
    Subset memory_;
    std::vector<Symbol> rule_;
};

CellularAutomaton constant_ca(RackPtr rack, std::size_t q, Symbol value);

Configuration ca_apply(const CellularAutomaton& ca, const Configuration& x);
std::vector<Configuration> ca_evolve(const CellularAutomaton& ca, const Configuration& x, std::size_t steps);
GlobalMap global_map(const CellularAutomaton& ca, std::uint64_t budget = kDefaultBudget);

// r |>^-1 M: the cells that ca_apply(ca, x)(r) can read.
Subset dependence_set(const CellularAutomaton& ca, Element r);

// Outputs of ca_apply at r agree whenever inputs agree on dependence_set(ca, r)
// (checked per cell by grouping all configurations on that set).
Verdict locality_check(const CellularAutomaton& ca, std::uint64_t budget = kDefaultBudget);

// ---- equivariance ---------------------------------------------------------

// {r : F(r.x) = r.F(x) for all x}; the check covers closure under |>.
CheckedSubset eq_set(const FiniteRack& rack, const GlobalMap& f);
CheckedSubset eq_set(const CellularAutomaton& ca, std::uint64_t budget = kDefaultBudget);

// Stab(x) intersected with Eq(F). The check covers closure, the inclusion
// into stab_eq(F(x)), and equality with it when F is injective.
CheckedSubset stab_eq(const FiniteRack& rack, const GlobalMap& f, const Configuration& x);

// True when F(s.x) = s.F(x) for every s in S and every x; on failure the
// verdict names s and x.
Verdict equivariance_check(const FiniteRack& rack, const GlobalMap& f, const Subset& s, const std::string& claim);

// ---- restriction ----------------------------------------------------------

// The automaton on the induced rack of S (elements re-indexed in sorted
// order). Errors: NotASubrack, MemoryNotContained.
CellularAutomaton restrict(const CellularAutomaton& ca, const Subset& s);

// F restricted to A^S: y on S is extended by symbol 0 outside S, mapped by F
// and read back on S (re-indexed in sorted order). Error: NotASubrack.
GlobalMap restrict_map(const FiniteRack& rack, const GlobalMap& f, const Subset& s);

// ---- memory sets ----------------------------------------------------------

struct LocalRule {
    Subset memory;
    std::vector<Symbol> rule;
    // false where no (x, r) reached the pattern; such entries hold symbol 0.
    std::vector<bool> constrained;
};

// Two (configuration, cell) pairs sharing a shifted pattern with different
// outputs.
struct MemoryConflict {
    ConfigIndex x = 0;
    Element r = 0;
    ConfigIndex y = 0;
    Element r2 = 0;
    ConfigIndex pattern = 0;
    Symbol out_x = 0;
    Symbol out_y = 0;

    Witness witness() const;
};

using MemoryOracleResult = std::variant<LocalRule, MemoryConflict>;

// Decides whether M is a memory set for F by scanning all (x, r).
MemoryOracleResult memory_oracle(const FiniteRack& rack, const GlobalMap& f, const Subset& memory);

// Thrown when F admits no memory set at all.
class NotACellularAutomaton : public ValidationError {
public:
    explicit NotACellularAutomaton(const MemoryConflict& c);
    const MemoryConflict& conflict() const noexcept { return conflict_; }

private:
    MemoryConflict conflict_;
};

struct MinimalMemory {
    // Every memory set among the 2^n subsets, ordered by mask.
    std::vector<Subset> memory_sets;
    // Memory sets of minimal cardinality.
    std::vector<Subset> minimal;
    Subset intersection;
    // HOLDS iff the minimum is unique and equals the intersection of all
    // memory sets; the witness otherwise lists the offending subsets as masks.
    Verdict uniqueness;
    // A local rule on minimal.front().
    LocalRule rule;
};

// Throws NotACellularAutomaton when the full universe is not a memory set.
MinimalMemory minimal_memory(const FiniteRack& rack, const GlobalMap& f);

// ---- composition ----------------------------------------------------------

struct Composition {
    GlobalMap composite;
    CellularAutomaton claimed;
    Verdict verdict;
};

// composite = sigma after tau; claimed has memory M1 |>^-1 M2 and the composed
// local rule; the verdict compares them everywhere.
Composition compose_checked(const CellularAutomaton& sigma, const CellularAutomaton& tau,
                            std::uint64_t budget = kDefaultBudget);

// The memory set {m1 |>^-1 m2 : m1 in M1, m2 in M2}.
Subset inverse_product(const FiniteRack& rack, const Subset& m1, const Subset& m2);

// M |>^-1 M == M; the witness names m1, m2 and the offending element.
Verdict memory_identity_check(const FiniteRack& rack, const Subset& memory);

struct ShelfCheck {
    Verdict law;
    Verdict memory_identity;
};

// sigma > (tau > psi) versus (sigma > tau) > (sigma > psi) as global maps.
ShelfCheck shelf_claims_check(const CellularAutomaton& sigma, const CellularAutomaton& tau,
                              const CellularAutomaton& psi, std::uint64_t budget = kDefaultBudget);
// tau > tau versus tau; SKIPPED unless the rack is a quandle.
ShelfCheck idempotence_check(const CellularAutomaton& tau, std::uint64_t budget = kDefaultBudget);

// ---- invertibility --------------------------------------------------------

struct Inversion {
    bool bijective = false;
    std::optional<GlobalMap> inverse;
    std::optional<CellularAutomaton> inverse_ca;
    std::optional<MemoryConflict> not_a_ca;
    // SKIPPED when not bijective; HOLDS when the inverse is a cellular
    // automaton; FAILS with the memory conflict otherwise.
    Verdict verdict;
};

bool is_bijective(const CellularAutomaton& ca, std::uint64_t budget = kDefaultBudget);
Inversion invert_checked(const CellularAutomaton& ca, std::uint64_t budget = kDefaultBudget);
Inversion invert_checked(const RackPtr& rack, const GlobalMap& f);

// ---- majority -------------------------------------------------------------

struct Majority {
    CellularAutomaton ca;
    // x -> majority of x(r |> m), ties broken by x(r).
    GlobalMap direct;
    Verdict agreement;
};

Majority majority_ca(const FiniteGroup& g, const Subset& memory, std::uint64_t budget = kDefaultBudget);

// ---- characterizations ----------------------------------------------------

struct LocalCharacterization {
    // F on A^S satisfies tau(x)(r) = mu((r.x)|_M) everywhere.
    bool automaton = false;
    bool equivariant = false;
    // F(x)(r) = mu(x|_M) for every x and every r in S fixing x.
    bool local = false;
    Verdict verdict;
};

// F is a map on A^R; S a subrack containing M; mu a rule table on M.
// HOLDS iff F restricted to A^S is S-equivariant and local as above.
LocalCharacterization local_characterization_check(const FiniteRack& rack, const GlobalMap& f, const Subset& s,
                                                   const Subset& memory, const std::vector<Symbol>& rule);

struct CurtisHedlund {
    bool automaton = false;
    bool equivariant = false;
    std::optional<LocalRule> rule;
    Verdict verdict;
};

// (A) some M within S is a memory set of F restricted to A^S;
// (B) F restricted to A^S is S-equivariant. HOLDS iff A <=> B.
CurtisHedlund curtis_hedlund_check(const FiniteRack& rack, const GlobalMap& f, const Subset& s);

// tau(r.x)(s) = tau(s.x)(s |> r) and (r.tau(x))(s) = tau(x)(r |>^-1 s).
Verdict prop35_check(const FiniteRack& rack, const GlobalMap& f);

} // namespace rackca
