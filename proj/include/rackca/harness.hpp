#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rackca/ca.hpp"

namespace rackca {

enum class ClaimId {
    r2_inner_conj,
    rem2_8,
    l2_14,
    p2_15,
    p2_19,
    p3_5,
    p3_7,
    l3_10,
    p3_11,
    p3_12,
    l3_15,
    p3_16,
    rem3_17,
    p4_1,
    p4_2,
    t4_3,
    p5_1,
    p5_3,
    p5_4,
    t5_6,
};

struct ClaimInfo {
    ClaimId id;
    std::string_view name;
    // Checked in both ambient and restricted mode.
    bool dual;
    std::string_view statement;
};

inline constexpr std::array<ClaimInfo, 20> kClaims{{
    {ClaimId::r2_inner_conj, "R2-inner-conj", false, "phi_{r1 |> r2} = phi_r1 o phi_r2 o phi_r1^-1"},
    {ClaimId::rem2_8, "Rem2.8", false, "a closed subset of a finite rack is a subrack"},
    {ClaimId::l2_14, "L2.14", false, "stabilizers of a rack action are closed under |>"},
    {ClaimId::p2_15, "P2.15", false, "the shift r.x = x o phi_r^-1 is a rack action on A^R"},
    {ClaimId::p2_19, "P2.19", false, "r.x = x iff x(s) = x(r |>^-1 s) for all s"},
    {ClaimId::p3_5, "P3.5", false, "tau(r.x)(s) = tau(s.x)(s |> r) and (r.tau(x))(s) = tau(x)(r |>^-1 s)"},
    {ClaimId::p3_7, "P3.7", false, "Eq(tau) is closed under |>"},
    {ClaimId::l3_10, "L3.10", false, "every automaton on a trivial rack is R-equivariant"},
    {ClaimId::p3_11, "P3.11", false, "Stab(x, Eq(tau)) is closed, lies in Stab(tau(x), Eq(tau)), equal when tau is injective"},
    {ClaimId::p3_12, "P3.12", true, "tau_S admits (M, mu) iff tau_S is S-equivariant and tau_S(x)(r) = mu(x|_M)"},
    {ClaimId::l3_15, "L3.15", true, "memory sets of tau_S are closed under intersection and supersets"},
    {ClaimId::p3_16, "P3.16", true, "tau_S has a unique minimal memory set, contained in every memory set"},
    {ClaimId::rem3_17, "Rem3.17", false, "an automaton is constant iff its minimal memory set is empty"},
    {ClaimId::p4_1, "P4.1", false, "the shift action is continuous"},
    {ClaimId::p4_2, "P4.2", false, "every cellular automaton is continuous (local)"},
    {ClaimId::t4_3, "T4.3", true, "tau_S is an automaton iff it is S-equivariant (and continuous)"},
    {ClaimId::p5_1, "P5.1", true, "sigma_S > tau_S is an automaton with memory set M1 |>^-1 M2"},
    {ClaimId::p5_3, "P5.3", true, "composition is self-distributive on automata"},
    {ClaimId::p5_4, "P5.4", true, "composition is idempotent on automata over a quandle"},
    {ClaimId::t5_6, "T5.6", true, "a bijective automaton tau_S has an automaton inverse"},
}};

// Every ClaimId has exactly one registry entry, in declaration order.
consteval bool registry_complete() {
    for (std::size_t i = 0; i < kClaims.size(); ++i) {
        if (kClaims[i].id != static_cast<ClaimId>(i)) return false;
    }
    return static_cast<std::size_t>(ClaimId::t5_6) + 1 == kClaims.size();
}
static_assert(registry_complete(), "claim registry out of sync with ClaimId");

const ClaimInfo& claim_info(ClaimId id);
// Throws ValidationError "UnknownClaim".
ClaimId parse_claim(std::string_view name);

enum class Mode { ambient, restricted };

Mode parse_mode(std::string_view name);
std::string_view to_string(Mode mode);

// Memory set and rule of an automaton; the universe is implied by the case.
struct CaSpec {
    Subset memory;
    std::vector<Symbol> rule;

    friend bool operator==(const CaSpec&, const CaSpec&) = default;
};

// One generated instance. Claims over automata on a restricted universe S
// keep S and give their automata in S's own indexing; everything else is
// indexed in the ambient rack.
struct Case {
    std::vector<CaSpec> cas;
    std::optional<std::uint64_t> map_seed;
    std::optional<ConfigIndex> x;
    std::optional<Element> element;
    std::optional<Subset> universe;

    friend bool operator==(const Case&, const Case&) = default;
};

struct InstanceSpec {
    std::string rack_name;
    RackPtr rack;
    std::size_t q = 2;
    // Automata are all those with |M| <= max_memory.
    std::size_t max_memory = 2;
    // Seeded random global maps added to the T4.3 instances.
    std::size_t random_maps = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    // Beyond these counts pairs (P5.1) and triples (P5.3) are sampled.
    std::size_t pair_limit = std::size_t{1} << 14;
    std::size_t triple_limit = 250'000;
    // When set, x-dependent claims only use this configuration.
    std::optional<ConfigIndex> x;
};

struct Outcome {
    Case instance;
    Verdict verdict;
};

// Shared, lazily computed data for the checks on one rack.
class Context {
public:
    explicit Context(const InstanceSpec& spec);

    const InstanceSpec& spec() const noexcept { return spec_; }
    const FiniteRack& rack() const noexcept { return *spec_.rack; }
    const ConfigSpace& space() const noexcept { return space_; }

    // Intersection of Eq(tau) over every automaton tau with memory R, or
    // nullopt when there are more than budget of them.
    const std::optional<Subset>& universal_eq();

    // Induced rack on s, cached.
    const RackPtr& induced(const Subset& s);

private:
    InstanceSpec spec_;
    ConfigSpace space_;
    bool universal_done_ = false;
    std::optional<Subset> universal_;
    std::map<Subset, RackPtr> induced_;
};

// Re-runs the check of a single case.
Verdict check_case(ClaimId claim, Mode mode, Context& ctx, const Case& instance);

// Generates every case of the claim for the InstanceSpec and checks it, handing each
// outcome to the sink as it is produced.
void verify_claim(ClaimId claim, Mode mode, Context& ctx, const std::function<void(Outcome)>& sink);
std::vector<Outcome> verify_claim(ClaimId claim, Mode mode, const InstanceSpec& spec);

struct Certificate {
    std::string rack;
    std::size_t q = 0;
    Case instance;
    Verdict verdict;
};

struct RackTally {
    std::string rack;
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t skipped = 0;
    std::optional<std::string> error;
    // The error was SizeLimitExceeded.
    bool budget_exceeded = false;
};

struct ClaimRecord {
    ClaimId id;
    Mode mode;
    std::size_t instances = 0;
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t skipped = 0;
    bool errored = false;
    std::vector<RackTally> racks;
    std::map<std::string, std::size_t> skip_reasons;
    std::size_t certificates_total = 0;
    std::vector<Certificate> certificates;
    double millis = 0;
};

struct SuiteConfig {
    // Rack name and rack, in report order.
    std::vector<std::pair<std::string, RackPtr>> racks;
    std::size_t q = 2;
    std::size_t max_memory = 2;
    std::size_t random_maps = 100;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    std::size_t pair_limit = std::size_t{1} << 14;
    std::size_t triple_limit = 250'000;
    // Certificates kept per record; 0 keeps all.
    std::size_t certificate_limit = 50;
    std::vector<ClaimId> claims;    // empty: every claim
    std::optional<Mode> mode;       // empty: ambient, plus restricted for dual claims
    std::optional<ConfigIndex> x;
};

struct Report {
    SuiteConfig config;
    std::vector<ClaimRecord> records;
    double millis = 0;

    std::size_t errored() const;
    // Some errored member ran out of budget.
    bool budget_exceeded() const;
};

// The racks of the default suite: trivial, cyclic and dihedral of orders 3 and 4.
std::vector<std::pair<std::string, RackPtr>> default_suite_racks();

Report run_suite(const SuiteConfig& config);

// Re-checks a certificate; the result should equal certificate.verdict.
Verdict replay(ClaimId claim, Mode mode, const Certificate& certificate, const SuiteConfig& config);

} // namespace rackca
