#include "rackca/harness.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "rackca/action.hpp"
#include "rackca/random.hpp"

namespace rackca {

const ClaimInfo& claim_info(ClaimId id) {
    for (const auto& c : kClaims) {
        if (c.id == id) return c;
    }
    throw ValidationError("UnknownClaim", "unregistered claim");
}

ClaimId parse_claim(std::string_view name) {
    for (const auto& c : kClaims) {
        if (c.name == name) return c.id;
    }
    throw ValidationError("UnknownClaim", "no claim named '" + std::string(name) + "'");
}

Mode parse_mode(std::string_view name) {
    if (name == "ambient") return Mode::ambient;
    if (name == "restricted") return Mode::restricted;
    throw ValidationError("UnknownMode", "mode must be ambient or restricted, got '" + std::string(name) + "'");
}

std::string_view to_string(Mode mode) { return mode == Mode::ambient ? "ambient" : "restricted"; }

// ---- context --------------------------------------------------------------

Context::Context(const InstanceSpec& spec) : spec_(spec), space_(spec.rack->order(), spec.q, spec.budget) {}

const std::optional<Subset>& Context::universal_eq() {
    if (universal_done_) return universal_;
    universal_done_ = true;
    const auto& r = rack();
    std::uint64_t count = 0;
    try {
        count = checked_power(spec_.q, space_.size(), spec_.budget, "automata with memory R");
    } catch (const SizeLimitExceeded&) {
        return universal_;
    }
    Subset acc = full_set(r.order());
    std::vector<Symbol> rule(space_.size(), 0);
    for (std::uint64_t i = 0; i < count && !acc.empty(); ++i) {
        const CellularAutomaton ca(spec_.rack, spec_.q, full_set(r.order()), rule);
        acc = intersection(acc, eq_set(r, global_map(ca, spec_.budget)).elements);
        for (auto& d : rule) {
            if (++d < spec_.q) break;
            d = 0;
        }
    }
    universal_ = std::move(acc);
    return universal_;
}

const RackPtr& Context::induced(const Subset& s) {
    auto it = induced_.find(s);
    if (it == induced_.end()) {
        it = induced_.emplace(s, std::make_shared<const FiniteRack>(induced_rack(rack(), s))).first;
    }
    return it->second;
}

// ---- single-case checks ---------------------------------------------------

namespace {

CaSpec spec_of(const CellularAutomaton& ca) { return {ca.memory(), ca.rule()}; }

CellularAutomaton make_ca(const RackPtr& rack, std::size_t q, const CaSpec& c) {
    return CellularAutomaton(rack, q, c.memory, c.rule);
}

Verdict labelled(Verdict v, const ClaimInfo& info) {
    v.claim = std::string(info.name);
    return v;
}

std::uint64_t subset_mask(const Subset& s) {
    std::uint64_t m = 0;
    for (Element e : s) m |= std::uint64_t{1} << e;
    return m;
}

// Intersection and superset closure of the memory sets of f.
Verdict memory_lattice_check(const FiniteRack& rack, const GlobalMap& f, const std::string& claim) {
    const MinimalMemory mm = minimal_memory(rack, f);
    std::set<std::uint64_t> masks;
    for (const auto& m : mm.memory_sets) masks.insert(subset_mask(m));
    const std::uint64_t all = (std::uint64_t{1} << rack.order()) - 1;
    for (std::uint64_t a : masks) {
        for (std::uint64_t b : masks) {
            if (!masks.count(a & b)) {
                return Verdict::fails(claim, Witness("memory-intersection")
                                                 .add("m1_mask", static_cast<std::int64_t>(a))
                                                 .add("m2_mask", static_cast<std::int64_t>(b))
                                                 .add("intersection_mask", static_cast<std::int64_t>(a & b)));
            }
        }
        for (Element e = 0; e < rack.order(); ++e) {
            const std::uint64_t sup = (a | (std::uint64_t{1} << e)) & all;
            if (!masks.count(sup)) {
                return Verdict::fails(claim, Witness("memory-monotonicity")
                                                 .add("mask", static_cast<std::int64_t>(a))
                                                 .add("superset_mask", static_cast<std::int64_t>(sup)));
            }
        }
    }
    return Verdict::holds(claim);
}

std::string subset_text(const Subset& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << '}';
    return out.str();
}

std::string describe(const Case& c) {
    std::ostringstream out;
    const char* sep = "";
    for (const auto& ca : c.cas) {
        out << sep << "M=" << subset_text(ca.memory) << " rule=";
        for (Symbol v : ca.rule) out << v;
        sep = "; ";
    }
    if (c.map_seed) out << sep << "map_seed=" << *c.map_seed, sep = "; ";
    if (c.x) out << sep << "x=" << *c.x, sep = "; ";
    if (c.element) out << sep << "element=" << *c.element, sep = "; ";
    if (c.universe) out << sep << "S=" << subset_text(*c.universe);
    return out.str();
}

const ConfigIndex& require_x(const Case& c) {
    if (!c.x) throw ValidationError("MissingConfiguration", "case needs a configuration");
    return *c.x;
}

const CaSpec& require_ca(const Case& c, std::size_t i) {
    if (c.cas.size() <= i) throw ValidationError("MissingAutomaton", "case needs more automata");
    return c.cas[i];
}

// The universe of the restricted shelf claims: the intersection of
// Stab(x, Eq(tau)) over all automata, i.e. Stab(x) cut with universal_eq().
std::variant<Subset, std::string> shelf_universe(Context& ctx, ConfigIndex x) {
    const auto& e = ctx.universal_eq();
    if (!e) return std::string("automata with memory R exceed the budget");
    const auto stab = config_stabilizer(ctx.rack(), decode_config(ctx.rack().order(), ctx.spec().q, x));
    Subset s = intersection(*e, stab.elements);
    if (s.empty()) return std::string("S is empty");
    if (!is_subrack(ctx.rack(), s)) return std::string("S is not a subrack");
    return s;
}

Subset stab_eq_of(const Context& ctx, const GlobalMap& f, ConfigIndex x) {
    return stab_eq(ctx.rack(), f, decode_config(ctx.rack().order(), ctx.spec().q, x)).elements;
}

} // namespace

Verdict check_case(ClaimId claim, Mode mode, Context& ctx, const Case& c) {
    const ClaimInfo& info = claim_info(claim);
    const std::string name(info.name);
    const FiniteRack& rack = ctx.rack();
    const RackPtr& rp = ctx.spec().rack;
    const std::size_t q = ctx.spec().q;
    const std::uint64_t budget = ctx.spec().budget;
    const bool restricted = info.dual && mode == Mode::restricted;
    auto config = [&](ConfigIndex x) { return decode_config(rack.order(), q, x); };
    auto first_ca = [&] { return make_ca(rp, q, require_ca(c, 0)); };

    Verdict v;
    switch (claim) {
    case ClaimId::r2_inner_conj:
        v = inner_conjugation_check(rack);
        break;
    case ClaimId::rem2_8:
        v = closed_implies_subrack_check(rack);
        break;
    case ClaimId::l2_14:
        if (c.element) {
            v = action_stabilizer(self_action(rp), *c.element).check;
        } else {
            v = closure_check(rack, config_stabilizer(rack, config(require_x(c))).elements, name);
        }
        break;
    case ClaimId::p2_15:
        v = shift_action_check(rack, q, budget);
        break;
    case ClaimId::p2_19: {
        auto st = config_stabilizer(rack, config(require_x(c)));
        v = st.check.claim == name ? st.check : Verdict::holds(name);
        break;
    }
    case ClaimId::p3_5:
        v = prop35_check(rack, global_map(first_ca(), budget));
        break;
    case ClaimId::p3_7:
        v = eq_set(first_ca(), budget).check;
        break;
    case ClaimId::l3_10:
        if (!rack.is_trivial()) {
            v = Verdict::skipped(name, "universe is not a trivial rack");
        } else {
            v = equivariance_check(rack, global_map(first_ca(), budget), full_set(rack.order()), name);
        }
        break;
    case ClaimId::p3_11:
        v = stab_eq(rack, global_map(first_ca(), budget), config(require_x(c))).check;
        break;
    case ClaimId::p3_12:
    case ClaimId::l3_15:
    case ClaimId::p3_16: {
        const auto ca = first_ca();
        const GlobalMap f = global_map(ca, budget);
        Subset s = full_set(rack.order());
        if (restricted) {
            s = stab_eq_of(ctx, f, require_x(c));
            if (s.empty() || !is_subrack(rack, s)) {
                v = Verdict::skipped(name, "S is not a subrack");
                break;
            }
            if (!is_subset_of(ca.memory(), s)) {
                v = Verdict::skipped(name, "memory set is not contained in S");
                break;
            }
        }
        if (claim == ClaimId::p3_12) {
            v = local_characterization_check(rack, f, s, ca.memory(), ca.rule()).verdict;
        } else {
            const FiniteRack& sub = restricted ? *ctx.induced(s) : rack;
            const GlobalMap fs = restricted ? restrict_map(rack, f, s) : f;
            v = claim == ClaimId::l3_15 ? memory_lattice_check(sub, fs, name) : minimal_memory(sub, fs).uniqueness;
        }
        break;
    }
    case ClaimId::rem3_17: {
        const GlobalMap f = global_map(first_ca(), budget);
        const MinimalMemory mm = minimal_memory(rack, f);
        const bool empty = mm.minimal.front().empty();
        const bool constant = is_constant(f);
        v = empty == constant ? Verdict::holds(name)
                              : Verdict::fails(name, Witness("constant-memory")
                                                         .add("constant", constant)
                                                         .add("minimal_mask",
                                                              static_cast<std::int64_t>(subset_mask(mm.minimal.front()))));
        break;
    }
    case ClaimId::p4_1:
        v = shift_continuity_check(rack, q, budget);
        break;
    case ClaimId::p4_2:
        v = locality_check(first_ca(), budget);
        break;
    case ClaimId::t4_3: {
        const GlobalMap f = c.map_seed ? random_global_map(rack, q, *c.map_seed, budget) : global_map(first_ca(), budget);
        Subset s = full_set(rack.order());
        if (restricted) {
            s = stab_eq_of(ctx, f, require_x(c));
            if (s.empty() || !is_subrack(rack, s)) {
                v = Verdict::skipped(name, "S is not a subrack");
                break;
            }
        }
        v = curtis_hedlund_check(rack, f, s).verdict;
        break;
    }
    case ClaimId::p5_1: {
        const auto sigma = first_ca();
        const auto tau = make_ca(rp, q, require_ca(c, 1));
        if (!restricted) {
            v = compose_checked(sigma, tau, budget).verdict;
            break;
        }
        const ConfigIndex x = require_x(c);
        const Subset s = intersection(stab_eq_of(ctx, global_map(sigma, budget), x),
                                      stab_eq_of(ctx, global_map(tau, budget), x));
        if (s.empty() || !is_subrack(rack, s)) {
            v = Verdict::skipped(name, "S is not a subrack");
        } else if (!is_subset_of(sigma.memory(), s) || !is_subset_of(tau.memory(), s)) {
            v = Verdict::skipped(name, "memory set is not contained in S");
        } else {
            v = compose_checked(restrict(sigma, s), restrict(tau, s), budget).verdict;
        }
        break;
    }
    case ClaimId::p5_3:
    case ClaimId::p5_4:
    case ClaimId::t5_6: {
        RackPtr universe = rp;
        if (restricted) {
            auto s = shelf_universe(ctx, require_x(c));
            if (auto* reason = std::get_if<std::string>(&s)) {
                v = Verdict::skipped(name, *reason);
                break;
            }
            universe = ctx.induced(std::get<Subset>(s));
        }
        const auto tau = make_ca(universe, q, require_ca(c, 0));
        if (claim == ClaimId::t5_6) {
            v = invert_checked(tau, budget).verdict;
            break;
        }
        const ShelfCheck sc = claim == ClaimId::p5_3
                                  ? shelf_claims_check(tau, make_ca(universe, q, require_ca(c, 1)),
                                                       make_ca(universe, q, require_ca(c, 2)), budget)
                                  : idempotence_check(tau, budget);
        v = sc.law;
        if (!v.note.empty()) v.note += "; ";
        v.note += "memory identity " + std::string(to_string(sc.memory_identity.status));
        break;
    }
    }
    v = labelled(std::move(v), info);
    v.instance = describe(c);
    return v;
}

// ---- generation -----------------------------------------------------------

namespace {

struct Generator {
    ClaimId claim;
    Mode mode;
    Context& ctx;
    const std::function<void(Outcome)>& sink;
    std::vector<CellularAutomaton> cas_;
    bool have_cas_ = false;

    const InstanceSpec& spec() const { return ctx.spec(); }

    void emit(Case c) {
        Verdict v = check_case(claim, mode, ctx, c);
        sink(Outcome{std::move(c), std::move(v)});
    }

    const std::vector<CellularAutomaton>& cas() {
        if (!have_cas_) {
            cas_ = all_cas(spec().rack, spec().q, std::min(spec().max_memory, ctx.rack().order()), spec().budget);
            have_cas_ = true;
        }
        return cas_;
    }

    std::vector<ConfigIndex> xs() const {
        if (spec().x) {
            if (*spec().x >= ctx.space().size()) throw ValidationError("IndexOutOfRange", "x is not a configuration index");
            return {*spec().x};
        }
        std::vector<ConfigIndex> out(ctx.space().size());
        for (ConfigIndex i = 0; i < out.size(); ++i) out[i] = i;
        return out;
    }

    // Stab(x, Eq(F)) for every x of xs().
    std::vector<Subset> stab_eqs(const GlobalMap& f) const {
        std::vector<Subset> out;
        for (ConfigIndex x : xs()) out.push_back(stab_eq_of(ctx, f, x));
        return out;
    }

    // Emits one case per distinct value of key(x), keeping the first x.
    template <class Make>
    void per_distinct(const std::vector<Subset>& keys, Make make) {
        std::set<Subset> seen;
        const auto x = xs();
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (seen.insert(keys[i]).second) emit(make(x[i]));
        }
    }

    std::vector<std::uint64_t> map_seeds() const {
        SplitMix64 rng(spec().seed);
        std::vector<std::uint64_t> out(spec().random_maps);
        for (auto& s : out) s = rng.next();
        return out;
    }

    // Index tuples of the given arity over count items: all of them when
    // count^arity <= limit, otherwise limit seeded draws.
    template <class F>
    void tuples(std::size_t count, std::size_t arity, std::size_t limit, F f) {
        if (count == 0) return;
        std::uint64_t total = 1;
        bool exhaustive = true;
        for (std::size_t i = 0; i < arity; ++i) {
            if (total > limit / count) {
                exhaustive = false;
                break;
            }
            total *= count;
        }
        std::vector<std::size_t> idx(arity, 0);
        if (exhaustive) {
            for (std::uint64_t t = 0; t < total; ++t) {
                std::uint64_t rest = t;
                for (std::size_t i = arity; i-- > 0;) {
                    idx[i] = rest % count;
                    rest /= count;
                }
                f(idx);
            }
            return;
        }
        SplitMix64 rng(spec().seed ^ 0x5eed0f7a1b1e5ULL ^ arity);
        for (std::size_t t = 0; t < limit; ++t) {
            for (auto& i : idx) i = rng.below(count);
            f(idx);
        }
    }

    // Cases over automata of the restricted shelf universe, one group per
    // distinct S = Stab(x) cut with the universal equivariance set.
    template <class PerUniverse>
    void per_shelf_universe(PerUniverse body) {
        std::set<Subset> seen;
        for (ConfigIndex x : xs()) {
            auto s = shelf_universe(ctx, x);
            if (std::holds_alternative<std::string>(s)) {
                emit(Case{{}, std::nullopt, x, std::nullopt, std::nullopt});
                continue;
            }
            const Subset& u = std::get<Subset>(s);
            if (!seen.insert(u).second) continue;
            const RackPtr& sub = ctx.induced(u);
            body(x, u, all_cas(sub, spec().q, std::min(spec().max_memory, u.size()), spec().budget));
        }
    }

    void run() {
        const bool restricted = claim_info(claim).dual && mode == Mode::restricted;
        switch (claim) {
        case ClaimId::r2_inner_conj:
        case ClaimId::rem2_8:
        case ClaimId::p2_15:
        case ClaimId::p4_1:
            emit(Case{});
            return;
        case ClaimId::l2_14:
            for (ConfigIndex x : xs()) emit(Case{{}, std::nullopt, x, std::nullopt, std::nullopt});
            for (Element e = 0; e < ctx.rack().order(); ++e) emit(Case{{}, std::nullopt, std::nullopt, e, std::nullopt});
            return;
        case ClaimId::p2_19:
            for (ConfigIndex x : xs()) emit(Case{{}, std::nullopt, x, std::nullopt, std::nullopt});
            return;
        case ClaimId::p3_5:
        case ClaimId::p3_7:
        case ClaimId::l3_10:
        case ClaimId::rem3_17:
        case ClaimId::p4_2:
            for (const auto& ca : cas()) emit(Case{{spec_of(ca)}, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
            return;
        case ClaimId::p3_11:
            for (const auto& ca : cas()) {
                for (ConfigIndex x : xs()) emit(Case{{spec_of(ca)}, std::nullopt, x, std::nullopt, std::nullopt});
            }
            return;
        case ClaimId::p3_12:
        case ClaimId::l3_15:
        case ClaimId::p3_16:
            for (const auto& ca : cas()) {
                if (!restricted) {
                    emit(Case{{spec_of(ca)}, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
                    continue;
                }
                per_distinct(stab_eqs(global_map(ca, spec().budget)), [&](ConfigIndex x) {
                    return Case{{spec_of(ca)}, std::nullopt, x, std::nullopt, std::nullopt};
                });
            }
            return;
        case ClaimId::t4_3:
            for (const auto& ca : cas()) {
                if (!restricted) {
                    emit(Case{{spec_of(ca)}, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
                    continue;
                }
                per_distinct(stab_eqs(global_map(ca, spec().budget)), [&](ConfigIndex x) {
                    return Case{{spec_of(ca)}, std::nullopt, x, std::nullopt, std::nullopt};
                });
            }
            for (std::uint64_t seed : map_seeds()) {
                if (!restricted) {
                    emit(Case{{}, seed, std::nullopt, std::nullopt, std::nullopt});
                    continue;
                }
                per_distinct(stab_eqs(random_global_map(ctx.rack(), spec().q, seed, spec().budget)),
                             [&](ConfigIndex x) { return Case{{}, seed, x, std::nullopt, std::nullopt}; });
            }
            return;
        case ClaimId::p5_1: {
            const auto& all = cas();
            std::vector<std::vector<Subset>> stabs;
            if (restricted) {
                for (const auto& ca : all) stabs.push_back(stab_eqs(global_map(ca, spec().budget)));
            }
            tuples(all.size(), 2, spec().pair_limit, [&](const std::vector<std::size_t>& i) {
                std::vector<CaSpec> pair{spec_of(all[i[0]]), spec_of(all[i[1]])};
                if (!restricted) {
                    emit(Case{pair, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
                    return;
                }
                std::vector<Subset> keys;
                for (std::size_t k = 0; k < stabs[i[0]].size(); ++k) keys.push_back(intersection(stabs[i[0]][k], stabs[i[1]][k]));
                per_distinct(keys, [&](ConfigIndex x) { return Case{pair, std::nullopt, x, std::nullopt, std::nullopt}; });
            });
            return;
        }
        case ClaimId::p5_3:
            if (!restricted) {
                const auto& all = cas();
                tuples(all.size(), 3, spec().triple_limit, [&](const std::vector<std::size_t>& i) {
                    emit(Case{{spec_of(all[i[0]]), spec_of(all[i[1]]), spec_of(all[i[2]])}, std::nullopt, std::nullopt,
                              std::nullopt, std::nullopt});
                });
                return;
            }
            per_shelf_universe([&](ConfigIndex x, const Subset& u, const std::vector<CellularAutomaton>& local) {
                tuples(local.size(), 3, spec().triple_limit, [&](const std::vector<std::size_t>& i) {
                    emit(Case{{spec_of(local[i[0]]), spec_of(local[i[1]]), spec_of(local[i[2]])}, std::nullopt, x,
                              std::nullopt, u});
                });
            });
            return;
        case ClaimId::p5_4:
        case ClaimId::t5_6:
            if (!restricted) {
                for (const auto& ca : cas()) emit(Case{{spec_of(ca)}, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
                return;
            }
            per_shelf_universe([&](ConfigIndex x, const Subset& u, const std::vector<CellularAutomaton>& local) {
                for (const auto& ca : local) emit(Case{{spec_of(ca)}, std::nullopt, x, std::nullopt, u});
            });
            return;
        }
    }
};

InstanceSpec spec_for(const SuiteConfig& config, const std::string& name, const RackPtr& rack) {
    InstanceSpec s;
    s.rack_name = name;
    s.rack = rack;
    s.q = config.q;
    s.max_memory = config.max_memory;
    s.random_maps = config.random_maps;
    s.seed = config.seed;
    s.budget = config.budget;
    s.pair_limit = config.pair_limit;
    s.triple_limit = config.triple_limit;
    s.x = config.x;
    return s;
}

std::vector<Mode> modes_for(const ClaimInfo& info, const std::optional<Mode>& requested) {
    if (!info.dual) return {Mode::ambient};
    if (requested) return {*requested};
    return {Mode::ambient, Mode::restricted};
}

double millis_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

void verify_claim(ClaimId claim, Mode mode, Context& ctx, const std::function<void(Outcome)>& sink) {
    Generator{claim, mode, ctx, sink, {}, false}.run();
}

std::vector<Outcome> verify_claim(ClaimId claim, Mode mode, const InstanceSpec& spec) {
    Context ctx(spec);
    std::vector<Outcome> out;
    verify_claim(claim, mode, ctx, [&out](Outcome o) { out.push_back(std::move(o)); });
    return out;
}

std::size_t Report::errored() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.errored;
    return n;
}

bool Report::budget_exceeded() const {
    for (const auto& r : records) {
        for (const auto& t : r.racks) {
            if (t.budget_exceeded) return true;
        }
    }
    return false;
}

std::vector<std::pair<std::string, RackPtr>> default_suite_racks() {
    std::vector<std::pair<std::string, RackPtr>> out;
    for (const char* kind : {"trivial", "cyclic", "dihedral"}) {
        for (std::size_t n : {3, 4}) {
            RackParams p;
            p.n = n;
            out.emplace_back(std::string("builtin:") + kind + ":" + std::to_string(n),
                             std::make_shared<const FiniteRack>(rack_builtin(parse_rack_kind(kind), p)));
        }
    }
    return out;
}

Report run_suite(const SuiteConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.config = config;

    std::vector<ClaimId> claims = config.claims;
    if (claims.empty()) {
        for (const auto& c : kClaims) claims.push_back(c.id);
    }

    // Contexts are shared across claims so cached data is computed once per
    // rack; a rack whose context cannot be built errors every claim.
    std::vector<std::optional<Context>> contexts;
    std::vector<std::exception_ptr> context_errors;
    for (const auto& [name, rack] : config.racks) {
        try {
            contexts.emplace_back(spec_for(config, name, rack));
            context_errors.emplace_back();
        } catch (const std::exception&) {
            contexts.emplace_back();
            context_errors.push_back(std::current_exception());
        }
    }

    for (ClaimId id : claims) {
        const ClaimInfo& info = claim_info(id);
        for (Mode mode : modes_for(info, config.mode)) {
            const auto claim_start = std::chrono::steady_clock::now();
            ClaimRecord rec;
            rec.id = id;
            rec.mode = mode;
            for (std::size_t i = 0; i < config.racks.size(); ++i) {
                RackTally tally;
                tally.rack = config.racks[i].first;
                try {
                    if (!contexts[i]) std::rethrow_exception(context_errors[i]);
                    verify_claim(id, mode, *contexts[i], [&](Outcome o) {
                        ++rec.instances;
                        switch (o.verdict.status) {
                        case Status::holds:
                            ++rec.holds, ++tally.holds;
                            break;
                        case Status::skipped:
                            ++rec.skipped, ++tally.skipped;
                            ++rec.skip_reasons[o.verdict.note];
                            break;
                        case Status::fails:
                            ++rec.fails, ++tally.fails;
                            ++rec.certificates_total;
                            if (config.certificate_limit == 0 || rec.certificates.size() < config.certificate_limit) {
                                rec.certificates.push_back(
                                    Certificate{tally.rack, config.q, std::move(o.instance), std::move(o.verdict)});
                            }
                            break;
                        }
                    });
                } catch (const SizeLimitExceeded& e) {
                    tally.error = e.what();
                    tally.budget_exceeded = true;
                    rec.errored = true;
                } catch (const std::exception& e) {
                    tally.error = e.what();
                    rec.errored = true;
                }
                rec.racks.push_back(std::move(tally));
            }
            rec.millis = millis_since(claim_start);
            report.records.push_back(std::move(rec));
        }
    }
    report.millis = millis_since(start);
    return report;
}

Verdict replay(ClaimId claim, Mode mode, const Certificate& certificate, const SuiteConfig& config) {
    for (const auto& [name, rack] : config.racks) {
        if (name == certificate.rack) {
            SuiteConfig c = config;
            c.q = certificate.q;
            Context ctx(spec_for(c, name, rack));
            return check_case(claim, mode, ctx, certificate.instance);
        }
    }
    throw ValidationError("UnknownRack", "certificate names rack '" + certificate.rack + "' not in the configuration");
}

} // namespace rackca
