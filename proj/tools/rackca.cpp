// rackca: command-line front end for the rack cellular automaton library.
//
// Exit codes: 0 success, 1 validation error, 2 budget exceeded, 3 bad usage.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rackca/harness.hpp"
#include "rackca/io.hpp"

using namespace rackca;

namespace {

constexpr int kUsage = 3;

struct Options {
    std::string format = "text";
    std::string out;
    std::string rack;
    std::size_t q = 2;
    std::uint64_t budget = kDefaultBudget;

    std::string target;  // positional descriptor or file
    std::string ca;
    std::vector<std::string> cas;
    std::string map;
    std::string memory;
    std::string rule;
    std::string config;
    std::size_t steps = 0;
    std::string trace;
    std::size_t r = 0;
    std::size_t n = 0;
    bool labelled = false;
    bool quandles = false;
    std::string group;

    std::vector<std::string> racks;
    std::uint64_t seed = 0;
    std::string mode;
    std::size_t max_memory = 2;
    std::size_t random_maps = 100;
    std::size_t certificate_limit = 50;
    bool no_timing = false;
    std::optional<ConfigIndex> x;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ValidationError("FileNotWritable", "cannot write '" + o.out + "'");
    f << text;
}

void emit(const Options& o, const Json& j, const std::string& text) {
    emit(o, o.format == "json" ? j.dump(2) + "\n" : text);
}

std::string table_text(const IndexTable& t) {
    std::ostringstream s;
    for (const auto& row : t) {
        for (std::size_t i = 0; i < row.size(); ++i) s << (i ? " " : "") << row[i];
        s << "\n";
    }
    return s.str();
}

std::string subset_text(const Subset& s) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << "}";
    return out.str();
}

std::vector<std::size_t> parse_list(const std::string& s) {
    std::vector<std::size_t> out;
    if (s.empty()) return out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw ValidationError("BadFormat", "expected a comma-separated list of indices, got '" + s + "'");
        }
        out.push_back(std::stoul(item));
    }
    return out;
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream s;
    s << v.claim << ": " << to_string(v.status);
    if (!v.instance.empty()) s << " [" << v.instance << "]";
    if (v.witness) {
        s << " " << v.witness->kind();
        for (const auto& [k, val] : v.witness->fields()) s << " " << k << "=" << val;
    }
    if (!v.note.empty()) s << " (" << v.note << ")";
    s << "\n";
    return s.str();
}

RackPtr need_rack(const Options& o) {
    if (o.rack.empty()) throw CLI::ValidationError("--rack", "a rack is required");
    return load_rack(o.rack);
}

CellularAutomaton ca_from_file(const std::string& path, const Options& o) {
    return ca_from_json(read_json(path), o.rack.empty() ? nullptr : load_rack(o.rack), o.q);
}

// --ca <file>, or --memory/--rule with --rack and --q.
CellularAutomaton need_ca(const Options& o) {
    if (!o.ca.empty()) return ca_from_file(o.ca, o);
    if (o.rule.empty()) throw CLI::ValidationError("--ca", "give --ca <file> or --memory/--rule");
    Subset memory;
    for (auto m : parse_list(o.memory)) memory.push_back(static_cast<Element>(m));
    std::vector<Symbol> rule;
    for (char c : o.rule) {
        if (c < '0' || c > '9') throw ValidationError("BadFormat", "rule digits must be 0-9");
        rule.push_back(static_cast<Symbol>(c - '0'));
    }
    return CellularAutomaton(need_rack(o), o.q, normalized(memory), rule);
}

Configuration need_config(const Options& o, std::size_t n) {
    if (o.config.empty()) throw CLI::ValidationError("--config", "a configuration is required");
    Configuration x = o.config.find(".json") != std::string::npos ? config_from_json(read_json(o.config))
                                                                  : config_from_digits(o.config, o.q);
    if (x.size() != n) {
        throw ValidationError("SizeMismatch", "configuration has " + std::to_string(x.size()) + " cells, rack has " +
                                                  std::to_string(n));
    }
    return x;
}

// ---- rack / group / action -------------------------------------------------

void rack_build(const Options& o) {
    const RackPtr r = load_rack(o.target);
    emit(o, to_json(*r), table_text(r->op_table()));
}

void rack_check(const Options& o) {
    const RackPtr r = load_rack(o.target);
    Json j{{"valid", true}, {"n", r->order()}, {"quandle", r->is_quandle()}};
    emit(o, j, "valid rack of order " + std::to_string(r->order()) + (r->is_quandle() ? ", quandle\n" : ", not a quandle\n"));
}

void rack_inner_group(const Options& o) {
    const RackPtr r = load_rack(o.target);
    const auto g = inner_group(*r);
    Json perms = Json::array();
    std::ostringstream text;
    text << "inner group of order " << g.size() << "\n";
    for (const auto& p : g) {
        perms.push_back(p.map());
        for (std::size_t i = 0; i < p.degree(); ++i) text << (i ? " " : "") << p(static_cast<Element>(i));
        text << "\n";
    }
    emit(o, Json{{"order", g.size()}, {"elements", perms}}, text.str());
}

void rack_enumerate(const Options& o) {
    auto racks = enumerate_racks(o.n, !o.labelled);
    if (o.quandles) std::erase_if(racks, [](const FiniteRack& r) { return !r.is_quandle(); });
    Json list = Json::array();
    std::ostringstream text;
    text << racks.size() << (o.quandles ? " quandles" : " racks") << " of order " << o.n
         << (o.labelled ? "" : " up to isomorphism") << "\n";
    for (const auto& r : racks) {
        list.push_back(to_json(r));
        text << "\n" << table_text(r.op_table());
    }
    emit(o, Json{{"n", o.n}, {"count", racks.size()}, {"racks", list}}, text.str());
}

void group_build(const Options& o) {
    const FiniteGroup g = load_group(o.target);
    emit(o, to_json(g), table_text(g.table()));
}

void group_check(const Options& o) {
    const FiniteGroup g = load_group(o.target);
    emit(o, Json{{"valid", true}, {"n", g.order()}, {"identity", g.identity()}},
         "valid group of order " + std::to_string(g.order()) + ", identity " + std::to_string(g.identity()) + "\n");
}

void action_check(const Options& o) {
    const RackAction a = action_from_json(read_json(o.target));
    Json stabs = Json::array();
    std::ostringstream text;
    text << "valid action of a rack of order " << a.rack().order() << " on " << a.set_size() << " points\n";
    for (Element x = 0; x < a.set_size(); ++x) {
        const auto st = action_stabilizer(a, x);
        stabs.push_back(Json{{"x", x}, {"stabilizer", st.elements}, {"check", to_json(st.check)}});
        text << "Stab(" << x << ") = " << subset_text(st.elements) << "  " << verdict_text(st.check);
    }
    emit(o, Json{{"valid", true}, {"stabilizers", stabs}}, text.str());
}

// ---- config ----------------------------------------------------------------

void config_shift(const Options& o) {
    const RackPtr r = need_rack(o);
    const Configuration x = need_config(o, r->order());
    if (o.r >= r->order()) throw ValidationError("IndexOutOfRange", "--r is not an element of the rack");
    const Configuration y = shift(*r, static_cast<Element>(o.r), x);
    emit(o, to_json(y), to_digits(y) + "\n");
}

void config_stab(const Options& o) {
    const RackPtr r = need_rack(o);
    const auto st = config_stabilizer(*r, need_config(o, r->order()));
    emit(o, Json{{"stabilizer", st.elements}, {"check", to_json(st.check)}}, subset_text(st.elements) + "\n");
}

// ---- ca --------------------------------------------------------------------

void ca_apply_cmd(const Options& o) {
    const auto ca = need_ca(o);
    const Configuration y = ca_apply(ca, need_config(o, ca.rack().order()));
    emit(o, to_json(y), to_digits(y) + "\n");
}

void ca_evolve_cmd(const Options& o) {
    const auto ca = need_ca(o);
    const auto orbit = ca_evolve(ca, need_config(o, ca.rack().order()), o.steps);
    std::ostringstream s;
    if (o.trace == "csv") {
        s << "step";
        for (std::size_t c = 0; c < ca.rack().order(); ++c) s << ",c" << c;
        s << "\n";
        for (std::size_t t = 0; t < orbit.size(); ++t) {
            s << t;
            for (Symbol v : orbit[t].cells()) s << "," << v;
            s << "\n";
        }
        emit(o, s.str());
        return;
    }
    if (o.trace == "pgm") {
        const std::size_t q = ca.alphabet();
        s << "P2\n" << ca.rack().order() << " " << orbit.size() << "\n255\n";
        for (const auto& x : orbit) {
            for (std::size_t c = 0; c < x.size(); ++c) {
                s << (c ? " " : "") << (q > 1 ? x[static_cast<Element>(c)] * 255 / (q - 1) : 0);
            }
            s << "\n";
        }
        emit(o, s.str());
        return;
    }
    Json steps = Json::array();
    for (const auto& x : orbit) {
        steps.push_back(x.cells());
        s << to_digits(x) << "\n";
    }
    emit(o, Json{{"kind", "trace"}, {"q", ca.alphabet()}, {"steps", steps}}, s.str());
}

void ca_eqset_cmd(const Options& o) {
    const auto ca = need_ca(o);
    const auto eq = eq_set(ca, o.budget);
    Json j{{"eq", eq.elements}, {"check", to_json(eq.check)}};
    std::string text = "Eq = " + subset_text(eq.elements) + "\n";
    if (!o.config.empty()) {
        const auto st = stab_eq(ca.rack(), global_map(ca, o.budget), need_config(o, ca.rack().order()));
        j["stab_eq"] = st.elements;
        j["stab_eq_check"] = to_json(st.check);
        text += "Stab(x, Eq) = " + subset_text(st.elements) + "\n";
    }
    emit(o, j, text);
}

void ca_minmem_cmd(const Options& o) {
    RackPtr rack;
    GlobalMap f;
    if (!o.map.empty()) {
        rack = need_rack(o);
        f = map_from_json(read_json(o.map));
        if (f.cells() != rack->order()) throw ValidationError("SizeMismatch", "map and rack sizes differ");
    } else {
        const auto ca = need_ca(o);
        rack = ca.rack_ptr();
        f = global_map(ca, o.budget);
    }
    const MinimalMemory mm = minimal_memory(*rack, f);
    Json minimal = Json::array();
    for (const auto& m : mm.minimal) minimal.push_back(m);
    const CellularAutomaton rule_ca(rack, f.alphabet(), mm.rule.memory, mm.rule.rule);
    Json j{{"minimal", minimal},
           {"intersection", mm.intersection},
           {"memory_sets", mm.memory_sets.size()},
           {"uniqueness", to_json(mm.uniqueness)},
           {"ca", to_json(rule_ca, &mm.rule.constrained)}};
    std::ostringstream text;
    text << "minimal memory " << subset_text(mm.minimal.front()) << " (" << mm.minimal.size() << " of minimal size, "
         << mm.memory_sets.size() << " memory sets)\n"
         << verdict_text(mm.uniqueness);
    emit(o, j, text.str());
}

void ca_compose_cmd(const Options& o) {
    if (o.cas.size() != 2) throw CLI::ValidationError("--ca", "compose needs exactly two --ca files (sigma then tau)");
    const auto sigma = ca_from_file(o.cas[0], o);
    const auto tau = ca_from_file(o.cas[1], o);
    const Composition c = compose_checked(sigma, tau, o.budget);
    emit(o, Json{{"composite", to_json(c.composite)}, {"claimed", to_json(c.claimed)}, {"verdict", to_json(c.verdict)}},
         "claimed memory " + subset_text(c.claimed.memory()) + "\n" + verdict_text(c.verdict));
}

void ca_invert_cmd(const Options& o) {
    const auto ca = need_ca(o);
    const Inversion inv = invert_checked(ca, o.budget);
    Json j{{"bijective", inv.bijective}};
    std::string text = std::string(inv.bijective ? "bijective" : "not bijective") + "\n";
    if (inv.inverse) j["inverse"] = to_json(*inv.inverse);
    if (inv.inverse_ca) {
        j["inverse_ca"] = to_json(*inv.inverse_ca);
        text += "inverse automaton memory " + subset_text(inv.inverse_ca->memory()) + "\n";
    }
    if (inv.not_a_ca) j["not_a_ca"] = to_json(inv.not_a_ca->witness());
    j["verdict"] = to_json(inv.verdict);
    emit(o, j, text + verdict_text(inv.verdict));
}

void ca_majority_cmd(const Options& o) {
    if (o.group.empty()) throw CLI::ValidationError("--group", "a group is required");
    Subset memory;
    for (auto m : parse_list(o.memory)) memory.push_back(static_cast<Element>(m));
    const Majority m = majority_ca(load_group(o.group), normalized(memory), o.budget);
    emit(o, Json{{"ca", to_json(m.ca)}, {"direct", to_json(m.direct)}, {"agreement", to_json(m.agreement)}},
         "memory " + subset_text(m.ca.memory()) + "\n" + verdict_text(m.agreement));
}

// ---- verify ----------------------------------------------------------------

int verify_cmd(const Options& o) {
    SuiteConfig c;
    if (o.racks.empty()) {
        c.racks = default_suite_racks();
    } else {
        for (const auto& r : o.racks) c.racks.emplace_back(r, load_rack(r));
    }
    c.q = o.q;
    c.budget = o.budget;
    c.seed = o.seed;
    c.max_memory = o.max_memory;
    c.random_maps = o.random_maps;
    c.certificate_limit = o.certificate_limit;
    c.x = o.x;
    if (!o.mode.empty()) c.mode = parse_mode(o.mode);
    if (o.target != "all") c.claims.push_back(parse_claim(o.target));

    const Report report = run_suite(c);
    std::ostringstream text;
    for (const auto& rec : report.records) {
        text << claim_info(rec.id).name << " " << to_string(rec.mode) << ": " << rec.instances << " instances, "
             << rec.holds << " HOLDS, " << rec.fails << " FAILS, " << rec.skipped << " SKIPPED"
             << (rec.errored ? ", ERRORED" : "") << "\n";
        for (const auto& t : rec.racks) {
            if (t.error) text << "  " << t.rack << ": " << *t.error << "\n";
        }
    }
    emit(o, to_json(report, !o.no_timing), text.str());
    if (report.errored() == 0) return 0;
    return report.budget_exceeded() ? 2 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rackca: racks, rack actions and cellular automata over finite racks"};
    app.require_subcommand(1);
    Options o;
    int result = 0;

    auto common = [&o](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", o.out, "write output to this path");
    };
    auto rack_opts = [&o](CLI::App* cmd) {
        cmd->add_option("--rack", o.rack, "rack descriptor (builtin:<kind>[:<param>]*, enum:<n>:<i>) or file");
        cmd->add_option("--q", o.q, "alphabet size")->check(CLI::Range(1, 1 << 16));
        cmd->add_option("--budget", o.budget, "maximum table entries scanned");
    };
    auto ca_opts = [&o, &rack_opts](CLI::App* cmd) {
        rack_opts(cmd);
        cmd->add_option("--ca", o.ca, "automaton file");
        cmd->add_option("--memory", o.memory, "memory set, comma separated");
        cmd->add_option("--rule", o.rule, "rule digits in pattern order");
    };
    auto run = [&result](auto fn) {
        return [fn, &result] {
            if constexpr (std::is_same_v<decltype(fn()), int>) {
                result = fn();
            } else {
                fn();
            }
        };
    };

    auto* rack = app.add_subcommand("rack", "build and validate racks")->require_subcommand(1);
    auto* rack_build_cmd = rack->add_subcommand("build", "emit a rack file");
    rack_build_cmd->add_option("rack", o.target, "rack descriptor")->required();
    auto* rack_check_cmd = rack->add_subcommand("check", "validate a rack");
    rack_check_cmd->add_option("rack", o.target, "rack descriptor or file")->required();
    auto* rack_inner = rack->add_subcommand("inner-group", "list the inner group");
    rack_inner->add_option("rack", o.target, "rack descriptor or file")->required();
    auto* rack_enum = rack->add_subcommand("enumerate", "all racks of a small order");
    rack_enum->add_option("--n", o.n, "order (at most 4)")->required();
    rack_enum->add_flag("--labelled", o.labelled, "keep every labelled table instead of one per isomorphism class");
    rack_enum->add_flag("--quandles", o.quandles, "only quandles");
    for (auto* c : {rack_build_cmd, rack_check_cmd, rack_inner, rack_enum}) common(c);
    rack_build_cmd->callback(run([&o] { rack_build(o); }));
    rack_check_cmd->callback(run([&o] { rack_check(o); }));
    rack_inner->callback(run([&o] { rack_inner_group(o); }));
    rack_enum->callback(run([&o] { rack_enumerate(o); }));

    auto* group = app.add_subcommand("group", "build and validate groups")->require_subcommand(1);
    auto* group_build_cmd = group->add_subcommand("build", "emit a group file");
    group_build_cmd->add_option("group", o.target, "builtin:<cyclic|dihedral|symmetric>:<n>")->required();
    auto* group_check_cmd = group->add_subcommand("check", "validate a group");
    group_check_cmd->add_option("group", o.target, "group descriptor or file")->required();
    for (auto* c : {group_build_cmd, group_check_cmd}) common(c);
    group_build_cmd->callback(run([&o] { group_build(o); }));
    group_check_cmd->callback(run([&o] { group_check(o); }));

    auto* action = app.add_subcommand("action", "rack actions")->require_subcommand(1);
    auto* action_check_cmd = action->add_subcommand("check", "validate an action file and list stabilizers");
    action_check_cmd->add_option("action", o.target, "action file")->required();
    common(action_check_cmd);
    action_check_cmd->callback(run([&o] { action_check(o); }));

    auto* config = app.add_subcommand("config", "configurations and the shift action")->require_subcommand(1);
    auto* shift_cmd = config->add_subcommand("shift", "r . x");
    shift_cmd->add_option("--r", o.r, "acting element")->required();
    auto* stab_cmd = config->add_subcommand("stab", "stabilizer of x");
    for (auto* c : {shift_cmd, stab_cmd}) {
        common(c);
        rack_opts(c);
        c->add_option("--config", o.config, "digit string or config file")->required();
    }
    shift_cmd->callback(run([&o] { config_shift(o); }));
    stab_cmd->callback(run([&o] { config_stab(o); }));

    auto* ca = app.add_subcommand("ca", "cellular automata")->require_subcommand(1);
    auto* apply = ca->add_subcommand("apply", "tau(x)");
    auto* evolve = ca->add_subcommand("evolve", "x, tau(x), tau^2(x), ...");
    auto* eqset = ca->add_subcommand("eqset", "Eq(tau), and Stab(x, Eq(tau)) with --config");
    auto* minmem = ca->add_subcommand("minmem", "minimal memory set of an automaton or a map");
    auto* invert = ca->add_subcommand("invert", "bijectivity and inverse automaton");
    for (auto* c : {apply, evolve, eqset, minmem, invert}) {
        common(c);
        ca_opts(c);
    }
    for (auto* c : {apply, evolve}) c->add_option("--config", o.config, "digit string or config file")->required();
    eqset->add_option("--config", o.config, "digit string or config file");
    evolve->add_option("--steps", o.steps, "number of steps");
    evolve->add_option("--trace", o.trace, "csv or pgm")->check(CLI::IsMember({"csv", "pgm"}));
    minmem->add_option("--map", o.map, "global map file (needs --rack)");
    auto* compose = ca->add_subcommand("compose", "sigma after tau, checked against the composed rule");
    common(compose);
    rack_opts(compose);
    compose->add_option("--ca", o.cas, "automaton files: sigma then tau")->expected(2);
    auto* majority = ca->add_subcommand("majority", "majority automaton on conj(G)");
    common(majority);
    majority->add_option("--group", o.group, "group descriptor or file")->required();
    majority->add_option("--memory", o.memory, "memory set, comma separated")->required();
    majority->add_option("--budget", o.budget, "maximum table entries scanned");
    apply->callback(run([&o] { ca_apply_cmd(o); }));
    evolve->callback(run([&o] { ca_evolve_cmd(o); }));
    eqset->callback(run([&o] { ca_eqset_cmd(o); }));
    minmem->callback(run([&o] { ca_minmem_cmd(o); }));
    invert->callback(run([&o] { ca_invert_cmd(o); }));
    compose->callback(run([&o] { ca_compose_cmd(o); }));
    majority->callback(run([&o] { ca_majority_cmd(o); }));

    auto* verify = app.add_subcommand("verify", "run claim checks and print a report");
    verify->add_option("claim", o.target, "claim id or 'all'")->required();
    common(verify);
    verify->add_option("--rack", o.racks, "racks to check (repeatable; default: the built-in suite)");
    verify->add_option("--q", o.q, "alphabet size")->check(CLI::Range(1, 1 << 16));
    verify->add_option("--budget", o.budget, "maximum table entries scanned");
    verify->add_option("--seed", o.seed, "seed for random maps and sampling");
    verify->add_option("--mode", o.mode, "ambient or restricted")->check(CLI::IsMember({"ambient", "restricted"}));
    verify->add_option("--max-memory", o.max_memory, "automata with |M| up to this size");
    verify->add_option("--random-maps", o.random_maps, "random global maps per rack for T4.3");
    verify->add_option("--cert-limit", o.certificate_limit, "certificates kept per record, 0 for all");
    verify->add_option("--x", o.x, "only this configuration index for x-dependent claims");
    verify->add_flag("--no-timing", o.no_timing, "leave timing out of the report");
    verify->callback(run([&o] { return verify_cmd(o); }));
    // Reports are JSON unless text is asked for.
    verify->preparse_callback([&o](std::size_t) { o.format = "json"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const SizeLimitExceeded& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const rackca::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "Error: " << e.what() << "\n";
        return 1;
    }
    return result;
}
