#include "rackca/io.hpp"

#include <fstream>
#include <memory>
#include <vector>

namespace rackca {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ValidationError("BadFormat", what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing member '") + key + "'");
    return j.at(key);
}

std::uint64_t as_uint(const Json& j, const char* what) {
    if (!j.is_number_unsigned()) bad(std::string(what) + " must be a non-negative integer");
    return j.get<std::uint64_t>();
}

std::int64_t as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

void expect_kind(const Json& j, const char* kind) {
    const Json& k = member(j, "kind");
    if (!k.is_string() || k.get<std::string>() != kind) bad(std::string("expected kind '") + kind + "'");
}

template <class T>
std::vector<T> uint_list(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<T> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(static_cast<T>(as_uint(v, what)));
    return out;
}

IndexTable table_of(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of rows");
    IndexTable t;
    for (const auto& row : j) t.push_back(uint_list<Element>(row, what));
    return t;
}

Json table_json(const IndexTable& t) {
    Json rows = Json::array();
    for (const auto& row : t) rows.push_back(row);
    return rows;
}

Status parse_status(const std::string& s) {
    if (s == "HOLDS") return Status::holds;
    if (s == "FAILS") return Status::fails;
    if (s == "SKIPPED") return Status::skipped;
    bad("unknown status '" + s + "'");
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::size_t parse_count(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
        throw ValidationError("BadDescriptor", std::string(what) + " must be a non-negative integer, got '" + s + "'");
    }
    return std::stoul(s);
}

long long parse_signed(const std::string& s, const char* what) {
    const std::string digits = !s.empty() && s[0] == '-' ? s.substr(1) : s;
    return (s[0] == '-' ? -1 : 1) * static_cast<long long>(parse_count(digits, what));
}

} // namespace

// ---- algebra --------------------------------------------------------------

Json to_json(const FiniteGroup& g) {
    Json j;
    j["kind"] = "group";
    j["n"] = g.order();
    j["mul"] = table_json(g.table());
    return j;
}

FiniteGroup group_from_json(const Json& j) {
    expect_kind(j, "group");
    const auto n = as_uint(member(j, "n"), "n");
    IndexTable t = table_of(member(j, "mul"), "mul");
    if (t.size() != n) bad("mul has " + std::to_string(t.size()) + " rows but n = " + std::to_string(n));
    return group_from_table(t);
}

Json to_json(const FiniteRack& r) {
    Json j;
    j["kind"] = "rack";
    j["n"] = r.order();
    j["op"] = table_json(r.op_table());
    return j;
}

FiniteRack rack_from_json(const Json& j) {
    expect_kind(j, "rack");
    const auto n = as_uint(member(j, "n"), "n");
    IndexTable t = table_of(member(j, "op"), "op");
    if (t.size() != n) bad("op has " + std::to_string(t.size()) + " rows but n = " + std::to_string(n));
    return rack_from_table(t);
}

namespace {

RackPtr rack_member(const Json& j) {
    const Json& r = member(j, "rack");
    if (r.is_string()) return load_rack(r.get<std::string>());
    return std::make_shared<const FiniteRack>(rack_from_json(r));
}

} // namespace

Json to_json(const RackAction& a) {
    Json j;
    j["kind"] = "action";
    j["rack"] = to_json(a.rack());
    j["m"] = a.set_size();
    j["act"] = table_json(a.table());
    return j;
}

RackAction action_from_json(const Json& j) {
    expect_kind(j, "action");
    RackPtr rack = rack_member(j);
    const auto m = as_uint(member(j, "m"), "m");
    IndexTable t = table_of(member(j, "act"), "act");
    for (const auto& row : t) {
        if (row.size() != m) bad("act rows must have m = " + std::to_string(m) + " entries");
    }
    return action_from_table(std::move(rack), t);
}

// ---- configurations and automata ------------------------------------------

Json to_json(const Configuration& x) {
    Json j;
    j["kind"] = "config";
    j["q"] = x.alphabet();
    j["cells"] = x.cells();
    return j;
}

Configuration config_from_json(const Json& j) {
    expect_kind(j, "config");
    return Configuration(as_uint(member(j, "q"), "q"), uint_list<Symbol>(member(j, "cells"), "cells"));
}

Configuration config_from_digits(std::string_view digits, std::size_t q) {
    if (q > 10) throw ValidationError("InvalidAlphabet", "digit strings need q <= 10");
    std::vector<Symbol> cells;
    for (char c : digits) {
        if (c < '0' || c > '9') throw ValidationError("BadFormat", "configuration digits must be 0-9");
        cells.push_back(static_cast<Symbol>(c - '0'));
    }
    return Configuration(q, std::move(cells));
}

std::string to_digits(const Configuration& x) {
    std::string out;
    for (Symbol s : x.cells()) out += s < 10 ? static_cast<char>('0' + s) : '?';
    return out;
}

Json to_json(const CellularAutomaton& ca, const std::vector<bool>* constrained) {
    Json j;
    j["kind"] = "ca";
    j["rack"] = to_json(ca.rack());
    j["q"] = ca.alphabet();
    j["memory"] = ca.memory();
    j["rule"] = ca.rule();
    if (constrained) {
        Json free = Json::array();
        for (std::size_t i = 0; i < constrained->size(); ++i) {
            if (!(*constrained)[i]) free.push_back(i);
        }
        j["unconstrained"] = free;
    }
    return j;
}

CellularAutomaton ca_from_json(const Json& j, const RackPtr& rack, std::optional<std::size_t> q) {
    expect_kind(j, "ca");
    RackPtr r = j.contains("rack") ? rack_member(j) : rack;
    if (!r) bad("automaton has no rack");
    std::size_t alphabet = 0;
    if (j.contains("q")) {
        alphabet = as_uint(j.at("q"), "q");
    } else if (q) {
        alphabet = *q;
    } else {
        bad("automaton has no alphabet size");
    }
    return CellularAutomaton(std::move(r), alphabet, uint_list<Element>(member(j, "memory"), "memory"),
                             uint_list<Symbol>(member(j, "rule"), "rule"));
}

Json to_json(const GlobalMap& f) {
    Json j;
    j["kind"] = "map";
    j["n"] = f.cells();
    j["q"] = f.alphabet();
    j["table"] = f.table();
    return j;
}

GlobalMap map_from_json(const Json& j) {
    expect_kind(j, "map");
    return GlobalMap(as_uint(member(j, "n"), "n"), as_uint(member(j, "q"), "q"),
                     uint_list<ConfigIndex>(member(j, "table"), "table"));
}

// ---- verdicts -------------------------------------------------------------

Json to_json(const Witness& w) {
    Json j;
    j["kind"] = w.kind();
    for (const auto& [k, v] : w.fields()) j[k] = v;
    return j;
}

Witness witness_from_json(const Json& j) {
    const Json& kind = member(j, "kind");
    if (!kind.is_string()) bad("witness kind must be a string");
    Witness w(kind.get<std::string>());
    for (const auto& [k, v] : j.items()) {
        if (k != "kind") w.add(k, as_int(v, "witness field"));
    }
    return w;
}

Json to_json(const Verdict& v) {
    Json j;
    j["claim"] = v.claim;
    j["status"] = std::string(to_string(v.status));
    if (!v.instance.empty()) j["instance"] = v.instance;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

Verdict verdict_from_json(const Json& j) {
    Verdict v;
    const Json& claim = member(j, "claim");
    const Json& status = member(j, "status");
    if (!claim.is_string() || !status.is_string()) bad("claim and status must be strings");
    v.claim = claim.get<std::string>();
    v.status = parse_status(status.get<std::string>());
    if (j.contains("instance")) v.instance = j.at("instance").get<std::string>();
    if (j.contains("note")) v.note = j.at("note").get<std::string>();
    if (j.contains("witness")) v.witness = witness_from_json(j.at("witness"));
    if (v.failed() && !v.witness) bad("a FAILS verdict needs a witness");
    return v;
}

Json to_json(const Case& c) {
    Json j = Json::object();
    if (!c.cas.empty()) {
        Json cas = Json::array();
        for (const auto& ca : c.cas) cas.push_back(Json{{"memory", ca.memory}, {"rule", ca.rule}});
        j["cas"] = cas;
    }
    if (c.map_seed) j["map_seed"] = *c.map_seed;
    if (c.x) j["x"] = *c.x;
    if (c.element) j["element"] = *c.element;
    if (c.universe) j["universe"] = *c.universe;
    return j;
}

Case case_from_json(const Json& j) {
    if (!j.is_object()) bad("instance must be an object");
    Case c;
    if (j.contains("cas")) {
        for (const auto& ca : j.at("cas")) {
            c.cas.push_back(CaSpec{uint_list<Element>(member(ca, "memory"), "memory"),
                                   uint_list<Symbol>(member(ca, "rule"), "rule")});
        }
    }
    if (j.contains("map_seed")) c.map_seed = as_uint(j.at("map_seed"), "map_seed");
    if (j.contains("x")) c.x = as_uint(j.at("x"), "x");
    if (j.contains("element")) c.element = static_cast<Element>(as_uint(j.at("element"), "element"));
    if (j.contains("universe")) c.universe = uint_list<Element>(j.at("universe"), "universe");
    return c;
}

Json to_json(const Report& report, bool timing) {
    const SuiteConfig& c = report.config;
    Json j;
    j["kind"] = "report";
    Json config;
    Json racks = Json::array();
    for (const auto& r : c.racks) racks.push_back(r.first);
    config["racks"] = racks;
    config["q"] = c.q;
    config["max_memory"] = c.max_memory;
    config["random_maps"] = c.random_maps;
    config["seed"] = c.seed;
    config["budget"] = c.budget;
    config["pair_limit"] = c.pair_limit;
    config["triple_limit"] = c.triple_limit;
    config["certificate_limit"] = c.certificate_limit;
    if (c.mode) config["mode"] = std::string(to_string(*c.mode));
    if (c.x) config["x"] = *c.x;
    j["config"] = config;

    std::size_t holds = 0, fails = 0, skipped = 0;
    Json records = Json::array();
    for (const auto& rec : report.records) {
        const ClaimInfo& info = claim_info(rec.id);
        Json r;
        r["id"] = info.name;
        r["mode"] = std::string(to_string(rec.mode));
        r["statement"] = info.statement;
        r["instances"] = rec.instances;
        r["holds"] = rec.holds;
        r["fails"] = rec.fails;
        r["skipped"] = rec.skipped;
        r["errored"] = rec.errored;
        Json by_rack = Json::array();
        for (const auto& t : rec.racks) {
            Json tj;
            tj["rack"] = t.rack;
            tj["holds"] = t.holds;
            tj["fails"] = t.fails;
            tj["skipped"] = t.skipped;
            if (t.error) tj["error"] = *t.error;
            by_rack.push_back(tj);
        }
        r["by_rack"] = by_rack;
        if (!rec.skip_reasons.empty()) {
            Json reasons = Json::object();
            for (const auto& [reason, n] : rec.skip_reasons) reasons[reason] = n;
            r["skip_reasons"] = reasons;
        }
        r["certificates_total"] = rec.certificates_total;
        Json certs = Json::array();
        for (const auto& cert : rec.certificates) {
            Json cj;
            cj["rack"] = cert.rack;
            cj["q"] = cert.q;
            cj["instance"] = to_json(cert.instance);
            cj["verdict"] = to_json(cert.verdict);
            certs.push_back(cj);
        }
        r["certificates"] = certs;
        records.push_back(r);
        holds += rec.holds;
        fails += rec.fails;
        skipped += rec.skipped;
    }
    j["claims"] = records;
    j["summary"] = Json{{"records", report.records.size()},
                        {"holds", holds},
                        {"fails", fails},
                        {"skipped", skipped},
                        {"errored", report.errored()}};
    j["notes"] = Json::array({
        "P2.15, P4.1 and P4.2: on a finite discrete space every map is continuous; the checks cover the action "
        "axiom, the coordinate projections and locality",
        "infinite alphabets and infinite racks are out of scope",
        "restricted mode: P3.12, L3.15, P3.16 and T4.3 use S = Stab(x, Eq(tau)); P5.1 uses the intersection over "
        "both automata; P5.3, P5.4 and T5.6 use Stab(x) cut with Eq(tau) over every automaton with memory R",
    });
    if (timing) {
        Json t;
        t["total_ms"] = report.millis;
        Json per = Json::object();
        for (const auto& rec : report.records) {
            per[std::string(claim_info(rec.id).name) + "/" + std::string(to_string(rec.mode))] = rec.millis;
        }
        t["claims_ms"] = per;
        j["timing"] = t;
    }
    return j;
}

// ---- files and descriptors ------------------------------------------------

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("FileNotFound", "cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

RackPtr load_rack(std::string_view descriptor) {
    const auto parts = split(descriptor, ':');
    if (parts[0] == "enum") {
        if (parts.size() != 3) throw ValidationError("BadDescriptor", "expected enum:<n>:<i>");
        const auto racks = enumerate_racks(parse_count(parts[1], "n"), true);
        const auto i = parse_count(parts[2], "i");
        if (i >= racks.size()) {
            throw ValidationError("BadDescriptor", "there are " + std::to_string(racks.size()) + " racks of that order");
        }
        return std::make_shared<const FiniteRack>(racks[i]);
    }
    if (parts[0] != "builtin") return std::make_shared<const FiniteRack>(rack_from_json(read_json(std::string(descriptor))));
    if (parts.size() < 3) throw ValidationError("BadDescriptor", "expected builtin:<kind>:<param>...");
    const std::string& kind = parts[1];
    if (kind == "transpositions") {
        if (parts.size() != 3) throw ValidationError("BadDescriptor", "expected builtin:transpositions:<n>");
        return std::make_shared<const FiniteRack>(transposition_rack(parse_count(parts[2], "n")));
    }
    const RackKind k = parse_rack_kind(kind);
    RackParams p;
    if (k == RackKind::conj || k == RackKind::core) {
        if (parts.size() != 4) throw ValidationError("BadDescriptor", "expected builtin:" + kind + ":<group>:<n>");
        p.group = parse_group_kind(parts[2]);
        p.group_n = parse_count(parts[3], "n");
    } else if (k == RackKind::affine) {
        if (parts.size() != 4) throw ValidationError("BadDescriptor", "expected builtin:affine:<n>:<alpha>");
        p.n = parse_count(parts[2], "n");
        p.alpha = parse_signed(parts[3], "alpha");
    } else {
        if (parts.size() != 3) throw ValidationError("BadDescriptor", "expected builtin:" + kind + ":<n>");
        p.n = parse_count(parts[2], "n");
    }
    return std::make_shared<const FiniteRack>(rack_builtin(k, p));
}

FiniteGroup load_group(std::string_view descriptor) {
    const auto parts = split(descriptor, ':');
    if (parts[0] != "builtin") return group_from_json(read_json(std::string(descriptor)));
    if (parts.size() != 3) throw ValidationError("BadDescriptor", "expected builtin:<kind>:<n>");
    return group_builtin(parse_group_kind(parts[1]), parse_count(parts[2], "n"));
}

} // namespace rackca
