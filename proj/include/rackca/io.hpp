#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "rackca/action.hpp"
#include "rackca/ca.hpp"
#include "rackca/harness.hpp"

namespace rackca {

using Json = nlohmann::ordered_json;

// Every *_from_json throws ValidationError "BadFormat" on a malformed
// document, then the owning module's errors on invalid content. Derived data
// (identity, inverses, inverse operation, quandle flag) is always recomputed.

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json to_json(const FiniteRack& r);
FiniteRack rack_from_json(const Json& j);

Json to_json(const RackAction& a);
RackAction action_from_json(const Json& j);

Json to_json(const Configuration& x);
Configuration config_from_json(const Json& j);
// Compact digit string in cell order, q <= 10.
Configuration config_from_digits(std::string_view digits, std::size_t q);
std::string to_digits(const Configuration& x);

// `unconstrained` lists rule entries no input reached (memory oracle output).
Json to_json(const CellularAutomaton& ca, const std::vector<bool>* constrained = nullptr);
// The "rack" member may be a rack object or a descriptor (see load_rack); when
// absent, `rack` is used. A missing "q" falls back to `q`.
CellularAutomaton ca_from_json(const Json& j, const RackPtr& rack = nullptr, std::optional<std::size_t> q = std::nullopt);

Json to_json(const GlobalMap& f);
GlobalMap map_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const Case& c);
Case case_from_json(const Json& j);

// Report file. With timing == false the "timing" member is left out, which
// makes reports of identical configurations byte-identical.
Json to_json(const Report& report, bool timing = true);

Json read_json(const std::filesystem::path& path);

// builtin:trivial:<n> | builtin:cyclic:<n> | builtin:dihedral:<n> |
// builtin:affine:<n>:<alpha> | builtin:conj:<group>:<n> |
// builtin:core:<group>:<n> | builtin:transpositions:<n> |
// enum:<n>:<i> (the i-th rack of order n up to isomorphism) | a rack file.
RackPtr load_rack(std::string_view descriptor);

// builtin:cyclic:<n> | builtin:dihedral:<n> | builtin:symmetric:<n> | a group file.
FiniteGroup load_group(std::string_view descriptor);

} // namespace rackca
