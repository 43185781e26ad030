#include "rackca/verdict.hpp"

#include <stdexcept>

namespace rackca {

std::string_view to_string(Status s) {
    switch (s) {
    case Status::holds:
        return "HOLDS";
    case Status::fails:
        return "FAILS";
    case Status::skipped:
        return "SKIPPED";
    }
    return "?";
}

std::optional<std::int64_t> Witness::find(std::string_view key) const {
    for (const auto& [k, v] : fields_) {
        if (k == key) return v;
    }
    return std::nullopt;
}

std::int64_t Witness::at(std::string_view key) const {
    if (auto v = find(key)) return *v;
    throw std::out_of_range("witness has no field '" + std::string(key) + "'");
}

Verdict combine(std::string claim, const std::vector<Verdict>& parts) {
    bool any_ran = parts.empty();
    for (const auto& p : parts) {
        if (p.failed()) {
            Verdict v = p;
            v.claim = claim;
            return v;
        }
        if (p.status != Status::skipped) any_ran = true;
    }
    if (!any_ran) return Verdict::skipped(std::move(claim), parts.front().note);
    return Verdict::holds(std::move(claim));
}

} // namespace rackca
