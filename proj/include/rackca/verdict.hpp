#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rackca {

enum class Status { holds, fails, skipped };

std::string_view to_string(Status s);

// Replayable evidence for a FAILS verdict: named element indices, encoded
// configurations and the two evaluated sides, in insertion order.
class Witness {
public:
    Witness() = default;
    explicit Witness(std::string kind) : kind_(std::move(kind)) {}

    Witness& add(std::string key, std::int64_t value) {
        fields_.emplace_back(std::move(key), value);
        return *this;
    }

    const std::string& kind() const noexcept { return kind_; }
    const std::vector<std::pair<std::string, std::int64_t>>& fields() const noexcept { return fields_; }

    std::optional<std::int64_t> find(std::string_view key) const;
    // Like find(), but throws std::out_of_range when the key is missing.
    std::int64_t at(std::string_view key) const;

    friend bool operator==(const Witness&, const Witness&) = default;

private:
    std::string kind_;
    std::vector<std::pair<std::string, std::int64_t>> fields_;
};

struct Verdict {
    Status status = Status::holds;
    std::string claim;
    std::string instance;
    // Reason for SKIPPED, or a free-form remark on the outcome.
    std::string note;
    std::optional<Witness> witness;

    static Verdict holds(std::string claim, std::string instance = {}) {
        return {Status::holds, std::move(claim), std::move(instance), {}, std::nullopt};
    }
    static Verdict fails(std::string claim, Witness w, std::string instance = {}) {
        return {Status::fails, std::move(claim), std::move(instance), {}, std::move(w)};
    }
    static Verdict skipped(std::string claim, std::string reason, std::string instance = {}) {
        return {Status::skipped, std::move(claim), std::move(instance), std::move(reason), std::nullopt};
    }

    bool held() const noexcept { return status == Status::holds; }
    bool failed() const noexcept { return status == Status::fails; }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

// First failure wins; otherwise HOLDS unless every part was SKIPPED.
Verdict combine(std::string claim, const std::vector<Verdict>& parts);

} // namespace rackca
