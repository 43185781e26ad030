#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rackca {

// Base of every error raised by the library. `name()` is the stable error
// identifier (e.g. "NotAssociative") that the CLI prints on standard error;
// `witness()` holds the violating indices, when the error has any.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail, std::vector<std::int64_t> witness = {})
        : std::runtime_error(name + ": " + detail), name_(std::move(name)), witness_(std::move(witness)) {}

    const std::string& name() const noexcept { return name_; }
    std::span<const std::int64_t> witness() const noexcept { return witness_; }

private:
    std::string name_;
    std::vector<std::int64_t> witness_;
};

// Input failed a structural check (axioms, bounds, preconditions).
class ValidationError : public Error {
public:
    using Error::Error;
};

// An exhaustive scan would exceed the configured table budget.
class SizeLimitExceeded : public Error {
public:
    explicit SizeLimitExceeded(const std::string& detail) : Error("SizeLimitExceeded", detail) {}
};

// Default cap on the number of entries of any exhaustively scanned table
// (configurations, rule tables, subset families).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 16;

// base^exp, throwing SizeLimitExceeded once the result passes `limit`.
inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit, const char* what) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) {
            throw SizeLimitExceeded(std::string(what) + " exceeds budget of " + std::to_string(limit) + " entries");
        }
        result *= base;
    }
    if (result > limit) {
        throw SizeLimitExceeded(std::string(what) + " exceeds budget of " + std::to_string(limit) + " entries");
    }
    return result;
}

} // namespace rackca
