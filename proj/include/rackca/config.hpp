#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rackca/rack.hpp"
#include "rackca/types.hpp"
#include "rackca/verdict.hpp"

namespace rackca {

// A configuration x: R -> {0..q-1}, stored cell by cell.
class Configuration {
public:
    Configuration() = default;
    // Throws ValidationError "SymbolOutOfRange" if a cell is >= q, "InvalidAlphabet" if q == 0.
    Configuration(std::size_t q, std::vector<Symbol> cells);

    static Configuration constant(std::size_t n, std::size_t q, Symbol value);

    std::size_t size() const noexcept { return cells_.size(); }
    std::size_t alphabet() const noexcept { return q_; }
    Symbol operator[](Element s) const { return cells_[s]; }
    const std::vector<Symbol>& cells() const noexcept { return cells_; }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::size_t q_ = 0;
    std::vector<Symbol> cells_;
};

// A pattern on a memory set, addressed by its little-endian index
// sum_i p(m_i) q^i over the sorted memory m_0 < ... < m_{k-1}.
struct PatternKey {
    Subset memory;
    ConfigIndex index = 0;

    friend bool operator==(const PatternKey&, const PatternKey&) = default;
};

// Little-endian base-q positional encoding: cell s carries weight q^s.
ConfigIndex encode_config(const Configuration& x);
// Throws ValidationError "IndexOutOfRange" when i >= q^n.
Configuration decode_config(std::size_t n, std::size_t q, ConfigIndex i);

PatternKey encode_pattern(const Configuration& x, const Subset& memory);
// Symbols of the pattern in memory order.
std::vector<Symbol> decode_pattern(const PatternKey& key, std::size_t q);

// Number of configurations q^n; SizeLimitExceeded past `budget`.
ConfigIndex config_count(std::size_t n, std::size_t q, std::uint64_t budget);

// (r . x)(s) = x(r |>^-1 s).
Configuration shift(const FiniteRack& rack, Element r, const Configuration& x);

// Exhaustive check that the shift is a rack action on A^R: each shift(r, .)
// is a bijection and r1.(r2.x) = (r1|>r2).(r1.x) for all r1, r2, x.
Verdict shift_action_check(const FiniteRack& rack, std::size_t q, std::uint64_t budget);

// Continuity of the shift in projection form: pi_s o shift(r, .) equals
// pi_{r |>^-1 s} on every configuration.
Verdict shift_continuity_check(const FiniteRack& rack, std::size_t q, std::uint64_t budget);

// A subset of R together with the verdict of the checks run while computing
// it (closure under |>, and any operation-specific assertions).
struct CheckedSubset {
    Subset elements;
    Verdict check;
};

// {r : r.x = x}. The check asserts that the shift-based and the pointwise
// characterization x(s) = x(r |>^-1 s) agree, and that the result is closed.
CheckedSubset config_stabilizer(const FiniteRack& rack, const Configuration& x);

// y agrees with x on every cell of omega.
bool in_cylinder(const Configuration& x, const Subset& omega, const Configuration& y);

// Closure of s under |>, as a verdict; the witness names r1, r2 in s with
// r1 |> r2 outside s.
Verdict closure_check(const FiniteRack& rack, const Subset& s, const std::string& claim);

// Dense view of A^R used by the exhaustive scans: decodes indices into digit
// buffers and precomputes the shift of every configuration index.
class ConfigSpace {
public:
    ConfigSpace(std::size_t n, std::size_t q, std::uint64_t budget);

    std::size_t cells() const noexcept { return n_; }
    std::size_t alphabet() const noexcept { return q_; }
    ConfigIndex size() const noexcept { return size_; }

    Symbol digit(ConfigIndex i, Element s) const { return static_cast<Symbol>((i / weight_[s]) % q_); }
    ConfigIndex weight(Element s) const { return weight_[s]; }
    void decode(ConfigIndex i, std::span<Symbol> out) const;
    ConfigIndex encode(std::span<const Symbol> cells) const;

private:
    std::size_t n_;
    std::size_t q_;
    ConfigIndex size_;
    std::vector<ConfigIndex> weight_;
};

// shift_table[r][i] = encode(r . decode(i)).
std::vector<std::vector<ConfigIndex>> shift_table(const FiniteRack& rack, const ConfigSpace& space);

} // namespace rackca
