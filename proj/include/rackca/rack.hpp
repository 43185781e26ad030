#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rackca/group.hpp"
#include "rackca/types.hpp"
#include "rackca/verdict.hpp"

namespace rackca {

// A bijection of {0..n-1} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    // Throws ValidationError "NotAPermutation" unless `map` is a bijection.
    explicit Permutation(std::vector<Element> map);

    static Permutation identity(std::size_t n);

    std::size_t degree() const noexcept { return map_.size(); }
    Element operator()(Element i) const { return map_[i]; }
    const std::vector<Element>& map() const noexcept { return map_; }

    Permutation inverse() const;
    bool is_identity() const;

    // (*this after other)(i) = (*this)(other(i)).
    Permutation after(const Permutation& other) const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Element> map_;
};

// A finite rack: the operation table of r |> s, the derived table of the
// inverse operation and the quandle flag. R1 (rows are bijections) and R2
// (left self-distributivity) hold for every instance built by
// rack_from_table(); rack_from_table_unchecked() skips R2 so tests can feed
// near-racks into the checkers.
class FiniteRack {
public:
    std::size_t order() const noexcept { return n_; }
    Element op(Element r, Element s) const { return op_[r * n_ + s]; }
    Element inv_op(Element r, Element s) const { return inv_op_[r * n_ + s]; }
    bool is_quandle() const noexcept { return quandle_; }
    // true when r |> s = s for all r, s.
    bool is_trivial() const;

    IndexTable op_table() const;
    IndexTable inv_op_table() const;

    friend bool operator==(const FiniteRack& a, const FiniteRack& b) { return a.op_ == b.op_; }

private:
    FiniteRack() = default;
    friend FiniteRack rack_from_table(const IndexTable& op);
    friend FiniteRack rack_from_table_unchecked(const IndexTable& op);
    static FiniteRack with_bijective_rows(const IndexTable& op);

    std::size_t n_ = 0;
    std::vector<Element> op_;
    std::vector<Element> inv_op_;
    bool quandle_ = false;
};

using RackPtr = std::shared_ptr<const FiniteRack>;

// Errors: RowNotBijective (r), SelfDistributivityViolation (r, s, t, lhs, rhs),
// plus the shape errors of group_from_table.
FiniteRack rack_from_table(const IndexTable& op);

// Validates shape and R1 only.
FiniteRack rack_from_table_unchecked(const IndexTable& op);

FiniteRack trivial_rack(std::size_t n);
FiniteRack cyclic_rack(std::size_t n);
FiniteRack dihedral_rack(std::size_t n);
FiniteRack conjugation_rack(const FiniteGroup& g);
FiniteRack core_rack(const FiniteGroup& g);
// r |> s = (1 - alpha) r + alpha s mod n; alpha is reduced mod n and must be a
// unit (ValidationError "AlphaNotUnit").
FiniteRack affine_rack(std::size_t n, long long alpha);

enum class RackKind { trivial, cyclic, dihedral, conj, core, affine };

RackKind parse_rack_kind(std::string_view name);
std::string_view to_string(RackKind kind);

struct RackParams {
    std::size_t n = 0;           // trivial, cyclic, dihedral, affine
    long long alpha = 0;         // affine
    GroupKind group = GroupKind::cyclic;  // conj, core
    std::size_t group_n = 0;     // conj, core
};

FiniteRack rack_builtin(RackKind kind, const RackParams& params);

// Rack on `elements` (which must form a subrack) with element i of the new
// rack standing for elements[i]. Throws ValidationError "NotASubrack".
FiniteRack induced_rack(const FiniteRack& rack, const std::vector<Element>& elements);

// Indices in symmetric_group(n) of the transpositions (i j), i < j, listed in
// decreasing lexicographic order of (i, j); for n = 3 this is (23), (13), (12).
std::vector<Element> transposition_indices(std::size_t n);

// The subrack of conj(S_n) on the transpositions, indexed as above.
FiniteRack transposition_rack(std::size_t n);

// phi_r: s -> r |> s.
Permutation inner_automorphism(const FiniteRack& rack, Element r);

// The group generated by all phi_r, sorted. Throws SizeLimitExceeded once the
// closure passes `limit` elements.
std::vector<Permutation> inner_group(const FiniteRack& rack, std::size_t limit = 1'000'000);

bool is_closed_subset(const FiniteRack& rack, const Subset& s);
// Closed, and every restricted row r |> . is a bijection of s.
bool is_subrack(const FiniteRack& rack, const Subset& s);

// phi_{r1 |> r2} == phi_{r1} o phi_{r2} o phi_{r1}^{-1} for all r1, r2.
Verdict inner_conjugation_check(const FiniteRack& rack);

// Closed-subset implies subrack, over every subset (n <= 20).
Verdict closed_implies_subrack_check(const FiniteRack& rack);

// Lexicographically smallest operation table over all n! relabelings.
IndexTable canonical_table(const FiniteRack& rack);

// Every rack of order n (n <= 4): candidate tables have permutation rows,
// filtered by R2. With up_to_iso, one canonical representative per class.
// Results are sorted by table. Throws SizeLimitExceeded for n > 4.
std::vector<FiniteRack> enumerate_racks(std::size_t n, bool up_to_iso);

} // namespace rackca
