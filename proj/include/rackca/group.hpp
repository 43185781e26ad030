#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "rackca/types.hpp"

namespace rackca {

using IndexTable = std::vector<std::vector<Element>>;

// A finite group given by its Cayley table. Instances only come out of
// group_from_table / group_builtin, so every FiniteGroup is validated:
// associative, with a two-sided identity and two-sided inverses.
class FiniteGroup {
public:
    std::size_t order() const noexcept { return n_; }
    Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
    Element identity() const noexcept { return e_; }
    Element inverse(Element a) const { return inv_[a]; }

    IndexTable table() const;

    friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

private:
    FiniteGroup() = default;
    friend FiniteGroup group_from_table(const IndexTable& mul);

    std::size_t n_ = 0;
    std::vector<Element> mul_;
    Element e_ = 0;
    std::vector<Element> inv_;
};

// Errors: ValidationError named NotSquare, EntryOutOfRange,
// NotAssociative (a,b,c), NoIdentity, NoInverse (a).
FiniteGroup group_from_table(const IndexTable& mul);

enum class GroupKind { cyclic, dihedral, symmetric };

GroupKind parse_group_kind(std::string_view name);
std::string_view to_string(GroupKind kind);

// cyclic n: Z_n under addition. dihedral n: order 2n, see dihedral_group().
// symmetric n: order n!, see symmetric_group(). Throws SizeLimitExceeded for
// symmetric with n > 5.
FiniteGroup group_builtin(GroupKind kind, std::size_t n);

FiniteGroup cyclic_group(std::size_t n);

// Index k < n is the rotation x -> x + k of Z_n, index n + k the reflection
// x -> k - x; the product a*b is the map a after b.
FiniteGroup dihedral_group(std::size_t n);

// Permutations of {0..n-1} indexed in lexicographic order of their one-line
// notation (index 0 is the identity); the product a*b is a after b,
// i.e. (a*b)(i) = a(b(i)).
FiniteGroup symmetric_group(std::size_t n);

// One-line notation of every permutation of {0..n-1} in the indexing used by
// symmetric_group(n).
std::vector<std::vector<Element>> symmetric_group_permutations(std::size_t n);

} // namespace rackca
