#include "rackca/group.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "rackca/error.hpp"

namespace rackca {

IndexTable FiniteGroup::table() const {
    IndexTable t(n_, std::vector<Element>(n_));
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) t[a][b] = mul_[a * n_ + b];
    }
    return t;
}

FiniteGroup group_from_table(const IndexTable& mul) {
    const std::size_t n = mul.size();
    if (n == 0) throw ValidationError("EmptyTable", "a group needs at least one element");
    FiniteGroup g;
    g.n_ = n;
    g.mul_.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (mul[a].size() != n) {
            throw ValidationError("NotSquare", "row " + std::to_string(a) + " has " + std::to_string(mul[a].size()) +
                                                   " entries, expected " + std::to_string(n),
                                  {static_cast<std::int64_t>(a)});
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (mul[a][b] >= n) {
                throw ValidationError("EntryOutOfRange",
                                      "mul[" + std::to_string(a) + "][" + std::to_string(b) + "] = " +
                                          std::to_string(mul[a][b]),
                                      {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
            }
            g.mul_.push_back(mul[a][b]);
        }
    }

    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            for (Element c = 0; c < n; ++c) {
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                    throw ValidationError("NotAssociative",
                                          "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
                                              " != " + std::to_string(a) + "*(" + std::to_string(b) + "*" +
                                              std::to_string(c) + ")",
                                          {a, b, c});
                }
            }
        }
    }

    std::optional<Element> identity;
    for (Element e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) identity = e;
    }
    if (!identity) throw ValidationError("NoIdentity", "no element is a two-sided identity");
    g.e_ = *identity;

    g.inv_.resize(n);
    for (Element a = 0; a < n; ++a) {
        std::optional<Element> inv;
        for (Element b = 0; b < n && !inv; ++b) {
            if (g.mul(a, b) == g.e_ && g.mul(b, a) == g.e_) inv = b;
        }
        if (!inv) throw ValidationError("NoInverse", "element " + std::to_string(a) + " has no inverse", {a});
        g.inv_[a] = *inv;
    }
    return g;
}

GroupKind parse_group_kind(std::string_view name) {
    if (name == "cyclic") return GroupKind::cyclic;
    if (name == "dihedral") return GroupKind::dihedral;
    if (name == "symmetric") return GroupKind::symmetric;
    throw ValidationError("UnknownGroupKind", std::string(name));
}

std::string_view to_string(GroupKind kind) {
    switch (kind) {
    case GroupKind::cyclic:
        return "cyclic";
    case GroupKind::dihedral:
        return "dihedral";
    case GroupKind::symmetric:
        return "symmetric";
    }
    return "?";
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw ValidationError("InvalidParameter", "cyclic group needs n >= 1");
    IndexTable t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
    }
    return group_from_table(t);
}

FiniteGroup dihedral_group(std::size_t n) {
    if (n == 0) throw ValidationError("InvalidParameter", "dihedral group needs n >= 1");
    const std::size_t order = 2 * n;
    auto index = [n](bool reflection, std::size_t k) { return static_cast<Element>((reflection ? n : 0) + k % n); };
    IndexTable t(order, std::vector<Element>(order));
    for (std::size_t a = 0; a < order; ++a) {
        const bool ra = a >= n;
        const std::size_t ka = a % n;
        for (std::size_t b = 0; b < order; ++b) {
            const bool rb = b >= n;
            const std::size_t kb = b % n;
            // rotation: x -> x + k, reflection: x -> k - x
            if (!ra) {
                t[a][b] = index(rb, ka + kb);
            } else {
                t[a][b] = index(!rb, ka + n - kb);
            }
        }
    }
    return group_from_table(t);
}

std::vector<std::vector<Element>> symmetric_group_permutations(std::size_t n) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    std::vector<std::vector<Element>> perms;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

FiniteGroup symmetric_group(std::size_t n) {
    if (n == 0) throw ValidationError("InvalidParameter", "symmetric group needs n >= 1");
    if (n > 5) throw SizeLimitExceeded("symmetric group S_" + std::to_string(n) + " is limited to n <= 5");
    const auto perms = symmetric_group_permutations(n);
    auto index_of = [&perms](const std::vector<Element>& p) {
        return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
    };
    IndexTable t(perms.size(), std::vector<Element>(perms.size()));
    std::vector<Element> composed(n);
    for (std::size_t a = 0; a < perms.size(); ++a) {
        for (std::size_t b = 0; b < perms.size(); ++b) {
            for (std::size_t i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
            t[a][b] = index_of(composed);
        }
    }
    return group_from_table(t);
}

FiniteGroup group_builtin(GroupKind kind, std::size_t n) {
    switch (kind) {
    case GroupKind::cyclic:
        return cyclic_group(n);
    case GroupKind::dihedral:
        return dihedral_group(n);
    case GroupKind::symmetric:
        return symmetric_group(n);
    }
    throw ValidationError("UnknownGroupKind", "unhandled group kind");
}

} // namespace rackca
