#include "rackca/rack.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rackca/error.hpp"

namespace rackca {

namespace {

std::string idx(std::int64_t v) { return std::to_string(v); }

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

long long gcd(long long a, long long b) { return b == 0 ? (a < 0 ? -a : a) : gcd(b, a % b); }

IndexTable table_from(std::size_t n, auto&& f) {
    IndexTable t(n, std::vector<Element>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) t[r][s] = static_cast<Element>(f(r, s));
    }
    return t;
}

} // namespace

// ---- Permutation ----------------------------------------------------------

Permutation::Permutation(std::vector<Element> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (map_[i] >= map_.size() || seen[map_[i]]) {
            throw ValidationError("NotAPermutation", "entry " + idx(i) + " breaks bijectivity",
                                  {static_cast<std::int64_t>(i)});
        }
        seen[map_[i]] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Element> m(n);
    std::iota(m.begin(), m.end(), Element{0});
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<Element> m(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) m[map_[i]] = static_cast<Element>(i);
    Permutation p;
    p.map_ = std::move(m);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (map_[i] != i) return false;
    }
    return true;
}

Permutation Permutation::after(const Permutation& other) const {
    std::vector<Element> m(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) m[i] = map_[other.map_[i]];
    Permutation p;
    p.map_ = std::move(m);
    return p;
}

// ---- FiniteRack -----------------------------------------------------------

bool FiniteRack::is_trivial() const {
    for (Element r = 0; r < n_; ++r) {
        for (Element s = 0; s < n_; ++s) {
            if (op(r, s) != s) return false;
        }
    }
    return true;
}

IndexTable FiniteRack::op_table() const {
    return table_from(n_, [this](std::size_t r, std::size_t s) { return op(r, s); });
}

IndexTable FiniteRack::inv_op_table() const {
    return table_from(n_, [this](std::size_t r, std::size_t s) { return inv_op(r, s); });
}

FiniteRack FiniteRack::with_bijective_rows(const IndexTable& op) {
    const std::size_t n = op.size();
    if (n == 0) throw ValidationError("EmptyTable", "a rack needs at least one element");
    FiniteRack rack;
    rack.n_ = n;
    rack.op_.reserve(n * n);
    rack.inv_op_.assign(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (op[r].size() != n) {
            throw ValidationError("NotSquare", "row " + idx(r) + " has " + idx(op[r].size()) + " entries",
                                  {static_cast<std::int64_t>(r)});
        }
        std::vector<bool> seen(n, false);
        for (std::size_t s = 0; s < n; ++s) {
            const Element v = op[r][s];
            if (v >= n) {
                throw ValidationError("EntryOutOfRange", "op[" + idx(r) + "][" + idx(s) + "] = " + idx(v),
                                      {static_cast<std::int64_t>(r), static_cast<std::int64_t>(s)});
            }
            if (seen[v]) {
                throw ValidationError("RowNotBijective", "row " + idx(r) + " repeats " + idx(v),
                                      {static_cast<std::int64_t>(r)});
            }
            seen[v] = true;
            rack.op_.push_back(v);
            rack.inv_op_[r * n + v] = static_cast<Element>(s);
        }
    }
    rack.quandle_ = true;
    for (Element r = 0; r < n; ++r) rack.quandle_ = rack.quandle_ && rack.op(r, r) == r;
    return rack;
}

FiniteRack rack_from_table_unchecked(const IndexTable& op) { return FiniteRack::with_bijective_rows(op); }

FiniteRack rack_from_table(const IndexTable& op) {
    FiniteRack rack = FiniteRack::with_bijective_rows(op);
    const auto n = static_cast<Element>(rack.order());
    for (Element r = 0; r < n; ++r) {
        for (Element s = 0; s < n; ++s) {
            for (Element t = 0; t < n; ++t) {
                const Element lhs = rack.op(r, rack.op(s, t));
                const Element rhs = rack.op(rack.op(r, s), rack.op(r, t));
                if (lhs != rhs) {
                    throw ValidationError("SelfDistributivityViolation",
                                          idx(r) + "|>(" + idx(s) + "|>" + idx(t) + ") = " + idx(lhs) + " but (" +
                                              idx(r) + "|>" + idx(s) + ")|>(" + idx(r) + "|>" + idx(t) +
                                              ") = " + idx(rhs),
                                          {r, s, t, lhs, rhs});
                }
            }
        }
    }
    return rack;
}

// ---- built-in families ----------------------------------------------------

FiniteRack trivial_rack(std::size_t n) {
    if (n == 0) throw ValidationError("InvalidParameter", "trivial rack needs n >= 1");
    return rack_from_table(table_from(n, [](std::size_t, std::size_t s) { return s; }));
}

FiniteRack cyclic_rack(std::size_t n) {
    if (n == 0) throw ValidationError("InvalidParameter", "cyclic rack needs n >= 1");
    return rack_from_table(table_from(n, [n](std::size_t, std::size_t s) { return (s + 1) % n; }));
}

FiniteRack dihedral_rack(std::size_t n) {
    if (n == 0) throw ValidationError("InvalidParameter", "dihedral rack needs n >= 1");
    return rack_from_table(table_from(n, [n](std::size_t r, std::size_t s) { return (2 * r + n - s) % n; }));
}

FiniteRack conjugation_rack(const FiniteGroup& g) {
    return rack_from_table(table_from(
        g.order(), [&g](std::size_t r, std::size_t s) { return g.mul(g.mul(r, s), g.inverse(r)); }));
}

FiniteRack core_rack(const FiniteGroup& g) {
    return rack_from_table(table_from(
        g.order(), [&g](std::size_t r, std::size_t s) { return g.mul(g.mul(r, g.inverse(s)), r); }));
}

FiniteRack affine_rack(std::size_t n, long long alpha) {
    if (n == 0) throw ValidationError("InvalidParameter", "affine rack needs n >= 1");
    const auto nn = static_cast<long long>(n);
    const long long a = mod(alpha, nn);
    if (gcd(a, nn) != 1) {
        throw ValidationError("AlphaNotUnit", "alpha = " + std::to_string(alpha) + " is not a unit mod " + idx(n),
                              {alpha, nn});
    }
    return rack_from_table(table_from(n, [a, nn](std::size_t r, std::size_t s) {
        return mod((1 - a) * static_cast<long long>(r) + a * static_cast<long long>(s), nn);
    }));
}

RackKind parse_rack_kind(std::string_view name) {
    if (name == "trivial") return RackKind::trivial;
    if (name == "cyclic") return RackKind::cyclic;
    if (name == "dihedral") return RackKind::dihedral;
    if (name == "conj") return RackKind::conj;
    if (name == "core") return RackKind::core;
    if (name == "affine") return RackKind::affine;
    throw ValidationError("UnknownRackKind", std::string(name));
}

std::string_view to_string(RackKind kind) {
    switch (kind) {
    case RackKind::trivial:
        return "trivial";
    case RackKind::cyclic:
        return "cyclic";
    case RackKind::dihedral:
        return "dihedral";
    case RackKind::conj:
        return "conj";
    case RackKind::core:
        return "core";
    case RackKind::affine:
        return "affine";
    }
    return "?";
}

FiniteRack rack_builtin(RackKind kind, const RackParams& params) {
    switch (kind) {
    case RackKind::trivial:
        return trivial_rack(params.n);
    case RackKind::cyclic:
        return cyclic_rack(params.n);
    case RackKind::dihedral:
        return dihedral_rack(params.n);
    case RackKind::conj:
        return conjugation_rack(group_builtin(params.group, params.group_n));
    case RackKind::core:
        return core_rack(group_builtin(params.group, params.group_n));
    case RackKind::affine:
        return affine_rack(params.n, params.alpha);
    }
    throw ValidationError("UnknownRackKind", "unhandled rack kind");
}

FiniteRack induced_rack(const FiniteRack& rack, const std::vector<Element>& elements) {
    const Subset s = normalized(elements);
    if (s.size() != elements.size() || s.empty() || s.back() >= rack.order() || !is_subrack(rack, s)) {
        throw ValidationError("NotASubrack", "the given elements do not form a subrack");
    }
    std::vector<Element> position(rack.order(), 0);
    for (std::size_t i = 0; i < elements.size(); ++i) position[elements[i]] = static_cast<Element>(i);
    return rack_from_table(table_from(elements.size(), [&](std::size_t a, std::size_t b) {
        return position[rack.op(elements[a], elements[b])];
    }));
}

std::vector<Element> transposition_indices(std::size_t n) {
    if (n < 2) throw ValidationError("InvalidParameter", "transpositions need n >= 2");
    if (n > 5) throw SizeLimitExceeded("symmetric group S_" + std::to_string(n) + " is limited to n <= 5");
    const auto perms = symmetric_group_permutations(n);
    std::vector<Element> out;
    for (std::size_t i = n - 1; i-- > 0;) {
        for (std::size_t j = n; j-- > i + 1;) {
            std::vector<Element> t(n);
            std::iota(t.begin(), t.end(), Element{0});
            std::swap(t[i], t[j]);
            out.push_back(static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), t) - perms.begin()));
        }
    }
    return out;
}

FiniteRack transposition_rack(std::size_t n) {
    return induced_rack(conjugation_rack(symmetric_group(n)), transposition_indices(n));
}

// ---- inner structure ------------------------------------------------------

Permutation inner_automorphism(const FiniteRack& rack, Element r) {
    if (r >= rack.order()) throw ValidationError("IndexOutOfRange", "element " + idx(r), {r});
    std::vector<Element> m(rack.order());
    for (Element s = 0; s < rack.order(); ++s) m[s] = rack.op(r, s);
    return Permutation(std::move(m));
}

std::vector<Permutation> inner_group(const FiniteRack& rack, std::size_t limit) {
    std::vector<Permutation> generators;
    for (Element r = 0; r < rack.order(); ++r) generators.push_back(inner_automorphism(rack, r));

    // In a finite group closure under composition already contains inverses.
    std::set<Permutation> seen{Permutation::identity(rack.order())};
    std::vector<Permutation> frontier{Permutation::identity(rack.order())};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
            for (const auto& g : generators) {
                Permutation q = g.after(p);
                if (seen.insert(q).second) {
                    if (seen.size() > limit) {
                        throw SizeLimitExceeded("inner group exceeds " + std::to_string(limit) + " elements");
                    }
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool is_closed_subset(const FiniteRack& rack, const Subset& s) {
    for (Element r : s) {
        for (Element t : s) {
            if (!contains(s, rack.op(r, t))) return false;
        }
    }
    return true;
}

bool is_subrack(const FiniteRack& rack, const Subset& s) {
    if (s.empty()) return false;
    for (Element r : s) {
        for (Element t : s) {
            // closed under |> and |>^-1 is equivalent to restricted rows being bijections of s
            if (!contains(s, rack.op(r, t)) || !contains(s, rack.inv_op(r, t))) return false;
        }
    }
    return true;
}

Verdict inner_conjugation_check(const FiniteRack& rack) {
    const auto n = static_cast<Element>(rack.order());
    for (Element r1 = 0; r1 < n; ++r1) {
        for (Element r2 = 0; r2 < n; ++r2) {
            const Element prod = rack.op(r1, r2);
            for (Element s = 0; s < n; ++s) {
                const Element lhs = rack.op(prod, s);
                const Element rhs = rack.op(r1, rack.op(r2, rack.inv_op(r1, s)));
                if (lhs != rhs) {
                    return Verdict::fails("R2-inner-conj", Witness("inner-conjugation")
                                                               .add("r1", r1)
                                                               .add("r2", r2)
                                                               .add("s", s)
                                                               .add("lhs", lhs)
                                                               .add("rhs", rhs));
                }
            }
        }
    }
    return Verdict::holds("R2-inner-conj");
}

Verdict closed_implies_subrack_check(const FiniteRack& rack) {
    if (rack.order() > 20) throw SizeLimitExceeded("subset scan limited to n <= 20");
    const std::uint64_t count = std::uint64_t{1} << rack.order();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        const Subset s = subset_from_mask(mask);
        if (is_closed_subset(rack, s) && !is_subrack(rack, s)) {
            return Verdict::fails("Rem2.8", Witness("closed-not-subrack").add("subset_mask", static_cast<std::int64_t>(mask)));
        }
    }
    return Verdict::holds("Rem2.8");
}

} // namespace rackca
