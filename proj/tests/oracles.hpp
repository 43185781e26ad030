#pragma once

// Brute-force reference implementations for the tests. Nothing here calls the
// library: every definition is re-derived from plain tables so that a bug in
// the library cannot hide behind the same bug in its oracle.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<unsigned>>;
using Cells = std::vector<unsigned>;

inline unsigned inv(const Table& op, unsigned r, unsigned s) {
    for (unsigned t = 0; t < op.size(); ++t) {
        if (op[r][t] == s) return t;
    }
    return ~0u;
}

inline bool rows_bijective(const Table& op) {
    for (const auto& row : op) {
        std::vector<bool> hit(op.size(), false);
        for (unsigned v : row) {
            if (v >= op.size() || hit[v]) return false;
            hit[v] = true;
        }
    }
    return true;
}

inline bool self_distributive(const Table& op) {
    const unsigned n = static_cast<unsigned>(op.size());
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < n; ++s)
            for (unsigned t = 0; t < n; ++t)
                if (op[r][op[s][t]] != op[op[r][s]][op[r][t]]) return false;
    return true;
}

inline bool is_rack(const Table& op) { return rows_bijective(op) && self_distributive(op); }

inline bool is_quandle(const Table& op) {
    for (unsigned r = 0; r < op.size(); ++r)
        if (op[r][r] != r) return false;
    return true;
}

// Configurations of n cells over q symbols, cell 0 the least significant digit.
inline std::vector<Cells> all_configs(unsigned n, unsigned q) {
    std::vector<Cells> out;
    Cells x(n, 0);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= q;
    for (std::uint64_t k = 0; k < total; ++k) {
        std::uint64_t rest = k;
        for (unsigned i = 0; i < n; ++i) {
            x[i] = static_cast<unsigned>(rest % q);
            rest /= q;
        }
        out.push_back(x);
    }
    return out;
}

inline std::uint64_t encode(const Cells& x, unsigned q) {
    std::uint64_t v = 0;
    for (std::size_t i = x.size(); i-- > 0;) v = v * q + x[i];
    return v;
}

// (r.x)(s) = x(r |>^-1 s)
inline Cells shift(const Table& op, unsigned r, const Cells& x) {
    Cells y(x.size());
    for (unsigned s = 0; s < x.size(); ++s) y[s] = x[inv(op, r, s)];
    return y;
}

// tau(x)(r) = rule[(r.x)|_M], little-endian over the sorted memory.
inline Cells apply(const Table& op, unsigned q, const std::vector<unsigned>& memory, const Cells& rule, const Cells& x) {
    Cells out(x.size());
    for (unsigned r = 0; r < x.size(); ++r) {
        const Cells y = shift(op, r, x);
        std::uint64_t key = 0, weight = 1;
        for (unsigned m : memory) {
            key += y[m] * weight;
            weight *= q;
        }
        out[r] = rule[key];
    }
    return out;
}

inline std::vector<unsigned> stabilizer(const Table& op, const Cells& x) {
    std::vector<unsigned> out;
    for (unsigned r = 0; r < op.size(); ++r)
        if (shift(op, r, x) == x) out.push_back(r);
    return out;
}

template <class F>
std::vector<unsigned> eq_set(const Table& op, unsigned q, F f) {
    std::vector<unsigned> out;
    const auto xs = all_configs(static_cast<unsigned>(op.size()), q);
    for (unsigned r = 0; r < op.size(); ++r) {
        bool ok = true;
        for (const auto& x : xs) ok = ok && f(shift(op, r, x)) == shift(op, r, f(x));
        if (ok) out.push_back(r);
    }
    return out;
}

// M is a memory set for f iff equal shifted patterns on M always give equal
// outputs, over every pair of (configuration, cell).
template <class F>
bool is_memory_set(const Table& op, unsigned q, F f, const std::vector<unsigned>& memory) {
    const auto xs = all_configs(static_cast<unsigned>(op.size()), q);
    std::vector<std::pair<Cells, unsigned>> seen;
    for (const auto& x : xs) {
        const Cells fx = f(x);
        for (unsigned r = 0; r < op.size(); ++r) {
            const Cells y = shift(op, r, x);
            Cells pattern;
            for (unsigned m : memory) pattern.push_back(y[m]);
            for (const auto& [p, out] : seen)
                if (p == pattern && out != fx[r]) return false;
            seen.emplace_back(pattern, fx[r]);
        }
    }
    return true;
}

inline bool closed(const Table& op, const std::vector<unsigned>& s) {
    for (unsigned a : s)
        for (unsigned b : s)
            if (std::find(s.begin(), s.end(), op[a][b]) == s.end()) return false;
    return true;
}

// Racks of order n counted up to isomorphism. Candidates run with row 0 as
// the fastest-moving digit over permutations taken in reverse lexicographic
// order; classes are found by marking every relabeling of each rack found.
struct RackCounts {
    std::size_t labelled = 0;
    std::size_t classes = 0;
    std::size_t quandle_classes = 0;
};

inline RackCounts count_racks(unsigned n) {
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> p(n);
    std::iota(p.rbegin(), p.rend(), 0u);
    do perms.push_back(p);
    while (std::prev_permutation(p.begin(), p.end()));

    std::vector<std::vector<unsigned>> relabel = perms;
    std::set<Table> seen;
    RackCounts counts;
    std::vector<std::size_t> digit(n, 0);
    for (;;) {
        Table op(n);
        for (unsigned r = 0; r < n; ++r) op[r] = perms[digit[r]];
        if (self_distributive(op)) {
            ++counts.labelled;
            if (!seen.count(op)) {
                ++counts.classes;
                counts.quandle_classes += is_quandle(op);
                for (const auto& pi : relabel) {
                    Table t(n, std::vector<unsigned>(n));
                    for (unsigned r = 0; r < n; ++r)
                        for (unsigned s = 0; s < n; ++s) t[pi[r]][pi[s]] = pi[op[r][s]];
                    seen.insert(t);
                }
            }
        }
        unsigned i = 0;
        while (i < n && ++digit[i] == perms.size()) digit[i++] = 0;
        if (i == n) break;
    }
    return counts;
}

} // namespace oracle
