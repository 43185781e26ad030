#include <algorithm>
#include <numeric>
#include <set>

#include "rackca/error.hpp"
#include "rackca/rack.hpp"

namespace rackca {

namespace {

bool self_distributive(const std::vector<Element>& op, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t s) { return op[r * n + s]; };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t t = 0; t < n; ++t) {
                if (at(r, at(s, t)) != at(at(r, s), at(r, t))) return false;
            }
        }
    }
    return true;
}

IndexTable to_table(const std::vector<Element>& flat, std::size_t n) {
    IndexTable t(n, std::vector<Element>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) t[r][s] = flat[r * n + s];
    }
    return t;
}

} // namespace

IndexTable canonical_table(const FiniteRack& rack) {
    const std::size_t n = rack.order();
    std::vector<Element> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Element{0});
    std::vector<Element> best;
    std::vector<Element> candidate(n * n);
    do {
        // relabel maps old element -> new element
        for (Element r = 0; r < n; ++r) {
            for (Element s = 0; s < n; ++s) candidate[relabel[r] * n + relabel[s]] = relabel[rack.op(r, s)];
        }
        if (best.empty() || candidate < best) best = candidate;
    } while (std::next_permutation(relabel.begin(), relabel.end()));
    return to_table(best, n);
}

std::vector<FiniteRack> enumerate_racks(std::size_t n, bool up_to_iso) {
    if (n == 0) return {};
    if (n > 4) throw SizeLimitExceeded("exhaustive rack enumeration is limited to n <= 4");

    const auto rows = symmetric_group_permutations(n);
    const std::size_t k = rows.size();
    std::vector<std::size_t> choice(n, 0);
    std::vector<Element> flat(n * n);
    std::set<IndexTable> found;

    while (true) {
        for (std::size_t r = 0; r < n; ++r) std::copy(rows[choice[r]].begin(), rows[choice[r]].end(), flat.begin() + r * n);
        if (self_distributive(flat, n)) {
            IndexTable t = to_table(flat, n);
            if (up_to_iso) t = canonical_table(rack_from_table(t));
            found.insert(std::move(t));
        }
        // odometer, last row fastest
        std::size_t pos = n;
        while (pos > 0 && ++choice[pos - 1] == k) choice[--pos] = 0;
        if (pos == 0) break;
    }

    std::vector<FiniteRack> racks;
    racks.reserve(found.size());
    for (const auto& t : found) racks.push_back(rack_from_table(t));
    return racks;
}

} // namespace rackca
