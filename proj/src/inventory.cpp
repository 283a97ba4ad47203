#include "actkit/inventory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace actkit {

namespace {

bool associative(const Grid& t, Index n) {
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    return true;
}

Grid relabeled(const Grid& t, const std::vector<Index>& perm) {
    const Index n = static_cast<Index>(t.size());
    Grid out(n, Row(n));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) out[perm[a]][perm[b]] = perm[t[a][b]];
    return out;
}

// Least table over all relabelings fixing the identity at 0.
Grid canonical(const Grid& t) {
    const Index n = static_cast<Index>(t.size());
    Grid best = t;
    std::vector<Index> rest(n > 0 ? n - 1 : 0);
    std::iota(rest.begin(), rest.end(), 1);
    while (std::next_permutation(rest.begin(), rest.end())) {
        std::vector<Index> perm(n);
        perm[0] = 0;
        for (Index i = 1; i < n; ++i) perm[i] = rest[i - 1];
        best = std::min(best, relabeled(t, perm));
    }
    return best;
}

}  // namespace

std::vector<MonoidPtr> monoid_inventory(Index order) {
    if (order <= 0) return {};
    const Index n = order;
    std::vector<std::pair<Index, Index>> cells;
    for (Index a = 1; a < n; ++a)
        for (Index b = 1; b < n; ++b) cells.push_back({a, b});
    Grid table(n, Row(n));
    for (Index a = 0; a < n; ++a) {
        table[0][a] = a;
        table[a][0] = a;
    }
    std::set<Grid> seen;
    Row choice(cells.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            table[cells[i].first][cells[i].second] = choice[i];
        if (associative(table, n)) seen.insert(canonical(table));
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < n) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    std::vector<MonoidPtr> out;
    for (const Grid& t : seen) out.push_back(make_monoid(t, 0));
    return out;
}

std::vector<MonoidPtr> monoid_inventory_upto(Index max_order) {
    std::vector<MonoidPtr> out;
    for (Index n = 1; n <= max_order; ++n)
        for (MonoidPtr& m : monoid_inventory(n)) out.push_back(std::move(m));
    return out;
}

}  // namespace actkit
