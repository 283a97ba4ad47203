#include "actkit/monoid.hpp"

#include <algorithm>
#include <set>

#include "actkit/errors.hpp"

namespace actkit {

Monoid Monoid::validate(Grid table, Index identity) {
    const Index n = static_cast<Index>(table.size());
    if (n <= 0) throw Error("monoid must be nonempty");
    if (identity < 0 || identity >= n) throw IdentityViolation(identity);
    for (Index a = 0; a < n; ++a) {
        if (static_cast<Index>(table[a].size()) != n)
            throw Error("monoid table row " + std::to_string(a) + " has wrong length");
        for (Index b = 0; b < n; ++b) {
            const Index p = table[a][b];
            if (p < 0 || p >= n)
                throw Error("monoid table entry (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") out of range");
        }
    }
    for (Index a = 0; a < n; ++a) {
        if (table[identity][a] != a || table[a][identity] != a) throw IdentityViolation(a);
    }
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw AssociativityViolation(a, b, c);
    return Monoid(std::move(table), identity);
}

std::vector<Index> Monoid::idempotents() const {
    std::vector<Index> out;
    for (Index a = 0; a < size(); ++a)
        if (mul(a, a) == a) out.push_back(a);
    return out;
}

std::vector<Index> submonoid_closure(const Monoid& m, const std::vector<Index>& seed) {
    std::vector<char> in(m.size(), 0);
    std::vector<Index> work;
    auto add = [&](Index x) {
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    add(m.identity());
    for (Index s : seed) add(s);
    for (std::size_t i = 0; i < work.size(); ++i) {
        // Pair the new element with everything already present, both ways.
        const Index x = work[i];
        for (std::size_t j = 0; j <= i; ++j) {
            add(m.mul(x, work[j]));
            add(m.mul(work[j], x));
        }
    }
    std::vector<Index> out;
    for (Index x = 0; x < m.size(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

std::vector<Index> Monoid::generating_set() const {
    std::vector<Index> gens;
    std::vector<Index> closed = submonoid_closure(*this, {});
    while (static_cast<Index>(closed.size()) < size()) {
        Index best = -1;
        std::size_t best_cover = 0;
        for (Index cand = 0; cand < size(); ++cand) {
            if (std::binary_search(closed.begin(), closed.end(), cand)) continue;
            std::vector<Index> trial = gens;
            trial.push_back(cand);
            const std::size_t cover = submonoid_closure(*this, trial).size();
            if (best == -1 || cover > best_cover) {
                best = cand;
                best_cover = cover;
            }
        }
        gens.push_back(best);
        closed = submonoid_closure(*this, gens);
    }
    // Drop any generator the others subsume.
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<Index> rest;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) rest.push_back(gens[j]);
        if (static_cast<Index>(submonoid_closure(*this, rest).size()) == size())
            gens = std::move(rest);
        else
            ++i;
    }
    return gens;
}

Monoid Monoid::opposite() const {
    Grid t(size(), Row(size()));
    for (Index a = 0; a < size(); ++a)
        for (Index b = 0; b < size(); ++b) t[a][b] = mul(b, a);
    return Monoid(std::move(t), identity_);
}

std::uint64_t Monoid::hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(size()));
    mix(static_cast<std::uint64_t>(identity_));
    for (const Row& row : table_)
        for (Index v : row) mix(static_cast<std::uint64_t>(v));
    return h;
}

MonoidPtr make_monoid(Grid table, Index identity) {
    return std::make_shared<const Monoid>(Monoid::validate(std::move(table), identity));
}

MonoidPtr trivial_monoid() { return make_monoid({{0}}, 0); }

bool same_monoid(const MonoidPtr& a, const MonoidPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace actkit
