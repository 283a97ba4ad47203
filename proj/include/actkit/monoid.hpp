#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace actkit {

using Index = int;
using Row = std::vector<Index>;
using Grid = std::vector<Row>;

// Finite monoid given by a dense multiplication table.
// table()[a][b] is the product a*b; identity() is the index of the unit.
class Monoid {
public:
    // Checks shape, closure, identity and associativity; throws on failure.
    static Monoid validate(Grid table, Index identity);

    Index size() const { return static_cast<Index>(table_.size()); }
    Index mul(Index a, Index b) const { return table_[a][b]; }
    Index identity() const { return identity_; }
    const Grid& table() const { return table_; }

    bool operator==(const Monoid& other) const {
        return identity_ == other.identity_ && table_ == other.table_;
    }

    std::vector<Index> idempotents() const;

    // Small generating set: greedy max-coverage, then minimality sweep.
    std::vector<Index> generating_set() const;

    Monoid opposite() const;

    std::uint64_t hash() const;

private:
    Monoid(Grid table, Index identity) : table_(std::move(table)), identity_(identity) {}

    Grid table_;
    Index identity_;
};

using MonoidPtr = std::shared_ptr<const Monoid>;

MonoidPtr make_monoid(Grid table, Index identity);
MonoidPtr trivial_monoid();

// Pointer-or-value equality; acts over equal tables are interoperable.
bool same_monoid(const MonoidPtr& a, const MonoidPtr& b);

// Closes `seed` under multiplication; returns the sorted submonoid carrier
// (the identity is always included).
std::vector<Index> submonoid_closure(const Monoid& m, const std::vector<Index>& seed);

}  // namespace actkit
