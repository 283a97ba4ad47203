#pragma once

#include <optional>
#include <vector>

#include "actkit/enumerate.hpp"

namespace actkit {

// All right acts over one monoid with carrier size up to `bound`, one
// representative per isomorphism class, ordered by size then by action
// table. Size 0 contributes the empty act.
struct Universe {
    MonoidPtr monoid;
    Index bound = 0;
    std::vector<ActPtr> representatives;

    // Index of the representative isomorphic to `act`, if within bound.
    std::optional<Index> find_representative(const ActPtr& act) const;
};

// Every act structure on {0..size-1}, one per isomorphism class, ordered by
// action table.
std::vector<ActPtr> enumerate_acts_of_size(const MonoidPtr& monoid, Index size);

// Honors the ACTKIT_CACHE_DIR environment variable: when set, universes are
// read from and written to that directory keyed by monoid table and bound.
Universe enumerate_universe(const MonoidPtr& monoid, Index bound);

}  // namespace actkit
