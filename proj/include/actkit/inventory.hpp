#pragma once

#include <vector>

#include "actkit/monoid.hpp"

namespace actkit {

// All monoids of the given order, one per isomorphism class, identity at
// index 0, each presented by the least table among its relabelings and
// listed in table order.
std::vector<MonoidPtr> monoid_inventory(Index order);

// Orders 1 through max_order, concatenated.
std::vector<MonoidPtr> monoid_inventory_upto(Index max_order);

}  // namespace actkit
