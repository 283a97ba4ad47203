#pragma once

#include <vector>

#include "actkit/adjunction.hpp"
#include "actkit/inventory.hpp"

namespace testkit {

using namespace actkit;

// M = {1, e} with e*e = e.
inline MonoidPtr two_idempotent() { return make_monoid({{0, 1}, {1, 1}}, 0); }

// The two-element group.
inline MonoidPtr two_group() { return make_monoid({{0, 1}, {1, 0}}, 0); }

// {1, e, f} with x*y = y on {e, f}.
inline MonoidPtr right_zero_adjoined() { return make_monoid({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, 0); }

// n fixed points over the trivial monoid.
inline RightAct discrete(const MonoidPtr& m, Index n) {
    Grid action(n, Row(m->size()));
    for (Index x = 0; x < n; ++x)
        for (Index v = 0; v < m->size(); ++v) action[x][v] = x;
    return RightAct::validate(m, action);
}

// Base act = one point; the endomorphism monoid is trivial.
inline Context point_context(const MonoidPtr& m) { return make_context(m, RightAct::point(m)); }

// Base act = the monoid itself.
inline Context regular_context(const MonoidPtr& m) { return make_context(m, RightAct::regular(m)); }

}  // namespace testkit
