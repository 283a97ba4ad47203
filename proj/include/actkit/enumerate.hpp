#pragma once

#include <optional>
#include <vector>

#include "actkit/hom.hpp"

namespace actkit {

// All equivariant maps source -> target, sorted lexicographically by map.
// An empty source yields exactly the empty hom; an empty target with a
// nonempty source yields nothing.
std::vector<ActHom> enumerate_homs(const ActPtr& source, const ActPtr& target);

std::size_t count_homs(const ActPtr& source, const ActPtr& target);

// First isomorphism in enumeration order, if any.
std::optional<ActHom> are_isomorphic(const ActPtr& a, const ActPtr& b);

std::vector<ActHom> enumerate_isos(const ActPtr& a, const ActPtr& b);

// Every connected component admits a map to the regular act and some map
// on the whole act hits the identity; equivalently the regular act is a
// retract of the act itself.
bool is_generator(const RightAct& x);

// Every connected component is isomorphic to e*M for an idempotent e.
// The empty act passes vacuously.
bool is_projective(const RightAct& x);

}  // namespace actkit
