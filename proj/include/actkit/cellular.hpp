#pragma once

#include <vector>

#include "actkit/classify.hpp"

namespace actkit {

enum class ApproximationKind {
    Coreflection,             // image of the counit inside the target
    ColocalizationCandidate,  // the counit itself
    BousfieldOracle,          // colimit or limit over a bounded comma diagram
};

inline const char* to_string(ApproximationKind kind) {
    switch (kind) {
        case ApproximationKind::Coreflection: return "coreflection";
        case ApproximationKind::ColocalizationCandidate: return "colocalization-candidate";
        case ApproximationKind::BousfieldOracle: return "bousfield-oracle";
    }
    return "bousfield-oracle";
}

// One attempt at approximating `target` from the left by a generated or
// colocal object. `is_equivalence` records whether the map-act functor
// inverts `map`; `colocality` is the bounded status of `object`.
struct Approximation {
    ActPtr target;
    ActPtr object;
    ActHom map;  // object -> target
    ApproximationKind kind;
    bool is_equivalence = false;
    Verdict colocality;
};

// Image of the counit, with the inclusion certified invertible under the
// map-act functor.
Approximation generated_coreflection(const Context& ctx, const ActPtr& x, Index bound);
Approximation generated_coreflection(const Context& ctx, const ClassifyWorkspace& ws,
                                     const ActPtr& x);

// The counit at x, whose source is a balanced product by construction.
// Whether it is an equivalence is recorded, never assumed.
Approximation colocalization_candidate(const Context& ctx, const ActPtr& x, Index bound);
Approximation colocalization_candidate(const Context& ctx, const ClassifyWorkspace& ws,
                                       const ActPtr& x);

// Colimit over all maps from certified-colocal universe objects into x.
Approximation bousfield_colimit_oracle(const Context& ctx, const ActPtr& x, Index bound);
Approximation bousfield_colimit_oracle(const Context& ctx, const ClassifyWorkspace& ws,
                                       const ActPtr& x);

// Limit over all maps into x that the map-act functor inverts, with
// sources drawn from the bounded universe plus x itself.
Approximation bousfield_limit_oracle(const Context& ctx, const ActPtr& x, Index bound);
Approximation bousfield_limit_oracle(const Context& ctx, const ClassifyWorkspace& ws,
                                     const ActPtr& x);

// Is the approximation initial among inverted maps ending at its target
// and terminal among maps from certified-colocal objects? Requires
// approx.is_equivalence; throws Error otherwise.
Verdict initiality_check(const Context& ctx, const Approximation& approx, Index bound);
Verdict initiality_check(const Context& ctx, const ClassifyWorkspace& ws,
                         const Approximation& approx);

// Is there an isomorphism between the two objects commuting with the maps
// to the shared target?
bool approximations_agree(const Approximation& a, const Approximation& b);

}  // namespace actkit
