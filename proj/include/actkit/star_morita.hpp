#pragma once

#include <vector>

#include "actkit/classify.hpp"

namespace actkit {

// Certification summary for one base act. Every Certified-No carries a
// replayable witness; every Certified-Yes names the exact closure rule it
// rests on. The base act must be nonempty.
struct StarReport {
    Context context;
    bool indecomposable = false;
    Verdict weak_self_projective;
    Verdict pullback_flat;
    Verdict c_equals_g;  // colocal class equals the generated class
    Verdict weak_star;
    Verdict star;
};

StarReport star_report(const Context& ctx, Index bound);
StarReport star_report(const Context& ctx, const ClassifyWorkspace& ws);

// Is the unit epic at every object? Certified-No with the first failing
// universe object; a finite bound never certifies Yes.
Verdict check_wstarob(const Context& ctx, Index bound);
Verdict check_wstarob(const Context& ctx, const ClassifyWorkspace& ws);

// Is the counit monic at every object and the unit epic at every object?
// Also enforces that a generated object with monic counit, or a
// cogenerated object with epic unit, is reflexive.
Verdict check_starob(const Context& ctx, Index bound);
Verdict check_starob(const Context& ctx, const ClassifyWorkspace& ws);

// All cyclic projective generators with carrier up to |M|, as contexts.
std::vector<Context> morita_candidates(const MonoidPtr& monoid);

// Proof that the base act induces an equivalence on the bounded universes:
// the counit inverts at every right M-act and the unit inverts at every
// right E-act within the bound.
struct MoritaCertificate {
    MonoidPtr monoid;
    ActPtr base;
    MonoidPtr endo_monoid;
    Index bound = 0;
    Index m_objects_checked = 0;
    Index e_objects_checked = 0;
};

// Throws Error when the base is not a cyclic projective generator and
// TheoremViolation when any unit or counit fails to invert.
MoritaCertificate verify_morita(const MonoidPtr& monoid, const RightAct& base, Index bound);

}  // namespace actkit
