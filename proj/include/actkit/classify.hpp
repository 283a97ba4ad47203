#pragma once

#include <vector>

#include "actkit/adjunction.hpp"
#include "actkit/universe.hpp"
#include "actkit/verdict.hpp"

namespace actkit {

// The counit at X is an isomorphism.
bool is_delta_reflexive(const Context& ctx, const ActPtr& x);
bool is_delta_reflexive(const Context& ctx, const ActHom& counit_at_x);

// The unit at Y is an isomorphism.
bool is_eta_reflexive(const Context& ctx, const ActPtr& y);
bool is_eta_reflexive(const Context& ctx, const ActHom& unit_at_y);

// The counit at X is surjective; cross-checked against the images of all
// maps out of the base act covering X.
bool is_a_generated(const Context& ctx, const ActPtr& x);
bool is_a_generated(const Context& ctx, const HomAct& hx, const ActHom& counit_at_x);

// The unit at Y is injective.
bool is_a_cogenerated(const Context& ctx, const ActPtr& y);
bool is_a_cogenerated(const Context& ctx, const ActHom& unit_at_y);

// All maps between universe representatives that one of the two functors
// sends to an isomorphism, in target-major then source then map order.
struct EquivalenceCatalog {
    struct Entry {
        Index source = 0;  // universe index of the map's source
        Index target = 0;  // universe index of the map's target
        ActHom hom;
    };

    Index bound = 0;
    Universe universe;
    std::vector<Entry> entries;
};

// Maps between right M-act representatives inverted by the map-act functor.
EquivalenceCatalog equivalence_catalog(const Context& ctx, Index bound);

// Maps between right E-act representatives inverted by the balanced-product
// functor.
EquivalenceCatalog tensor_equivalence_catalog(const Context& ctx, Index bound);

// Everything the bounded classification sweeps share, computed once.
struct ClassifyWorkspace {
    Index bound = 0;
    Universe m_universe;                     // right M-acts up to the bound
    Universe e_universe;                     // right E-acts up to the bound
    std::vector<HomAct> hom_of_mrep;         // map act of each M-side rep
    std::vector<ActHom> counit_of_mrep;      // counit at each M-side rep
    std::vector<TensorAct> tensor_of_erep;   // balanced product of each E-side rep
    std::vector<HomAct> hom_of_erep_tensor;  // map act of that balanced product
    std::vector<ActHom> unit_of_erep;        // unit at each E-side rep
    EquivalenceCatalog h_catalog;
    EquivalenceCatalog t_catalog;
};

ClassifyWorkspace make_workspace(const Context& ctx, Index bound);

// Does every catalog equivalence transfer maps out of x bijectively?
// Certified-Yes only when the counit at x is invertible or x is isomorphic
// to a balanced product (set known_tensor_image when that is already
// established for an object too large for the bounded search to see).
Verdict bounded_colocal(const Context& ctx, const ActPtr& x, Index bound);
Verdict bounded_colocal(const Context& ctx, const ClassifyWorkspace& ws, const ActPtr& x,
                        bool known_tensor_image = false);

// Dual test on maps into y along catalog entries the balanced-product
// functor inverts.
Verdict bounded_local(const Context& ctx, const ActPtr& y, Index bound);
Verdict bounded_local(const Context& ctx, const ClassifyWorkspace& ws, const ActPtr& y,
                      bool known_hom_image = false);

// One connected component; cross-checked against invertibility of the unit
// on the doubled regular act over E. Throws DegenerateEmptyAct on an empty
// base act.
bool is_indecomposable_small(const Context& ctx);

// Does the composite functor send epimorphisms with unit-invertible source
// to epimorphisms? Sweeps unit-invertible universe sources and finite free
// covers; Certified-Yes only when the base act is projective.
Verdict weak_self_projective(const Context& ctx, Index bound);
Verdict weak_self_projective(const Context& ctx, const ClassifyWorkspace& ws);

// Does the balanced-product functor preserve pullbacks at the bound, via
// the canonical comparison map? Certified-Yes only when the base act is
// projective as a left act over its endomorphisms.
Verdict pullback_flat(const Context& ctx, Index bound);
Verdict pullback_flat(const Context& ctx, const ClassifyWorkspace& ws);

}  // namespace actkit
