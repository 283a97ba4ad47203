#include "actkit/star_morita.hpp"

#include <optional>
#include <string>
#include <utility>

#include "actkit/errors.hpp"

namespace actkit {

Verdict check_wstarob(const Context&, const ClassifyWorkspace& ws) {
    const std::vector<ActPtr>& reps = ws.e_universe.representatives;
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (!is_epi(ws.unit_of_erep[i]))
            return Verdict::no(ws.bound, "sweep-counterexample",
                               Witness{"unit-not-epi",
                                       {ws.unit_of_erep[i]},
                                       {reps[i]},
                                       "universe rep " + std::to_string(i)});
    return Verdict::unknown(ws.bound, "all-units-epi-at-bound");
}

Verdict check_wstarob(const Context& ctx, Index bound) {
    return check_wstarob(ctx, make_workspace(ctx, bound));
}

Verdict check_starob(const Context& ctx, const ClassifyWorkspace& ws) {
    for (std::size_t i = 0; i < ws.m_universe.representatives.size(); ++i) {
        const ActHom& delta = ws.counit_of_mrep[i];
        // A generated object with monic counit has invertible counit,
        // because the category is balanced.
        if (is_mono(delta) && is_a_generated(ctx, ws.hom_of_mrep[i], delta) && !is_iso(delta))
            throw TheoremViolation("monic epic counit failed to invert");
        if (!is_mono(delta))
            return Verdict::no(ws.bound, "sweep-counterexample",
                               Witness{"counit-not-mono",
                                       {delta},
                                       {ws.m_universe.representatives[i]},
                                       "universe rep " + std::to_string(i)});
    }
    for (std::size_t i = 0; i < ws.e_universe.representatives.size(); ++i) {
        const ActHom& eta = ws.unit_of_erep[i];
        if (is_epi(eta) && is_a_cogenerated(ctx, eta) && !is_iso(eta))
            throw TheoremViolation("monic epic unit failed to invert");
        if (!is_epi(eta))
            return Verdict::no(ws.bound, "sweep-counterexample",
                               Witness{"unit-not-epi",
                                       {eta},
                                       {ws.e_universe.representatives[i]},
                                       "universe rep " + std::to_string(i)});
    }
    return Verdict::unknown(ws.bound, "object-conditions-hold-at-bound");
}

Verdict check_starob(const Context& ctx, Index bound) {
    return check_starob(ctx, make_workspace(ctx, bound));
}

StarReport star_report(const Context& ctx, const ClassifyWorkspace& ws) {
    const bool indecomposable = is_indecomposable_small(ctx);
    Verdict wsp = weak_self_projective(ctx, ws);
    Verdict pbf = pullback_flat(ctx, ws);

    // Does the colocal class coincide with the generated class?
    Verdict ceg = Verdict::unknown(ws.bound, "no-certificate-at-bound");
    {
        std::optional<Witness> found;
        for (std::size_t i = 0; i < ws.m_universe.representatives.size(); ++i) {
            const ActPtr& x = ws.m_universe.representatives[i];
            const Verdict colocal = bounded_colocal(ctx, ws, x);
            const bool generated = is_a_generated(ctx, ws.hom_of_mrep[i], ws.counit_of_mrep[i]);
            if (colocal.is_yes() && !generated)
                throw TheoremViolation("colocal object is not generated by the base act");
            if (generated && colocal.is_no()) {
                found = colocal.witness;
                found->kind = "generated-but-not-colocal";
                found->acts = {x};
                found->note = "universe rep " + std::to_string(i) + "; " + found->note;
                break;
            }
        }
        const bool generator_base = is_generator(*ctx.base());
        if (generator_base && found)
            throw TheoremViolation("generator base act separated the two classes");
        if (generator_base)
            ceg = Verdict::yes(ws.bound, "generator-base");
        else if (found)
            ceg = Verdict::no(ws.bound, "sweep-counterexample", *found);
    }

    const Verdict unit_sweep = check_wstarob(ctx, ws);

    Verdict weak_star = Verdict::unknown(ws.bound, "no-certificate-at-bound");
    if (indecomposable && wsp.is_yes() && unit_sweep.is_no())
        throw TheoremViolation("certified weak star base with a non-epic unit");
    if (wsp.is_no())
        weak_star = Verdict::no(ws.bound, "weak-self-projective-fails", *wsp.witness);
    else if (unit_sweep.is_no())
        weak_star = Verdict::no(ws.bound, "unit-not-epi-at-bound", *unit_sweep.witness);
    else if (indecomposable && wsp.is_yes())
        weak_star = Verdict::yes(ws.bound, "indecomposable-weak-self-projective");

    const Verdict object_sweep = check_starob(ctx, ws);

    Verdict star = Verdict::unknown(ws.bound, "no-certificate-at-bound");
    if (weak_star.is_yes() && ceg.is_yes() && object_sweep.is_no())
        throw TheoremViolation("certified star base failed an object condition");
    if (weak_star.is_no())
        star = Verdict::no(ws.bound, "weak-star-fails", *weak_star.witness);
    else if (ceg.is_no())
        star = Verdict::no(ws.bound, "generated-class-differs", *ceg.witness);
    else if (object_sweep.is_no())
        star = Verdict::no(ws.bound, "object-condition-fails", *object_sweep.witness);
    else if (weak_star.is_yes() && ceg.is_yes())
        star = Verdict::yes(ws.bound, "weak-star-and-generated-class-equal");

    return StarReport{ctx, indecomposable, std::move(wsp), std::move(pbf),
                      std::move(ceg), std::move(weak_star), std::move(star)};
}

StarReport star_report(const Context& ctx, Index bound) {
    return star_report(ctx, make_workspace(ctx, bound));
}

std::vector<Context> morita_candidates(const MonoidPtr& monoid) {
    const Universe universe = enumerate_universe(monoid, monoid->size());
    std::vector<Context> out;
    for (const ActPtr& rep : universe.representatives) {
        if (rep->size() == 0) continue;
        if (!is_cyclic(*rep)) continue;
        if (!is_projective(*rep)) continue;
        if (!is_generator(*rep)) continue;
        out.push_back(make_context(monoid, *rep));
    }
    return out;
}

MoritaCertificate verify_morita(const MonoidPtr& monoid, const RightAct& base, Index bound) {
    if (base.size() == 0 || !is_cyclic(base) || !is_projective(base) || !is_generator(base))
        throw Error("base act is not a cyclic projective generator");
    const Context ctx = make_context(monoid, base);
    const Universe m_universe = enumerate_universe(ctx.monoid(), bound);
    const Universe e_universe = enumerate_universe(ctx.endo_monoid(), bound);
    for (const ActPtr& rep : m_universe.representatives) {
        const HomAct h = hom_act(ctx, rep);
        const TensorAct t = tensor_act(ctx, h.underlying());
        if (!is_iso(counit(ctx, h, t)))
            throw TheoremViolation("counit fails to invert on a universe object");
    }
    for (const ActPtr& rep : e_universe.representatives) {
        const TensorAct t = tensor_act(ctx, rep);
        const HomAct h = hom_act(ctx, t.underlying());
        if (!is_iso(unit(ctx, t, h)))
            throw TheoremViolation("unit fails to invert on a universe object");
    }
    return MoritaCertificate{ctx.monoid(),
                             ctx.base(),
                             ctx.endo_monoid(),
                             bound,
                             static_cast<Index>(m_universe.representatives.size()),
                             static_cast<Index>(e_universe.representatives.size())};
}

}  // namespace actkit
