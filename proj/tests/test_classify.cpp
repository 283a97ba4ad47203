#include <doctest.h>

#include "actkit/classify.hpp"
#include "actkit/errors.hpp"
#include "actkit/limits.hpp"
#include "helpers.hpp"

using namespace actkit;

TEST_CASE("counit invertibility separates the universe over a one-point base") {
    const MonoidPtr m = testkit::two_idempotent();
    const Context ctx = testkit::point_context(m);

    const ActPtr reg = share(RightAct::regular(m));
    CHECK(!is_delta_reflexive(ctx, reg));
    CHECK(!is_a_generated(ctx, reg));
    const ActHom delta = counit(ctx, reg);
    CHECK(delta.map() == Row{1});
    CHECK(is_mono(delta));
    CHECK(!is_epi(delta));

    CHECK(is_delta_reflexive(ctx, share(RightAct::point(m))));
    CHECK(is_delta_reflexive(ctx, share(RightAct::validate(m, {{0, 0}, {1, 1}}))));
    CHECK(is_delta_reflexive(ctx, share(RightAct::empty(m))));
}

TEST_CASE("unit invertibility over a doubled endomorphism base detects decomposability") {
    // Two fixed points over the trivial monoid: decomposable, and the unit
    // on the doubled regular act is injective but not surjective.
    const Context ctx = make_context(trivial_monoid(), testkit::discrete(trivial_monoid(), 2));
    const ActPtr doubled =
        coproduct(ctx.endo_monoid(), {share(RightAct::regular(ctx.endo_monoid())),
                                      share(RightAct::regular(ctx.endo_monoid()))})
            .act;
    const ActHom eta = unit(ctx, doubled);
    CHECK(is_mono(eta));
    CHECK(!is_epi(eta));
    CHECK(!is_eta_reflexive(ctx, eta));
    CHECK(is_a_cogenerated(ctx, eta));
}

TEST_CASE("one connected component in the base matches unit invertibility on the double") {
    for (const MonoidPtr& m : monoid_inventory_upto(2))
        for (const ActPtr& base : enumerate_universe(m, 3).representatives) {
            if (base->size() == 0) continue;
            const Context ctx = make_context(m, *base);
            const ActPtr doubled =
                coproduct(ctx.endo_monoid(), {share(RightAct::regular(ctx.endo_monoid())),
                                              share(RightAct::regular(ctx.endo_monoid()))})
                    .act;
            CHECK(is_indecomposable(*base) == is_eta_reflexive(ctx, doubled));
            CHECK(is_indecomposable(*base) == is_indecomposable_small(ctx));
        }

    const MonoidPtr m = testkit::two_idempotent();
    const Context empty_base = make_context(m, RightAct::empty(m));
    CHECK_THROWS_AS(is_indecomposable_small(empty_base), DegenerateEmptyAct);
}

TEST_CASE("equivalence catalogs carry the frozen entry counts") {
    const MonoidPtr m = testkit::two_idempotent();
    const EquivalenceCatalog over_point = equivalence_catalog(testkit::point_context(m), 2);
    CHECK(over_point.entries.size() == 8);

    // Over the regular base the functor is faithful enough that only the
    // isomorphisms survive: one automorphism each for the empty act, the
    // point and the regular act, plus two for the two-fixed-point act.
    const EquivalenceCatalog over_regular = equivalence_catalog(testkit::regular_context(m), 2);
    CHECK(over_regular.entries.size() == 5);
    for (const auto& entry : over_regular.entries) {
        CHECK(entry.source == entry.target);
        CHECK(is_iso(entry.hom));
    }
}

TEST_CASE("bounded colocality certifies the frozen universe verdicts") {
    const MonoidPtr m = testkit::two_idempotent();
    const Context ctx = testkit::point_context(m);
    const ClassifyWorkspace ws = make_workspace(ctx, 2);
    REQUIRE(ws.m_universe.representatives.size() == 4);

    const Verdict v0 = bounded_colocal(ctx, ws, ws.m_universe.representatives[0]);
    const Verdict v1 = bounded_colocal(ctx, ws, ws.m_universe.representatives[1]);
    const Verdict v2 = bounded_colocal(ctx, ws, ws.m_universe.representatives[2]);
    const Verdict v3 = bounded_colocal(ctx, ws, ws.m_universe.representatives[3]);
    CHECK(v0.is_yes());
    CHECK(v1.is_yes());
    CHECK(v1.reason == "counit-iso");
    CHECK(v3.is_yes());

    // The regular act fails against a catalog equivalence.
    CHECK(v2.is_no());
    CHECK(v2.reason == "catalog-counterexample");
    REQUIRE(v2.witness.has_value());
    CHECK(v2.witness->kind == "postcompose-not-bijective");
    REQUIRE(!v2.witness->homs.empty());
    CHECK(v2.witness->homs[0].map() == Row{0, 0});

    // The convenience overload recomputes the workspace.
    CHECK(bounded_colocal(ctx, ws.m_universe.representatives[2], 2).is_no());
}

TEST_CASE("images of the two functors land in the expected classes") {
    for (const Context& ctx :
         {testkit::point_context(testkit::two_idempotent()),
          testkit::regular_context(testkit::two_idempotent()),
          make_context(trivial_monoid(), testkit::discrete(trivial_monoid(), 2))}) {
        const ClassifyWorkspace ws = make_workspace(ctx, 2);
        for (const ActPtr& x : ws.m_universe.representatives) {
            // Map acts are always cogenerated.
            const ActPtr hx = hom_act(ctx, x).underlying();
            CHECK(is_a_cogenerated(ctx, hx));
            CHECK(bounded_local(ctx, ws, hx, true).is_yes());
        }
        for (const ActPtr& y : ws.e_universe.representatives) {
            // Balanced products are always generated.
            const ActPtr ty = tensor_act(ctx, y).underlying();
            CHECK(is_a_generated(ctx, ty));
            CHECK(bounded_colocal(ctx, ws, ty, true).is_yes());
        }
    }
}

TEST_CASE("reflexive objects are generated and cogenerated") {
    for (const MonoidPtr& m : monoid_inventory_upto(2))
        for (const ActPtr& base : enumerate_universe(m, 2).representatives) {
            if (base->size() == 0) continue;
            const Context ctx = make_context(m, *base);
            for (const ActPtr& x : enumerate_universe(m, 2).representatives)
                if (is_delta_reflexive(ctx, x)) CHECK(is_a_generated(ctx, x));
            for (const ActPtr& y : enumerate_universe(ctx.endo_monoid(), 2).representatives)
                if (is_eta_reflexive(ctx, y)) CHECK(is_a_cogenerated(ctx, y));
        }
}

TEST_CASE("self-projectivity sweeps certify the frozen verdicts") {
    const Verdict theta = weak_self_projective(testkit::point_context(testkit::two_idempotent()), 2);
    CHECK(theta.is_yes());
    CHECK(theta.reason == "projective-base");

    // Over the two-element group the point is not projective, so nothing
    // certifies and nothing refutes at this bound.
    const Verdict group_point = weak_self_projective(testkit::point_context(testkit::two_group()), 2);
    CHECK(group_point.is_unknown());
    CHECK(group_point.reason == "no-certificate-at-bound");

    // A fixed point next to the group orbit produces a replayable
    // counterexample through a free cover.
    const MonoidPtr g = testkit::two_group();
    const Context mixed = make_context(g, RightAct::validate(g, {{0, 0}, {1, 2}, {2, 1}}));
    const Verdict refuted = weak_self_projective(mixed, 2);
    CHECK(refuted.is_no());
    REQUIRE(refuted.witness.has_value());
    CHECK(refuted.witness->kind == "epi-image-not-epi");
    REQUIRE(!refuted.witness->homs.empty());
    const ActHom& bad = refuted.witness->homs[0];
    CHECK(is_epi(bad));
    CHECK(!is_epi(hom_on_morphism(mixed, tensor_on_morphism(mixed, bad))));
}

TEST_CASE("pullback preservation certifies through left projectivity") {
    const Verdict theta = pullback_flat(testkit::point_context(testkit::two_idempotent()), 2);
    CHECK(theta.is_yes());
    CHECK(theta.reason == "left-act-projective");

    const Verdict regular = pullback_flat(testkit::regular_context(testkit::two_group()), 2);
    CHECK(regular.is_yes());
}

TEST_CASE("a failing pullback comparison is refuted with a replayable cospan") {
    const MonoidPtr m = make_monoid({{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}, 0);
    const Context ctx = make_context(m, RightAct::validate(m, {{0, 0, 0}, {1, 0, 0}, {2, 0, 2}}));
    CHECK(ctx.endo_monoid()->size() == 4);

    const Verdict refuted = pullback_flat(ctx, 2);
    CHECK(refuted.is_no());
    REQUIRE(refuted.witness.has_value());
    CHECK(refuted.witness->kind == "pullback-comparison-not-iso");
    REQUIRE(refuted.witness->homs.size() == 2);

    // The balanced product of the pullback is smaller than the pullback of
    // the balanced products, so no comparison map can be bijective.
    const ActHom& f = refuted.witness->homs[0];
    const ActHom& g = refuted.witness->homs[1];
    const PullbackResult upstairs = pullback(f, g);
    const TensorAct tz = tensor_act(ctx, f.target_ptr());
    const ActHom tf = tensor_on_morphism(ctx, f, tensor_act(ctx, f.source_ptr()), tz);
    const ActHom tg = tensor_on_morphism(ctx, g, tensor_act(ctx, g.source_ptr()), tz);
    const PullbackResult downstairs = pullback(tf, tg);
    CHECK(tensor_act(ctx, upstairs.act).underlying()->size() == 3);
    CHECK(downstairs.act->size() == 4);
}

TEST_CASE("certification chain: flat indecomposable bases cogenerate the bounded universe") {
    for (const MonoidPtr& m : monoid_inventory_upto(2))
        for (const ActPtr& base : enumerate_universe(m, 2).representatives) {
            if (base->size() == 0) continue;
            const Context ctx = make_context(m, *base);
            const ClassifyWorkspace ws = make_workspace(ctx, 2);
            if (!is_indecomposable_small(ctx)) continue;
            if (weak_self_projective(ctx, ws).is_no()) continue;
            if (!pullback_flat(ctx, ws).is_yes()) continue;
            for (const ActPtr& y : ws.e_universe.representatives)
                CHECK(is_a_cogenerated(ctx, y));
        }
}

TEST_CASE("certified refusals always carry a witness") {
    for (const Context& ctx : {testkit::point_context(testkit::two_idempotent()),
                               testkit::regular_context(testkit::two_group())}) {
        const ClassifyWorkspace ws = make_workspace(ctx, 2);
        for (const ActPtr& x : ws.m_universe.representatives) {
            const Verdict v = bounded_colocal(ctx, ws, x);
            if (v.is_no()) {
                CHECK(v.witness.has_value());
                CHECK(!v.witness->kind.empty());
            } else {
                CHECK(!v.reason.empty());
            }
        }
        for (const ActPtr& y : ws.e_universe.representatives) {
            const Verdict v = bounded_local(ctx, ws, y);
            if (v.is_no()) CHECK(v.witness.has_value());
        }
    }
}
