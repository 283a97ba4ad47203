#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "actkit/adjunction.hpp"
#include "actkit/limits.hpp"
#include "actkit/universe.hpp"
#include "helpers.hpp"

using namespace actkit;

TEST_CASE("endomorphism monoid of the regular act mirrors the monoid itself") {
    const Context ctx = testkit::regular_context(testkit::two_idempotent());
    CHECK(ctx.endo_monoid()->size() == 2);
    CHECK(ctx.endo_monoid()->table() == ctx.monoid()->table());
    CHECK(ctx.endo_monoid()->identity() == 0);
    CHECK(ctx.endos()[0].map() == Row{0, 1});
    CHECK(ctx.endos()[1].map() == Row{1, 1});
}

TEST_CASE("endomorphism monoid of two fixed points is the full transformation monoid") {
    const Context ctx = make_context(trivial_monoid(), testkit::discrete(trivial_monoid(), 2));
    CHECK(ctx.endo_monoid()->size() == 4);
    CHECK(ctx.endo_monoid()->identity() == 1);
    CHECK(ctx.endo_monoid()->table() ==
          Grid{{0, 0, 0, 0}, {0, 1, 2, 3}, {3, 2, 1, 0}, {3, 3, 3, 3}});
}

TEST_CASE("endomorphism list is sorted and multiplies by composition") {
    for (const Context& ctx : {testkit::regular_context(testkit::two_idempotent()),
                               testkit::point_context(testkit::two_group()),
                               make_context(trivial_monoid(), testkit::discrete(trivial_monoid(), 2))}) {
        const auto& endos = ctx.endos();
        CHECK(std::is_sorted(endos.begin(), endos.end(),
                             [](const ActHom& a, const ActHom& b) { return a.map() < b.map(); }));
        const Monoid& e = *ctx.endo_monoid();
        CHECK(endos[e.identity()] == ActHom::identity(ctx.base()));
        for (Index a = 0; a < e.size(); ++a)
            for (Index b = 0; b < e.size(); ++b)
                CHECK(endos[e.mul(a, b)] == compose(endos[a], endos[b]));
    }
}

TEST_CASE("the biact actions commute") {
    const Context ctx = make_context(trivial_monoid(), testkit::discrete(trivial_monoid(), 2));
    const Biact& biact = ctx.biact();
    for (Index e = 0; e < ctx.endo_monoid()->size(); ++e)
        for (Index a = 0; a < biact.size(); ++a)
            for (Index m = 0; m < ctx.monoid()->size(); ++m)
                CHECK(biact.right_act(biact.left_act(e, a), m) ==
                      biact.left_act(e, biact.right_act(a, m)));
}

TEST_CASE("map acts over the regular base recover the object itself") {
    const MonoidPtr m = testkit::two_idempotent();
    const Context ctx = testkit::regular_context(m);
    for (const ActPtr& x : enumerate_universe(m, 3).representatives) {
        const HomAct hx = hom_act(ctx, x);
        CHECK(static_cast<Index>(hx.homs().size()) == x->size());
        // The endomorphism table equals the monoid table, so the two sides
        // are directly comparable.
        CHECK(are_isomorphic(hx.underlying(), x).has_value());
    }
}

TEST_CASE("map act sizes on hand-checked instances") {
    const Context theta = testkit::point_context(testkit::two_idempotent());
    CHECK(hom_act(theta, share(RightAct::regular(theta.monoid()))).homs().size() == 1);
    CHECK(hom_act(theta, share(RightAct::point(theta.monoid()))).homs().size() == 1);
    CHECK(hom_act(theta, share(RightAct::validate(theta.monoid(), {{0, 0}, {1, 1}})))
              .homs()
              .size() == 2);
    CHECK(hom_act(theta, share(RightAct::empty(theta.monoid()))).underlying()->size() == 0);

    // Two fixed points into three fixed points: all nine set maps.
    const Context flat = make_context(trivial_monoid(), testkit::discrete(trivial_monoid(), 2));
    CHECK(hom_act(flat, share(testkit::discrete(trivial_monoid(), 3))).homs().size() == 9);

    // Carrier order is the lexicographic hom order and index_of inverts it.
    const HomAct hx = hom_act(flat, share(testkit::discrete(trivial_monoid(), 2)));
    for (std::size_t i = 0; i < hx.homs().size(); ++i)
        CHECK(hx.index_of(hx.homs()[i].map()) == static_cast<Index>(i));
}

TEST_CASE("balanced products collapse exactly the exchange relation") {
    const Context flat = make_context(trivial_monoid(), testkit::discrete(trivial_monoid(), 2));
    const MonoidPtr e = flat.endo_monoid();
    CHECK(tensor_act(flat, share(RightAct::point(e))).underlying()->size() == 1);
    const TensorAct te = tensor_act(flat, share(RightAct::regular(e)));
    CHECK(are_isomorphic(te.underlying(), flat.base()).has_value());

    for (const Context& ctx :
         {flat, testkit::point_context(testkit::two_idempotent()),
          testkit::regular_context(testkit::two_idempotent())}) {
        for (const ActPtr& y : enumerate_universe(ctx.endo_monoid(), 2).representatives) {
            const TensorAct ty = tensor_act(ctx, y);
            const Index a_size = ctx.base()->size();

            // Exchange: [y*e, a] = [y, e(a)].
            for (Index yy = 0; yy < y->size(); ++yy)
                for (Index ee = 0; ee < ctx.endo_monoid()->size(); ++ee)
                    for (Index a = 0; a < a_size; ++a)
                        CHECK(ty.class_of(y->act(yy, ee), a) ==
                              ty.class_of(yy, ctx.biact().left_act(ee, a)));

            // Independent union-find over flat pairs gives the same count.
            Row parent(static_cast<std::size_t>(y->size()) * a_size);
            std::iota(parent.begin(), parent.end(), 0);
            const auto find = [&](Index v) {
                while (parent[v] != v) v = parent[v] = parent[parent[v]];
                return v;
            };
            for (Index yy = 0; yy < y->size(); ++yy)
                for (Index ee = 0; ee < ctx.endo_monoid()->size(); ++ee)
                    for (Index a = 0; a < a_size; ++a) {
                        const Index left = find(y->act(yy, ee) * a_size + a);
                        const Index right = find(yy * a_size + ctx.biact().left_act(ee, a));
                        if (left != right) parent[std::max(left, right)] = std::min(left, right);
                    }
            std::set<Index> roots;
            for (Index v = 0; v < static_cast<Index>(parent.size()); ++v) roots.insert(find(v));
            CHECK(static_cast<Index>(roots.size()) == ty.underlying()->size());

            // Representatives name their own classes.
            for (std::size_t c = 0; c < ty.representatives().size(); ++c) {
                const auto [ry, ra] = ty.representatives()[c];
                CHECK(ty.class_of(ry, ra) == static_cast<Index>(c));
            }
        }
    }
}

TEST_CASE("both functors preserve identity and composition") {
    const Context ctx = testkit::point_context(testkit::two_idempotent());
    const Universe mu = enumerate_universe(ctx.monoid(), 2);
    for (const ActPtr& x : mu.representatives) {
        CHECK(hom_on_morphism(ctx, ActHom::identity(x)) ==
              ActHom::identity(hom_act(ctx, x).underlying()));
    }
    for (const ActPtr& x : mu.representatives)
        for (const ActPtr& y : mu.representatives)
            for (const ActHom& f : enumerate_homs(x, y))
                for (const ActPtr& z : mu.representatives)
                    for (const ActHom& g : enumerate_homs(y, z))
                        CHECK(hom_on_morphism(ctx, compose(g, f)) ==
                              compose(hom_on_morphism(ctx, g), hom_on_morphism(ctx, f)));

    const Universe eu = enumerate_universe(ctx.endo_monoid(), 2);
    for (const ActPtr& y : eu.representatives) {
        CHECK(tensor_on_morphism(ctx, ActHom::identity(y)) ==
              ActHom::identity(tensor_act(ctx, y).underlying()));
        for (const ActPtr& z : eu.representatives)
            for (const ActHom& u : enumerate_homs(y, z))
                for (const ActPtr& w : eu.representatives)
                    for (const ActHom& v : enumerate_homs(z, w))
                        CHECK(tensor_on_morphism(ctx, compose(v, u)) ==
                              compose(tensor_on_morphism(ctx, v), tensor_on_morphism(ctx, u)));
    }
}

TEST_CASE("the map-act functor preserves monos and finite products") {
    const Context ctx = testkit::point_context(testkit::two_idempotent());
    const Universe mu = enumerate_universe(ctx.monoid(), 2);
    for (const ActPtr& x : mu.representatives)
        for (const ActPtr& y : mu.representatives)
            for (const ActHom& f : enumerate_homs(x, y))
                if (is_mono(f)) CHECK(is_mono(hom_on_morphism(ctx, f)));

    const ActPtr x1 = share(RightAct::regular(ctx.monoid()));
    const ActPtr x2 = share(RightAct::validate(ctx.monoid(), {{0, 0}, {1, 1}}));
    const ActPtr prod = product(ctx.monoid(), {x1, x2}).act;
    const ActPtr hprod = product(ctx.endo_monoid(), {hom_act(ctx, x1).underlying(),
                                                     hom_act(ctx, x2).underlying()})
                             .act;
    CHECK(are_isomorphic(hom_act(ctx, prod).underlying(), hprod).has_value());
}

TEST_CASE("the balanced-product functor preserves epis and finite coproducts") {
    const Context ctx = testkit::point_context(testkit::two_idempotent());
    const Universe eu = enumerate_universe(ctx.endo_monoid(), 2);
    for (const ActPtr& y : eu.representatives)
        for (const ActPtr& z : eu.representatives)
            for (const ActHom& u : enumerate_homs(y, z))
                if (is_epi(u)) CHECK(is_epi(tensor_on_morphism(ctx, u)));

    const ActPtr y1 = share(RightAct::regular(ctx.endo_monoid()));
    const ActPtr y2 = share(RightAct::point(ctx.endo_monoid()));
    const ActPtr cop = coproduct(ctx.endo_monoid(), {y1, y2}).act;
    const ActPtr tcop = coproduct(ctx.monoid(), {tensor_act(ctx, y1).underlying(),
                                                 tensor_act(ctx, y2).underlying()})
                            .act;
    CHECK(are_isomorphic(tensor_act(ctx, cop).underlying(), tcop).has_value());
}

TEST_CASE("unit and counit are natural") {
    const Context ctx = testkit::point_context(testkit::two_idempotent());
    const Universe eu = enumerate_universe(ctx.endo_monoid(), 2);
    for (const ActPtr& y : eu.representatives)
        for (const ActPtr& z : eu.representatives)
            for (const ActHom& f : enumerate_homs(y, z)) {
                const TensorAct ty = tensor_act(ctx, y);
                const TensorAct tz = tensor_act(ctx, z);
                const ActHom tf = tensor_on_morphism(ctx, f, ty, tz);
                const HomAct hty = hom_act(ctx, ty.underlying());
                const HomAct htz = hom_act(ctx, tz.underlying());
                CHECK(compose(unit(ctx, tz, htz), f) ==
                      compose(hom_on_morphism(ctx, tf, hty, htz), unit(ctx, ty, hty)));
            }

    const Universe mu = enumerate_universe(ctx.monoid(), 2);
    for (const ActPtr& x : mu.representatives)
        for (const ActPtr& z : mu.representatives)
            for (const ActHom& g : enumerate_homs(x, z)) {
                const HomAct hx = hom_act(ctx, x);
                const HomAct hz = hom_act(ctx, z);
                const ActHom hg = hom_on_morphism(ctx, g, hx, hz);
                const TensorAct thx = tensor_act(ctx, hx.underlying());
                const TensorAct thz = tensor_act(ctx, hz.underlying());
                CHECK(compose(g, counit(ctx, hx, thx)) ==
                      compose(counit(ctx, hz, thz), tensor_on_morphism(ctx, hg, thx, thz)));
            }
}

TEST_CASE("triangle identities hold on swept instances") {
    for (const MonoidPtr& m : monoid_inventory_upto(2))
        for (const ActPtr& base : enumerate_universe(m, 2).representatives) {
            if (base->size() == 0) continue;
            const Context ctx = make_context(m, *base);
            for (const ActPtr& x : enumerate_universe(m, 2).representatives)
                for (const ActPtr& y : enumerate_universe(ctx.endo_monoid(), 2).representatives)
                    CHECK(check_triangles(ctx, x, y));
        }
}

TEST_CASE("the adjunction bijection translates between the two hom sets") {
    const Context ctx = testkit::point_context(testkit::two_idempotent());
    const Universe mu = enumerate_universe(ctx.monoid(), 2);
    const Universe eu = enumerate_universe(ctx.endo_monoid(), 2);
    for (const ActPtr& x : mu.representatives)
        for (const ActPtr& y : eu.representatives) {
            const AdjunctionBijection bij = adjunction_bijection(ctx, x, y);
            REQUIRE(bij.tensor_side.size() == bij.hom_side.size());
            REQUIRE(bij.forward.size() == bij.tensor_side.size());
            REQUIRE(bij.backward.size() == bij.hom_side.size());
            for (std::size_t i = 0; i < bij.forward.size(); ++i)
                CHECK(bij.backward[bij.forward[i]] == static_cast<Index>(i));
            for (std::size_t j = 0; j < bij.backward.size(); ++j)
                CHECK(bij.forward[bij.backward[j]] == static_cast<Index>(j));

            // Defining formula: the partner of t sends y to the map
            // a |-> t([y, a]).
            const TensorAct ty = tensor_act(ctx, y);
            const HomAct hx = hom_act(ctx, x);
            for (std::size_t i = 0; i < bij.tensor_side.size(); ++i) {
                const ActHom& t = bij.tensor_side[i];
                const ActHom& h = bij.hom_side[bij.forward[i]];
                for (Index yy = 0; yy < y->size(); ++yy)
                    for (Index a = 0; a < ctx.base()->size(); ++a)
                        CHECK(hx.homs()[h(yy)](a) == t(ty.class_of(yy, a)));
            }
        }
}
