#include "actkit/adjunction.hpp"

#include <algorithm>

#include "actkit/errors.hpp"
#include "actkit/limits.hpp"

namespace actkit {

Context Context::make(MonoidPtr monoid, RightAct base) {
    if (!same_monoid(base.monoid(), monoid))
        throw MonoidMismatch("context base act lives over a different monoid");
    Context ctx;
    ctx.monoid_ = std::move(monoid);
    ctx.base_ = share(std::move(base));
    ctx.endos_ = enumerate_homs(ctx.base_, ctx.base_);
    const Index e_size = static_cast<Index>(ctx.endos_.size());
    auto index_of_map = [&](const Row& map) {
        const auto it = std::lower_bound(
            ctx.endos_.begin(), ctx.endos_.end(), map,
            [](const ActHom& h, const Row& m) { return h.map() < m; });
        if (it == ctx.endos_.end() || it->map() != map)
            throw TheoremViolation("endomorphisms are not closed under composition");
        return static_cast<Index>(it - ctx.endos_.begin());
    };
    Grid table(e_size, Row(e_size));
    Index identity = -1;
    for (Index e = 0; e < e_size; ++e) {
        for (Index f = 0; f < e_size; ++f) {
            Row composed(ctx.base_->size());
            for (Index x = 0; x < ctx.base_->size(); ++x)
                composed[x] = ctx.endos_[e].map()[ctx.endos_[f].map()[x]];
            table[e][f] = index_of_map(composed);
        }
        if (ctx.endos_[e].map() == ActHom::identity(ctx.base_).map()) identity = e;
    }
    ctx.endo_monoid_ = make_monoid(std::move(table), identity);
    Grid left_action(e_size, Row(ctx.base_->size()));
    for (Index e = 0; e < e_size; ++e)
        for (Index a = 0; a < ctx.base_->size(); ++a) left_action[e][a] = ctx.endos_[e].map()[a];
    ctx.biact_ = std::make_shared<const Biact>(
        Biact::validate(ctx.endo_monoid_, std::move(left_action), *ctx.base_));
    return ctx;
}

Context make_context(MonoidPtr monoid, RightAct base) {
    return Context::make(std::move(monoid), std::move(base));
}

HomAct::HomAct(ActPtr underlying, std::vector<ActHom> homs, ActPtr target)
    : underlying_(std::move(underlying)), homs_(std::move(homs)), target_(std::move(target)) {}

Index HomAct::index_of(const Row& map) const {
    const auto it =
        std::lower_bound(homs_.begin(), homs_.end(), map,
                         [](const ActHom& h, const Row& m) { return h.map() < m; });
    if (it == homs_.end() || it->map() != map)
        throw Error("map act does not contain the requested map");
    return static_cast<Index>(it - homs_.begin());
}

HomAct hom_act(const Context& ctx, const ActPtr& x) {
    if (!same_monoid(x->monoid(), ctx.monoid()))
        throw MonoidMismatch("map act input lives over the wrong monoid");
    std::vector<ActHom> homs = enumerate_homs(ctx.base(), x);
    const Index h_size = static_cast<Index>(homs.size());
    const Index e_size = static_cast<Index>(ctx.endos().size());
    auto index_of_map = [&](const Row& map) {
        const auto it = std::lower_bound(
            homs.begin(), homs.end(), map,
            [](const ActHom& h, const Row& m) { return h.map() < m; });
        if (it == homs.end() || it->map() != map)
            throw TheoremViolation("maps are not closed under precomposition");
        return static_cast<Index>(it - homs.begin());
    };
    Grid action(h_size, Row(e_size));
    Row composed(ctx.base()->size());
    for (Index h = 0; h < h_size; ++h)
        for (Index e = 0; e < e_size; ++e) {
            for (Index a = 0; a < ctx.base()->size(); ++a)
                composed[a] = homs[h].map()[ctx.endos()[e].map()[a]];
            action[h][e] = index_of_map(composed);
        }
    ActPtr underlying = share(RightAct::validate(ctx.endo_monoid(), std::move(action)));
    return HomAct(std::move(underlying), std::move(homs), x);
}

TensorAct::TensorAct(ActPtr underlying, std::vector<Index> class_of_flat,
                     std::vector<std::pair<Index, Index>> representatives, ActPtr source,
                     Index a_size)
    : underlying_(std::move(underlying)),
      class_of_flat_(std::move(class_of_flat)),
      representatives_(std::move(representatives)),
      source_(std::move(source)),
      a_size_(a_size) {}

TensorAct tensor_act(const Context& ctx, const ActPtr& y) {
    if (!same_monoid(y->monoid(), ctx.endo_monoid()))
        throw MonoidMismatch("balanced product input lives over the wrong monoid");
    const Index a_size = ctx.base()->size();
    const Index y_size = y->size();
    // The pair set Y x A is an M-act through the A coordinate; the balanced
    // product is its quotient by the exchange pairs, and quotient_act closes
    // the congruence under the action.
    Grid pair_action(y_size * a_size, Row(ctx.monoid()->size()));
    for (Index yy = 0; yy < y_size; ++yy)
        for (Index a = 0; a < a_size; ++a)
            for (Index m = 0; m < ctx.monoid()->size(); ++m)
                pair_action[yy * a_size + a][m] = yy * a_size + ctx.base()->act(a, m);
    ActPtr pairs = share(RightAct::validate(ctx.monoid(), std::move(pair_action)));
    std::vector<std::pair<Index, Index>> exchanges;
    const Index e_size = static_cast<Index>(ctx.endos().size());
    for (Index yy = 0; yy < y_size; ++yy)
        for (Index e = 0; e < e_size; ++e)
            for (Index a = 0; a < a_size; ++a)
                exchanges.push_back(
                    {y->act(yy, e) * a_size + a, yy * a_size + ctx.endos()[e].map()[a]});
    QuotientResult q = quotient_act(pairs, exchanges);
    std::vector<std::pair<Index, Index>> reps(q.act->size(), {-1, -1});
    for (Index flat = y_size * a_size; flat-- > 0;)
        reps[q.class_of[flat]] = {flat / a_size, flat % a_size};
    return TensorAct(q.act, std::move(q.class_of), std::move(reps), y, a_size);
}

ActHom hom_on_morphism(const Context& ctx, const ActHom& f, const HomAct& source_act,
                       const HomAct& target_act) {
    Row map(source_act.homs().size());
    Row composed(ctx.base()->size());
    for (std::size_t h = 0; h < source_act.homs().size(); ++h) {
        for (Index a = 0; a < ctx.base()->size(); ++a)
            composed[a] = f.map()[source_act.homs()[h].map()[a]];
        map[h] = target_act.index_of(composed);
    }
    return ActHom::validate(source_act.underlying(), target_act.underlying(), std::move(map));
}

ActHom hom_on_morphism(const Context& ctx, const ActHom& f) {
    const HomAct source_act = hom_act(ctx, f.source_ptr());
    const HomAct target_act = hom_act(ctx, f.target_ptr());
    return hom_on_morphism(ctx, f, source_act, target_act);
}

ActHom tensor_on_morphism(const Context& ctx, const ActHom& u, const TensorAct& source_act,
                          const TensorAct& target_act) {
    Row map(source_act.underlying()->size(), -1);
    for (Index yy = 0; yy < source_act.y_size(); ++yy)
        for (Index a = 0; a < source_act.a_size(); ++a) {
            const Index from = source_act.class_of(yy, a);
            const Index to = target_act.class_of(u.map()[yy], a);
            if (map[from] == -1)
                map[from] = to;
            else if (map[from] != to)
                throw TheoremViolation("pushforward is not constant on classes");
        }
    return ActHom::validate(source_act.underlying(), target_act.underlying(), std::move(map));
}

ActHom tensor_on_morphism(const Context& ctx, const ActHom& u) {
    const TensorAct source_act = tensor_act(ctx, u.source_ptr());
    const TensorAct target_act = tensor_act(ctx, u.target_ptr());
    return tensor_on_morphism(ctx, u, source_act, target_act);
}

ActHom unit(const Context& ctx, const TensorAct& ty, const HomAct& h_of_ty) {
    Row map(ty.y_size());
    Row image(ty.a_size());
    for (Index yy = 0; yy < ty.y_size(); ++yy) {
        for (Index a = 0; a < ty.a_size(); ++a) image[a] = ty.class_of(yy, a);
        map[yy] = h_of_ty.index_of(image);
    }
    return ActHom::validate(ty.source(), h_of_ty.underlying(), std::move(map));
}

ActHom unit(const Context& ctx, const ActPtr& y) {
    const TensorAct ty = tensor_act(ctx, y);
    const HomAct h_of_ty = hom_act(ctx, ty.underlying());
    return unit(ctx, ty, h_of_ty);
}

ActHom counit(const Context& ctx, const HomAct& hx, const TensorAct& t_of_hx) {
    Row map(t_of_hx.underlying()->size(), -1);
    for (Index h = 0; h < t_of_hx.y_size(); ++h)
        for (Index a = 0; a < t_of_hx.a_size(); ++a) {
            const Index from = t_of_hx.class_of(h, a);
            const Index to = hx.homs()[h].map()[a];
            if (map[from] == -1)
                map[from] = to;
            else if (map[from] != to)
                throw TheoremViolation("evaluation is not constant on classes");
        }
    return ActHom::validate(t_of_hx.underlying(), hx.target(), std::move(map));
}

ActHom counit(const Context& ctx, const ActPtr& x) {
    const HomAct hx = hom_act(ctx, x);
    const TensorAct t_of_hx = tensor_act(ctx, hx.underlying());
    return counit(ctx, hx, t_of_hx);
}

bool check_triangles(const Context& ctx, const ActPtr& x, const ActPtr& y) {
    // Map-act triangle at x: the composite of the unit at H(x) with the
    // image of the counit under the hom functor is the identity.
    {
        const HomAct hx = hom_act(ctx, x);
        const TensorAct t_of_hx = tensor_act(ctx, hx.underlying());
        const ActHom delta = counit(ctx, hx, t_of_hx);
        const HomAct h_of_thx = hom_act(ctx, t_of_hx.underlying());
        const ActHom eta = unit(ctx, t_of_hx, h_of_thx);
        const ActHom h_delta = hom_on_morphism(ctx, delta, h_of_thx, hx);
        if (!(compose(h_delta, eta) == ActHom::identity(hx.underlying()))) return false;
    }
    // Balanced-product triangle at y: the composite of the pushforward of
    // the unit with the counit at T(y) is the identity.
    {
        const TensorAct ty = tensor_act(ctx, y);
        const HomAct h_of_ty = hom_act(ctx, ty.underlying());
        const ActHom eta = unit(ctx, ty, h_of_ty);
        const TensorAct t_of_hty = tensor_act(ctx, h_of_ty.underlying());
        const ActHom t_eta = tensor_on_morphism(ctx, eta, ty, t_of_hty);
        const ActHom delta = counit(ctx, h_of_ty, t_of_hty);
        if (!(compose(delta, t_eta) == ActHom::identity(ty.underlying()))) return false;
    }
    return true;
}

AdjunctionBijection adjunction_bijection(const Context& ctx, const ActPtr& x, const ActPtr& y) {
    AdjunctionBijection out;
    const TensorAct ty = tensor_act(ctx, y);
    const HomAct hx = hom_act(ctx, x);
    out.tensor_side = enumerate_homs(ty.underlying(), x);
    out.hom_side = enumerate_homs(y, hx.underlying());
    out.forward.assign(out.tensor_side.size(), -1);
    out.backward.assign(out.hom_side.size(), -1);
    // Forward: g becomes y -> (a -> g[y, a]).
    {
        std::vector<Row> keys;
        for (const ActHom& f : out.hom_side) keys.push_back(f.map());
        Row image(ty.a_size());
        for (std::size_t i = 0; i < out.tensor_side.size(); ++i) {
            Row map(y->size());
            for (Index yy = 0; yy < y->size(); ++yy) {
                for (Index a = 0; a < ty.a_size(); ++a)
                    image[a] = out.tensor_side[i].map()[ty.class_of(yy, a)];
                map[yy] = hx.index_of(image);
            }
            const auto it = std::lower_bound(keys.begin(), keys.end(), map);
            if (it == keys.end() || *it != map)
                throw TheoremViolation("transpose landed outside the hom list");
            out.forward[i] = static_cast<Index>(it - keys.begin());
        }
    }
    // Backward: f becomes [y, a] -> f(y)(a).
    {
        std::vector<Row> keys;
        for (const ActHom& g : out.tensor_side) keys.push_back(g.map());
        for (std::size_t j = 0; j < out.hom_side.size(); ++j) {
            Row map(ty.underlying()->size());
            for (Index c = 0; c < ty.underlying()->size(); ++c) {
                const auto [yy, a] = ty.representatives()[c];
                map[c] = hx.homs()[out.hom_side[j].map()[yy]].map()[a];
            }
            const auto it = std::lower_bound(keys.begin(), keys.end(), map);
            if (it == keys.end() || *it != map)
                throw TheoremViolation("transpose landed outside the hom list");
            out.backward[j] = static_cast<Index>(it - keys.begin());
        }
    }
    for (std::size_t i = 0; i < out.forward.size(); ++i)
        if (out.backward[out.forward[i]] != static_cast<Index>(i))
            throw TheoremViolation("transposition is not a bijection");
    for (std::size_t j = 0; j < out.backward.size(); ++j)
        if (out.forward[out.backward[j]] != static_cast<Index>(j))
            throw TheoremViolation("transposition is not a bijection");
    return out;
}

}  // namespace actkit
