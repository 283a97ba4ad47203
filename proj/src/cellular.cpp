#include "actkit/cellular.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "actkit/errors.hpp"
#include "actkit/limits.hpp"

namespace actkit {

Approximation generated_coreflection(const Context& ctx, const ClassifyWorkspace& ws,
                                     const ActPtr& x) {
    const HomAct hx = hom_act(ctx, x);
    const TensorAct thx = tensor_act(ctx, hx.underlying());
    const ActHom delta = counit(ctx, hx, thx);
    const ImageFactorization fac = image_factorize(delta);
    const ActPtr image = fac.mono.source_ptr();
    const HomAct h_image = hom_act(ctx, image);
    if (!is_iso(hom_on_morphism(ctx, fac.mono, h_image, hx)))
        throw TheoremViolation("map-act functor failed to invert the counit image inclusion");
    Verdict colocality = bounded_colocal(ctx, ws, image);
    return Approximation{x,    image, fac.mono, ApproximationKind::Coreflection,
                         true, std::move(colocality)};
}

Approximation generated_coreflection(const Context& ctx, const ActPtr& x, Index bound) {
    return generated_coreflection(ctx, make_workspace(ctx, bound), x);
}

Approximation colocalization_candidate(const Context& ctx, const ClassifyWorkspace& ws,
                                       const ActPtr& x) {
    const HomAct hx = hom_act(ctx, x);
    const TensorAct thx = tensor_act(ctx, hx.underlying());
    const ActHom delta = counit(ctx, hx, thx);
    const ActPtr object = thx.underlying();
    const HomAct h_object = hom_act(ctx, object);
    const bool equivalence = is_iso(hom_on_morphism(ctx, delta, h_object, hx));
    Verdict colocality = bounded_colocal(ctx, ws, object, /*known_tensor_image=*/true);
    return Approximation{x,           object, delta, ApproximationKind::ColocalizationCandidate,
                         equivalence, std::move(colocality)};
}

Approximation colocalization_candidate(const Context& ctx, const ActPtr& x, Index bound) {
    return colocalization_candidate(ctx, make_workspace(ctx, bound), x);
}

Approximation bousfield_colimit_oracle(const Context& ctx, const ClassifyWorkspace& ws,
                                       const ActPtr& x) {
    struct Entry {
        Index rep;
        ActHom into_x;
    };
    const std::vector<ActPtr>& reps = ws.m_universe.representatives;
    std::vector<char> colocal(reps.size(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i)
        colocal[i] = bounded_colocal(ctx, ws, reps[i]).is_yes() ? 1 : 0;
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!colocal[i]) continue;
        for (const ActHom& f : enumerate_homs(reps[i], x))
            entries.push_back({static_cast<Index>(i), f});
    }
    std::vector<ActPtr> parts;
    for (const Entry& e : entries) parts.push_back(reps[e.rep]);
    const CoproductResult cop = coproduct(ctx.monoid(), parts);
    std::vector<std::pair<Index, Index>> glue;
    for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = 0; b < entries.size(); ++b)
            for (const ActHom& h : enumerate_homs(parts[a], parts[b]))
                if (compose(entries[b].into_x, h).map() == entries[a].into_x.map())
                    for (Index u = 0; u < parts[a]->size(); ++u)
                        glue.push_back({cop.injections[a](u), cop.injections[b](h(u))});
    const QuotientResult q = quotient_act(cop.act, glue);
    Row to_x(q.act->size(), -1);
    for (std::size_t a = 0; a < entries.size(); ++a)
        for (Index u = 0; u < parts[a]->size(); ++u) {
            const Index cls = q.class_of[cop.injections[a](u)];
            const Index value = entries[a].into_x(u);
            if (to_x[cls] == -1)
                to_x[cls] = value;
            else if (to_x[cls] != value)
                throw TheoremViolation("colimit cocone is not constant on classes");
        }
    const ActHom map = ActHom::validate(q.act, x, std::move(to_x));
    const HomAct h_object = hom_act(ctx, q.act);
    const HomAct hx = hom_act(ctx, x);
    const bool equivalence = is_iso(hom_on_morphism(ctx, map, h_object, hx));
    Verdict colocality = bounded_colocal(ctx, ws, q.act);
    if (colocality.is_no())
        throw TheoremViolation("colimit of colocal objects failed the transfer sweep");
    return Approximation{x,           q.act, map, ApproximationKind::BousfieldOracle,
                         equivalence, std::move(colocality)};
}

Approximation bousfield_colimit_oracle(const Context& ctx, const ActPtr& x, Index bound) {
    return bousfield_colimit_oracle(ctx, make_workspace(ctx, bound), x);
}

Approximation bousfield_limit_oracle(const Context& ctx, const ClassifyWorkspace& ws,
                                     const ActPtr& x) {
    const HomAct hx = hom_act(ctx, x);
    struct Entry {
        ActPtr object;
        ActHom into_x;
    };
    std::vector<Entry> entries;
    entries.push_back({x, ActHom::identity(x)});
    const std::vector<ActPtr>& reps = ws.m_universe.representatives;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (const ActHom& eps : enumerate_homs(reps[i], x))
            if (is_iso(hom_on_morphism(ctx, eps, ws.hom_of_mrep[i], hx)))
                entries.push_back({reps[i], eps});
    const Index n = static_cast<Index>(entries.size());
    struct Triangle {
        Index from;
        Index to;
        ActHom h;
    };
    std::vector<Triangle> triangles;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (const ActHom& h : enumerate_homs(entries[a].object, entries[b].object))
                if (compose(entries[b].into_x, h).map() == entries[a].into_x.map())
                    triangles.push_back({a, b, h});
    // A limit element picks one point per entry so that every triangle
    // commutes; enumerate them depth-first, forcing values where possible.
    std::vector<Row> families;
    Row current(n, -1);
    auto consistent = [&](Index k, Index v) {
        for (const Triangle& t : triangles) {
            if (t.from == k && t.to == k && t.h(v) != v) return false;
            if (t.from == k && t.to < k && t.h(v) != current[t.to]) return false;
            if (t.to == k && t.from < k && t.h(current[t.from]) != v) return false;
        }
        return true;
    };
    std::function<void(Index)> dfs = [&](Index k) {
        if (k == n) {
            families.push_back(current);
            return;
        }
        Index forced = -1;
        for (const Triangle& t : triangles)
            if (t.to == k && t.from < k) {
                const Index v = t.h(current[t.from]);
                if (forced == -1)
                    forced = v;
                else if (forced != v)
                    return;
            }
        if (forced != -1) {
            if (consistent(k, forced)) {
                current[k] = forced;
                dfs(k + 1);
                current[k] = -1;
            }
            return;
        }
        for (Index v = 0; v < entries[k].object->size(); ++v)
            if (consistent(k, v)) {
                current[k] = v;
                dfs(k + 1);
                current[k] = -1;
            }
    };
    dfs(0);
    std::sort(families.begin(), families.end());
    Grid action(families.size(), Row(ctx.monoid()->size()));
    for (std::size_t fi = 0; fi < families.size(); ++fi)
        for (Index m = 0; m < ctx.monoid()->size(); ++m) {
            Row moved(n);
            for (Index k = 0; k < n; ++k) moved[k] = entries[k].object->act(families[fi][k], m);
            const auto it = std::lower_bound(families.begin(), families.end(), moved);
            if (it == families.end() || *it != moved)
                throw TheoremViolation("matching families are not closed under the action");
            action[fi][m] = static_cast<Index>(it - families.begin());
        }
    const ActPtr object = share(RightAct::validate(ctx.monoid(), std::move(action)));
    Row to_x(object->size());
    for (std::size_t fi = 0; fi < families.size(); ++fi) to_x[fi] = families[fi][0];
    const ActHom map = ActHom::validate(object, x, std::move(to_x));
    const HomAct h_object = hom_act(ctx, object);
    const bool equivalence = is_iso(hom_on_morphism(ctx, map, h_object, hx));
    Verdict colocality = bounded_colocal(ctx, ws, object);
    return Approximation{x,           object, map, ApproximationKind::BousfieldOracle,
                         equivalence, std::move(colocality)};
}

Approximation bousfield_limit_oracle(const Context& ctx, const ActPtr& x, Index bound) {
    return bousfield_limit_oracle(ctx, make_workspace(ctx, bound), x);
}

Verdict initiality_check(const Context& ctx, const ClassifyWorkspace& ws,
                         const Approximation& approx) {
    if (!approx.is_equivalence)
        throw Error("initiality check requires an approximation the map-act functor inverts");
    const ActPtr& x = approx.target;
    const ActPtr& c = approx.object;
    const HomAct hx = hom_act(ctx, x);
    const std::vector<ActPtr>& reps = ws.m_universe.representatives;
    std::optional<Witness> found;
    // Unique factorization through every inverted map ending at the target.
    for (std::size_t i = 0; i < reps.size() && !found; ++i) {
        for (const ActHom& eps : enumerate_homs(reps[i], x)) {
            if (!is_iso(hom_on_morphism(ctx, eps, ws.hom_of_mrep[i], hx))) continue;
            int count = 0;
            for (const ActHom& h : enumerate_homs(c, reps[i]))
                if (compose(eps, h).map() == approx.map.map()) ++count;
            if (count != 1) {
                found = Witness{"initiality-fails",
                                {eps},
                                {reps[i]},
                                std::string(count == 0 ? "no" : "multiple") +
                                    " factorizations through universe rep " + std::to_string(i)};
                break;
            }
        }
    }
    // Unique factorization of every map from a certified-colocal object.
    for (std::size_t i = 0; i < reps.size() && !found; ++i) {
        if (!bounded_colocal(ctx, ws, reps[i]).is_yes()) continue;
        for (const ActHom& f : enumerate_homs(reps[i], x)) {
            int count = 0;
            for (const ActHom& h : enumerate_homs(reps[i], c))
                if (compose(approx.map, h).map() == f.map()) ++count;
            if (count != 1) {
                found = Witness{"terminality-fails",
                                {f},
                                {reps[i]},
                                std::string(count == 0 ? "no" : "multiple") +
                                    " factorizations from universe rep " + std::to_string(i)};
                break;
            }
        }
    }
    const bool exact = approx.is_equivalence && approx.colocality.is_yes();
    if (exact && found)
        throw TheoremViolation("colocal equivalence failed a factorization sweep");
    if (exact) return Verdict::yes(ws.bound, "colocal-equivalence");
    if (found) return Verdict::no(ws.bound, "sweep-counterexample", *found);
    return Verdict::unknown(ws.bound, "no-certificate-at-bound");
}

Verdict initiality_check(const Context& ctx, const Approximation& approx, Index bound) {
    return initiality_check(ctx, make_workspace(ctx, bound), approx);
}

bool approximations_agree(const Approximation& a, const Approximation& b) {
    if (!(*a.target == *b.target))
        throw TargetMismatch("approximations must share one target");
    for (const ActHom& iso : enumerate_isos(a.object, b.object))
        if (compose(b.map, iso).map() == a.map.map()) return true;
    return false;
}

}  // namespace actkit
