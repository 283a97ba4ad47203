#include "actkit/classify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "actkit/errors.hpp"
#include "actkit/limits.hpp"

namespace actkit {

namespace {

Index index_in(const std::vector<ActHom>& homs, const Row& map) {
    auto it = std::lower_bound(homs.begin(), homs.end(), map,
                               [](const ActHom& h, const Row& m) { return h.map() < m; });
    if (it == homs.end() || it->map() != map)
        throw TheoremViolation("composite map missing from a complete enumeration");
    return static_cast<Index>(it - homs.begin());
}

// Is g -> eps . g a bijection from `from` onto `to`?
bool postcompose_bijective(const std::vector<ActHom>& from, const ActHom& eps,
                           const std::vector<ActHom>& to) {
    if (from.size() != to.size()) return false;
    std::vector<char> hit(to.size(), 0);
    for (const ActHom& g : from) {
        const Index i = index_in(to, compose(eps, g).map());
        if (hit[i]) return false;
        hit[i] = 1;
    }
    return true;
}

// Is g -> g . u a bijection from `from` onto `to`?
bool precompose_bijective(const std::vector<ActHom>& from, const ActHom& u,
                          const std::vector<ActHom>& to) {
    if (from.size() != to.size()) return false;
    std::vector<char> hit(to.size(), 0);
    for (const ActHom& g : from) {
        const Index i = index_in(to, compose(g, u).map());
        if (hit[i]) return false;
        hit[i] = 1;
    }
    return true;
}

}  // namespace

bool is_delta_reflexive(const Context& ctx, const ActPtr& x) {
    return is_delta_reflexive(ctx, counit(ctx, x));
}

bool is_delta_reflexive(const Context&, const ActHom& counit_at_x) { return is_iso(counit_at_x); }

bool is_eta_reflexive(const Context& ctx, const ActPtr& y) {
    return is_eta_reflexive(ctx, unit(ctx, y));
}

bool is_eta_reflexive(const Context&, const ActHom& unit_at_y) { return is_iso(unit_at_y); }

bool is_a_generated(const Context& ctx, const HomAct& hx, const ActHom& counit_at_x) {
    const bool by_counit = is_epi(counit_at_x);
    std::vector<char> hit(counit_at_x.target().size(), 0);
    for (const ActHom& h : hx.homs())
        for (Index v : h.map()) hit[v] = 1;
    bool covered = true;
    for (char c : hit)
        if (!c) covered = false;
    if (by_counit != covered)
        throw TheoremViolation("counit surjectivity disagrees with map images covering the object");
    return by_counit;
}

bool is_a_generated(const Context& ctx, const ActPtr& x) {
    const HomAct hx = hom_act(ctx, x);
    const TensorAct t = tensor_act(ctx, hx.underlying());
    return is_a_generated(ctx, hx, counit(ctx, hx, t));
}

bool is_a_cogenerated(const Context&, const ActHom& unit_at_y) { return is_mono(unit_at_y); }

bool is_a_cogenerated(const Context& ctx, const ActPtr& y) {
    return is_a_cogenerated(ctx, unit(ctx, y));
}

namespace {

EquivalenceCatalog build_h_catalog(const Context& ctx, const Universe& universe,
                                   const std::vector<HomAct>& hom_of_rep) {
    EquivalenceCatalog cat;
    cat.bound = universe.bound;
    cat.universe = universe;
    const Index n = static_cast<Index>(universe.representatives.size());
    for (Index t = 0; t < n; ++t)
        for (Index s = 0; s < n; ++s)
            for (const ActHom& h :
                 enumerate_homs(universe.representatives[s], universe.representatives[t]))
                if (is_iso(hom_on_morphism(ctx, h, hom_of_rep[s], hom_of_rep[t])))
                    cat.entries.push_back({s, t, h});
    return cat;
}

EquivalenceCatalog build_t_catalog(const Context& ctx, const Universe& universe,
                                   const std::vector<TensorAct>& tensor_of_rep) {
    EquivalenceCatalog cat;
    cat.bound = universe.bound;
    cat.universe = universe;
    const Index n = static_cast<Index>(universe.representatives.size());
    for (Index t = 0; t < n; ++t)
        for (Index s = 0; s < n; ++s)
            for (const ActHom& h :
                 enumerate_homs(universe.representatives[s], universe.representatives[t]))
                if (is_iso(tensor_on_morphism(ctx, h, tensor_of_rep[s], tensor_of_rep[t])))
                    cat.entries.push_back({s, t, h});
    return cat;
}

}  // namespace

EquivalenceCatalog equivalence_catalog(const Context& ctx, Index bound) {
    Universe universe = enumerate_universe(ctx.monoid(), bound);
    std::vector<HomAct> hom_of_rep;
    for (const ActPtr& rep : universe.representatives) hom_of_rep.push_back(hom_act(ctx, rep));
    return build_h_catalog(ctx, universe, hom_of_rep);
}

EquivalenceCatalog tensor_equivalence_catalog(const Context& ctx, Index bound) {
    Universe universe = enumerate_universe(ctx.endo_monoid(), bound);
    std::vector<TensorAct> tensor_of_rep;
    for (const ActPtr& rep : universe.representatives) tensor_of_rep.push_back(tensor_act(ctx, rep));
    return build_t_catalog(ctx, universe, tensor_of_rep);
}

ClassifyWorkspace make_workspace(const Context& ctx, Index bound) {
    ClassifyWorkspace ws;
    ws.bound = bound;
    ws.m_universe = enumerate_universe(ctx.monoid(), bound);
    ws.e_universe = enumerate_universe(ctx.endo_monoid(), bound);
    for (const ActPtr& rep : ws.m_universe.representatives) {
        HomAct hx = hom_act(ctx, rep);
        TensorAct t = tensor_act(ctx, hx.underlying());
        ws.counit_of_mrep.push_back(counit(ctx, hx, t));
        ws.hom_of_mrep.push_back(std::move(hx));
    }
    for (const ActPtr& rep : ws.e_universe.representatives) {
        TensorAct t = tensor_act(ctx, rep);
        HomAct h = hom_act(ctx, t.underlying());
        ws.unit_of_erep.push_back(unit(ctx, t, h));
        ws.tensor_of_erep.push_back(std::move(t));
        ws.hom_of_erep_tensor.push_back(std::move(h));
    }
    ws.h_catalog = build_h_catalog(ctx, ws.m_universe, ws.hom_of_mrep);
    ws.t_catalog = build_t_catalog(ctx, ws.e_universe, ws.tensor_of_erep);
    return ws;
}

Verdict bounded_colocal(const Context& ctx, const ClassifyWorkspace& ws, const ActPtr& x,
                        bool known_tensor_image) {
    const Universe& universe = ws.h_catalog.universe;
    std::vector<std::optional<std::vector<ActHom>>> cache(universe.representatives.size());
    auto maps_to = [&](Index r) -> const std::vector<ActHom>& {
        if (!cache[r]) cache[r] = enumerate_homs(x, universe.representatives[r]);
        return *cache[r];
    };
    std::optional<Witness> found;
    for (const EquivalenceCatalog::Entry& e : ws.h_catalog.entries) {
        if (!postcompose_bijective(maps_to(e.source), e.hom, maps_to(e.target))) {
            found = Witness{"postcompose-not-bijective",
                            {e.hom},
                            {x},
                            "catalog reps " + std::to_string(e.source) + " -> " +
                                std::to_string(e.target)};
            break;
        }
    }
    std::string certificate;
    if (is_delta_reflexive(ctx, x)) {
        certificate = "counit-iso";
    } else if (known_tensor_image) {
        certificate = "tensor-image";
    } else {
        for (const TensorAct& t : ws.tensor_of_erep)
            if (are_isomorphic(t.underlying(), x)) {
                certificate = "tensor-image";
                break;
            }
    }
    if (!certificate.empty() && found)
        throw TheoremViolation("certified object failed the equivalence transfer sweep");
    if (!certificate.empty()) return Verdict::yes(ws.bound, certificate);
    if (found) return Verdict::no(ws.bound, "catalog-counterexample", *found);
    return Verdict::unknown(ws.bound, "no-certificate-at-bound");
}

Verdict bounded_colocal(const Context& ctx, const ActPtr& x, Index bound) {
    return bounded_colocal(ctx, make_workspace(ctx, bound), x, false);
}

Verdict bounded_local(const Context& ctx, const ClassifyWorkspace& ws, const ActPtr& y,
                      bool known_hom_image) {
    const Universe& universe = ws.t_catalog.universe;
    std::vector<std::optional<std::vector<ActHom>>> cache(universe.representatives.size());
    auto maps_from = [&](Index r) -> const std::vector<ActHom>& {
        if (!cache[r]) cache[r] = enumerate_homs(universe.representatives[r], y);
        return *cache[r];
    };
    std::optional<Witness> found;
    for (const EquivalenceCatalog::Entry& e : ws.t_catalog.entries) {
        if (!precompose_bijective(maps_from(e.target), e.hom, maps_from(e.source))) {
            found = Witness{"precompose-not-bijective",
                            {e.hom},
                            {y},
                            "catalog reps " + std::to_string(e.source) + " -> " +
                                std::to_string(e.target)};
            break;
        }
    }
    std::string certificate;
    if (is_eta_reflexive(ctx, y)) {
        certificate = "unit-iso";
    } else if (known_hom_image) {
        certificate = "hom-image";
    } else {
        for (const HomAct& h : ws.hom_of_mrep)
            if (are_isomorphic(h.underlying(), y)) {
                certificate = "hom-image";
                break;
            }
    }
    if (!certificate.empty() && found)
        throw TheoremViolation("certified object failed the equivalence transfer sweep");
    if (!certificate.empty()) return Verdict::yes(ws.bound, certificate);
    if (found) return Verdict::no(ws.bound, "catalog-counterexample", *found);
    return Verdict::unknown(ws.bound, "no-certificate-at-bound");
}

Verdict bounded_local(const Context& ctx, const ActPtr& y, Index bound) {
    return bounded_local(ctx, make_workspace(ctx, bound), y, false);
}

bool is_indecomposable_small(const Context& ctx) {
    if (ctx.base()->size() == 0)
        throw DegenerateEmptyAct("indecomposability is undefined for the empty base act");
    const bool one_component = is_indecomposable(*ctx.base());
    const ActPtr e_reg = share(RightAct::regular(ctx.endo_monoid()));
    const ActPtr doubled = coproduct(ctx.endo_monoid(), {e_reg, e_reg}).act;
    const bool unit_invertible = is_eta_reflexive(ctx, doubled);
    if (one_component != unit_invertible)
        throw TheoremViolation(
            "component count disagrees with unit invertibility on the doubled regular act");
    return one_component;
}

Verdict weak_self_projective(const Context& ctx, const ClassifyWorkspace& ws) {
    std::optional<Witness> found;
    const std::vector<ActPtr>& reps = ws.e_universe.representatives;
    const Index n = static_cast<Index>(reps.size());
    // Epimorphisms between universe objects whose source has invertible unit.
    for (Index t = 0; t < n && !found; ++t) {
        for (Index s = 0; s < n && !found; ++s) {
            if (!is_iso(ws.unit_of_erep[s])) continue;
            for (const ActHom& g : enumerate_homs(reps[s], reps[t])) {
                if (!is_epi(g)) continue;
                const ActHom tg =
                    tensor_on_morphism(ctx, g, ws.tensor_of_erep[s], ws.tensor_of_erep[t]);
                const ActHom htg =
                    hom_on_morphism(ctx, tg, ws.hom_of_erep_tensor[s], ws.hom_of_erep_tensor[t]);
                if (!is_epi(htg)) {
                    found = Witness{"epi-image-not-epi",
                                    {g},
                                    {reps[s], reps[t]},
                                    "unit-invertible universe source, reps " + std::to_string(s) +
                                        " -> " + std::to_string(t)};
                    break;
                }
            }
        }
    }
    // Epimorphisms from finite free covers whose unit is invertible.
    if (!found) {
        struct FreeCover {
            ActPtr act;
            TensorAct tensor;
            HomAct hom;
            bool unit_invertible;
        };
        std::vector<FreeCover> covers;
        const ActPtr e_reg = share(RightAct::regular(ctx.endo_monoid()));
        std::vector<ActPtr> parts;
        for (Index k = 1; k <= ws.bound; ++k) {
            parts.push_back(e_reg);
            ActPtr free = coproduct(ctx.endo_monoid(), parts).act;
            TensorAct t_free = tensor_act(ctx, free);
            HomAct h_free = hom_act(ctx, t_free.underlying());
            const bool invertible = is_iso(unit(ctx, t_free, h_free));
            covers.push_back(
                FreeCover{std::move(free), std::move(t_free), std::move(h_free), invertible});
        }
        for (Index t = 0; t < n && !found; ++t) {
            for (const FreeCover& cover : covers) {
                if (!cover.unit_invertible) continue;
                for (const ActHom& g : enumerate_homs(cover.act, reps[t])) {
                    if (!is_epi(g)) continue;
                    const ActHom tg =
                        tensor_on_morphism(ctx, g, cover.tensor, ws.tensor_of_erep[t]);
                    const ActHom htg =
                        hom_on_morphism(ctx, tg, cover.hom, ws.hom_of_erep_tensor[t]);
                    if (!is_epi(htg)) {
                        found = Witness{"epi-image-not-epi",
                                        {g},
                                        {cover.act, reps[t]},
                                        "free cover of rank " +
                                            std::to_string(cover.act->size() /
                                                           std::max<Index>(1, e_reg->size())) +
                                            ", target rep " + std::to_string(t)};
                        break;
                    }
                }
                if (found) break;
            }
        }
    }
    const bool projective_base = is_projective(*ctx.base());
    if (projective_base && found)
        throw TheoremViolation(
            "projective base act admitted an epimorphism the composite functor failed to "
            "preserve");
    if (projective_base) return Verdict::yes(ws.bound, "projective-base");
    if (found) return Verdict::no(ws.bound, "sweep-counterexample", *found);
    return Verdict::unknown(ws.bound, "no-certificate-at-bound");
}

Verdict weak_self_projective(const Context& ctx, Index bound) {
    return weak_self_projective(ctx, make_workspace(ctx, bound));
}

Verdict pullback_flat(const Context& ctx, const ClassifyWorkspace& ws) {
    std::optional<Witness> found;
    const std::vector<ActPtr>& reps = ws.e_universe.representatives;
    const Index n = static_cast<Index>(reps.size());
    std::vector<std::vector<std::optional<std::vector<ActHom>>>> cache(
        n, std::vector<std::optional<std::vector<ActHom>>>(n));
    auto homs_between = [&](Index s, Index t) -> const std::vector<ActHom>& {
        if (!cache[s][t]) cache[s][t] = enumerate_homs(reps[s], reps[t]);
        return *cache[s][t];
    };
    for (Index t = 0; t < n && !found; ++t) {
        for (Index s1 = 0; s1 < n && !found; ++s1) {
            for (Index s2 = 0; s2 < n && !found; ++s2) {
                for (const ActHom& f : homs_between(s1, t)) {
                    for (const ActHom& g : homs_between(s2, t)) {
                        const PullbackResult p = pullback(f, g);
                        const TensorAct tp = tensor_act(ctx, p.act);
                        const ActHom tf = tensor_on_morphism(ctx, f, ws.tensor_of_erep[s1],
                                                             ws.tensor_of_erep[t]);
                        const ActHom tg = tensor_on_morphism(ctx, g, ws.tensor_of_erep[s2],
                                                             ws.tensor_of_erep[t]);
                        const PullbackResult q = pullback(tf, tg);
                        const ActHom tp1 =
                            tensor_on_morphism(ctx, p.proj1, tp, ws.tensor_of_erep[s1]);
                        const ActHom tp2 =
                            tensor_on_morphism(ctx, p.proj2, tp, ws.tensor_of_erep[s2]);
                        std::map<std::pair<Index, Index>, Index> position;
                        for (std::size_t i = 0; i < q.pairs.size(); ++i)
                            position[q.pairs[i]] = static_cast<Index>(i);
                        Row map(tp.underlying()->size());
                        for (Index c = 0; c < tp.underlying()->size(); ++c) {
                            auto it = position.find({tp1(c), tp2(c)});
                            if (it == position.end())
                                throw TheoremViolation("comparison cone missed the pullback");
                            map[c] = it->second;
                        }
                        std::optional<ActHom> theta;
                        try {
                            theta = ActHom::validate(tp.underlying(), q.act, std::move(map));
                        } catch (const Error&) {
                            throw TheoremViolation(
                                "canonical pullback comparison is not equivariant");
                        }
                        if (!is_iso(*theta)) {
                            found = Witness{"pullback-comparison-not-iso",
                                            {f, g},
                                            {},
                                            "cospan reps " + std::to_string(s1) + " -> " +
                                                std::to_string(t) + " <- " + std::to_string(s2)};
                            break;
                        }
                    }
                    if (found) break;
                }
            }
        }
    }
    const Biact& biact = ctx.biact();
    Grid left_action(biact.left_monoid()->size(), Row(biact.size()));
    for (Index e = 0; e < biact.left_monoid()->size(); ++e)
        for (Index a = 0; a < biact.size(); ++a) left_action[e][a] = biact.left_act(e, a);
    const LeftAct left = LeftAct::validate(biact.left_monoid(), std::move(left_action));
    const bool left_projective = is_projective(left.as_right_over_opposite());
    if (left_projective && found)
        throw TheoremViolation(
            "projective left act over the endomorphisms failed pullback preservation");
    if (left_projective) return Verdict::yes(ws.bound, "left-act-projective");
    if (found) return Verdict::no(ws.bound, "sweep-counterexample", *found);
    return Verdict::unknown(ws.bound, "no-certificate-at-bound");
}

Verdict pullback_flat(const Context& ctx, Index bound) {
    return pullback_flat(ctx, make_workspace(ctx, bound));
}

}  // namespace actkit
