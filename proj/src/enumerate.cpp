#include "actkit/enumerate.hpp"

#include <algorithm>
#include <map>

#include "actkit/errors.hpp"

namespace actkit {

namespace {

// Pattern of a row up to renaming: [5,5,7] and [2,2,0] both become [0,0,1].
Row normalized_row(const RightAct& act, Index x) {
    Row out(act.monoid()->size());
    std::map<Index, Index> seen;
    for (Index m = 0; m < act.monoid()->size(); ++m) {
        const Index y = act.act(x, m);
        auto [it, fresh] = seen.insert({y, static_cast<Index>(seen.size())});
        out[m] = it->second;
    }
    return out;
}

// t can receive g only if whenever g*m = g*n also t*m = t*n.
bool pattern_refines(const RightAct& source, Index g, const RightAct& target, Index t) {
    const Index n = source.monoid()->size();
    for (Index m = 0; m < n; ++m)
        for (Index k = m + 1; k < n; ++k)
            if (source.act(g, m) == source.act(g, k) && target.act(t, m) != target.act(t, k))
                return false;
    return true;
}

struct HomSearch {
    const RightAct& source;
    const RightAct& target;
    bool injective;
    std::vector<Index> gens;
    std::vector<std::vector<Index>> candidates;  // per generator, pattern-filtered
    Row image;
    std::vector<char> used;
    std::vector<Index> trail;
    std::vector<Row> results;
    std::size_t limit;

    HomSearch(const RightAct& source_, const RightAct& target_, bool injective_,
              std::size_t limit_)
        : source(source_),
          target(target_),
          injective(injective_),
          gens(source_.generating_elements()),
          image(source_.size(), -1),
          used(target_.size(), 0),
          limit(limit_) {
        candidates.resize(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (Index t = 0; t < target.size(); ++t)
                if (pattern_refines(source, gens[i], target, t)) candidates[i].push_back(t);
    }

    // Forces image[g] = t and propagates along the action; false on conflict.
    bool assign(Index g, Index t) {
        std::vector<std::pair<Index, Index>> work{{g, t}};
        while (!work.empty()) {
            auto [x, y] = work.back();
            work.pop_back();
            if (image[x] != -1) {
                if (image[x] != y) return false;
                continue;
            }
            if (injective && used[y]) return false;
            image[x] = y;
            used[y] = 1;
            trail.push_back(x);
            for (Index m = 0; m < source.monoid()->size(); ++m)
                work.push_back({source.act(x, m), target.act(y, m)});
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            const Index x = trail.back();
            trail.pop_back();
            used[image[x]] = 0;
            image[x] = -1;
        }
    }

    void run(std::size_t level) {
        if (results.size() >= limit) return;
        if (level == gens.size()) {
            results.push_back(image);
            return;
        }
        for (Index t : candidates[level]) {
            const std::size_t mark = trail.size();
            if (assign(gens[level], t)) run(level + 1);
            undo_to(mark);
            if (results.size() >= limit) return;
        }
    }
};

std::vector<Row> hom_maps(const RightAct& source, const RightAct& target, bool injective,
                          std::size_t limit) {
    if (source.size() == 0) return {Row{}};
    if (target.size() == 0) return {};
    HomSearch search(source, target, injective, limit);
    search.run(0);
    std::sort(search.results.begin(), search.results.end());
    return std::move(search.results);
}

constexpr std::size_t kNoLimit = static_cast<std::size_t>(-1);

}  // namespace

std::vector<ActHom> enumerate_homs(const ActPtr& source, const ActPtr& target) {
    if (!same_monoid(source->monoid(), target->monoid()))
        throw MonoidMismatch("hom enumeration needs one monoid");
    std::vector<ActHom> out;
    for (Row& map : hom_maps(*source, *target, false, kNoLimit))
        out.push_back(ActHom::validate(source, target, std::move(map)));
    return out;
}

std::size_t count_homs(const ActPtr& source, const ActPtr& target) {
    if (!same_monoid(source->monoid(), target->monoid()))
        throw MonoidMismatch("hom enumeration needs one monoid");
    return hom_maps(*source, *target, false, kNoLimit).size();
}

namespace {

bool same_shape(const RightAct& a, const RightAct& b) {
    if (a.size() != b.size()) return false;
    std::vector<Row> pa, pb;
    for (Index x = 0; x < a.size(); ++x) pa.push_back(normalized_row(a, x));
    for (Index x = 0; x < b.size(); ++x) pb.push_back(normalized_row(b, x));
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
}

}  // namespace

std::optional<ActHom> are_isomorphic(const ActPtr& a, const ActPtr& b) {
    if (!same_monoid(a->monoid(), b->monoid()))
        throw MonoidMismatch("iso test needs one monoid");
    if (!same_shape(*a, *b)) return std::nullopt;
    // Injective and total with equal finite sizes means bijective, and
    // bijective homs are isomorphisms here.
    std::vector<Row> maps = hom_maps(*a, *b, true, 1);
    for (Row& map : maps) {
        ActHom h = ActHom::validate(a, b, std::move(map));
        if (is_iso(h)) return h;
    }
    return std::nullopt;
}

std::vector<ActHom> enumerate_isos(const ActPtr& a, const ActPtr& b) {
    if (!same_monoid(a->monoid(), b->monoid()))
        throw MonoidMismatch("iso enumeration needs one monoid");
    std::vector<ActHom> out;
    if (a->size() != b->size()) return out;
    for (Row& map : hom_maps(*a, *b, true, kNoLimit)) {
        ActHom h = ActHom::validate(a, b, std::move(map));
        if (is_iso(h)) out.push_back(std::move(h));
    }
    return out;
}

bool is_generator(const RightAct& x) {
    if (x.size() == 0) return false;
    const ActPtr reg = share(RightAct::regular(x.monoid()));
    bool identity_hit = false;
    for (const RightAct& component : connected_components(x)) {
        const ActPtr piece = share(component);
        const std::vector<ActHom> homs = enumerate_homs(piece, reg);
        if (homs.empty()) return false;
        for (const ActHom& h : homs)
            for (Index y : h.map())
                if (y == x.monoid()->identity()) identity_hit = true;
    }
    return identity_hit;
}

bool is_projective(const RightAct& x) {
    const Monoid& m = *x.monoid();
    const RightAct reg = RightAct::regular(x.monoid());
    std::vector<ActPtr> principal;
    for (Index e : m.idempotents()) principal.push_back(share(subact(reg, reg.orbit(e))));
    for (const RightAct& component : connected_components(x)) {
        const ActPtr piece = share(component);
        bool matched = false;
        for (const ActPtr& em : principal)
            if (are_isomorphic(piece, em)) {
                matched = true;
                break;
            }
        if (!matched) return false;
    }
    return true;
}

}  // namespace actkit
