#include "actkit/limits.hpp"

#include <algorithm>
#include <numeric>

#include "actkit/errors.hpp"

namespace actkit {

namespace {

struct Dsu {
    std::vector<Index> parent;
    explicit Dsu(Index n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    Index find(Index x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

// Classes numbered by least member, as a dense relabeling of DSU roots.
std::vector<Index> roots_to_classes(Dsu& dsu) {
    const Index n = static_cast<Index>(dsu.parent.size());
    std::vector<Index> id(n, -1);
    Index next = 0;
    for (Index x = 0; x < n; ++x) {
        const Index root = dsu.find(x);
        if (id[root] == -1) id[root] = next++;
        id[x] = id[root];
    }
    return id;
}

}  // namespace

CoproductResult coproduct(const MonoidPtr& monoid, const std::vector<ActPtr>& parts) {
    Index total = 0;
    std::vector<Index> offsets;
    for (const ActPtr& p : parts) {
        if (!same_monoid(p->monoid(), monoid))
            throw MonoidMismatch("coproduct parts live over different monoids");
        offsets.push_back(total);
        total += p->size();
    }
    Grid action(total, Row(monoid->size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Index x = 0; x < parts[i]->size(); ++x)
            for (Index m = 0; m < monoid->size(); ++m)
                action[offsets[i] + x][m] = offsets[i] + parts[i]->act(x, m);
    ActPtr act = share(RightAct::validate(monoid, std::move(action)));
    std::vector<ActHom> injections;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Row map(parts[i]->size());
        for (Index x = 0; x < parts[i]->size(); ++x) map[x] = offsets[i] + x;
        injections.push_back(ActHom::validate(parts[i], act, std::move(map)));
    }
    return CoproductResult{act, std::move(injections), std::move(offsets)};
}

CoequalizerResult coequalizer(const ActHom& f, const ActHom& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw NotParallel("coequalizer needs parallel maps");
    std::vector<std::pair<Index, Index>> pairs;
    for (Index x = 0; x < f.source().size(); ++x) pairs.push_back({f.map()[x], g.map()[x]});
    QuotientResult q = quotient_act(f.target_ptr(), pairs);
    return CoequalizerResult{q.act, std::move(q.projection), std::move(q.class_of)};
}

ProductResult product(const MonoidPtr& monoid, const std::vector<ActPtr>& parts) {
    for (const ActPtr& p : parts)
        if (!same_monoid(p->monoid(), monoid))
            throw MonoidMismatch("product parts live over different monoids");
    for (const ActPtr& p : parts)
        if (p->size() == 0) {
            ActPtr empty = share(RightAct::empty(monoid));
            std::vector<ActHom> projections;
            for (const ActPtr& q : parts) projections.push_back(ActHom::validate(empty, q, {}));
            return ProductResult{empty, std::move(projections), {}};
        }
    // Tuples in lexicographic order; the empty factor list gives one tuple.
    std::vector<Row> tuples{Row{}};
    for (const ActPtr& p : parts) {
        std::vector<Row> next;
        for (const Row& t : tuples)
            for (Index x = 0; x < p->size(); ++x) {
                Row ext = t;
                ext.push_back(x);
                next.push_back(std::move(ext));
            }
        tuples = std::move(next);
    }
    std::vector<Index> strides(parts.size(), 1);
    for (std::size_t i = parts.size(); i-- > 1;)
        strides[i - 1] = strides[i] * parts[i]->size();
    auto flat = [&](const Row& t) {
        Index out = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) out += strides[i] * t[i];
        return out;
    };
    Grid action(tuples.size(), Row(monoid->size()));
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (Index m = 0; m < monoid->size(); ++m) {
            Row moved(parts.size());
            for (std::size_t j = 0; j < parts.size(); ++j)
                moved[j] = parts[j]->act(tuples[i][j], m);
            action[i][m] = flat(moved);
        }
    ActPtr act = share(RightAct::validate(monoid, std::move(action)));
    std::vector<ActHom> projections;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        Row map(tuples.size());
        for (std::size_t i = 0; i < tuples.size(); ++i) map[i] = tuples[i][j];
        projections.push_back(ActHom::validate(act, parts[j], std::move(map)));
    }
    return ProductResult{act, std::move(projections), std::move(tuples)};
}

EqualizerResult equalizer(const ActHom& f, const ActHom& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw NotParallel("equalizer needs parallel maps");
    std::vector<Index> carrier;
    for (Index x = 0; x < f.source().size(); ++x)
        if (f.map()[x] == g.map()[x]) carrier.push_back(x);
    ActPtr sub = share(subact(f.source(), carrier));
    Row map(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) map[i] = carrier[i];
    return EqualizerResult{sub, ActHom::validate(sub, f.source_ptr(), std::move(map))};
}

PullbackResult pullback(const ActHom& f, const ActHom& g) {
    if (!(f.target() == g.target())) throw TargetMismatch("pullback needs a shared target");
    ProductResult prod = product(f.source().monoid(), {f.source_ptr(), g.source_ptr()});
    std::vector<Index> carrier;
    for (std::size_t i = 0; i < prod.tuples.size(); ++i)
        if (f.map()[prod.tuples[i][0]] == g.map()[prod.tuples[i][1]])
            carrier.push_back(static_cast<Index>(i));
    ActPtr act = share(subact(*prod.act, carrier));
    std::vector<std::pair<Index, Index>> pairs;
    Row map1(carrier.size()), map2(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        const Row& t = prod.tuples[carrier[i]];
        pairs.push_back({t[0], t[1]});
        map1[i] = t[0];
        map2[i] = t[1];
    }
    return PullbackResult{act, ActHom::validate(act, f.source_ptr(), std::move(map1)),
                          ActHom::validate(act, g.source_ptr(), std::move(map2)),
                          std::move(pairs)};
}

std::vector<Index> act_congruence_classes(const RightAct& x,
                                          const std::vector<std::pair<Index, Index>>& pairs) {
    Dsu dsu(x.size());
    // Worklist closure: whenever a and b merge, a*m and b*m must merge too.
    std::vector<std::pair<Index, Index>> work;
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= x.size() || b < 0 || b >= x.size())
            throw Error("congruence pair out of range");
        if (dsu.unite(a, b)) work.push_back({a, b});
    }
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        for (Index m = 0; m < x.monoid()->size(); ++m) {
            const Index am = x.act(a, m);
            const Index bm = x.act(b, m);
            if (dsu.unite(am, bm)) work.push_back({am, bm});
        }
    }
    return roots_to_classes(dsu);
}

QuotientResult quotient_act(const ActPtr& x, const std::vector<std::pair<Index, Index>>& pairs) {
    std::vector<Index> class_of = act_congruence_classes(*x, pairs);
    const Index count = x->size() == 0 ? 0 : 1 + *std::max_element(class_of.begin(), class_of.end());
    Grid action(count, Row(x->monoid()->size()));
    std::vector<Index> rep(count, -1);
    for (Index a = 0; a < x->size(); ++a)
        if (rep[class_of[a]] == -1) rep[class_of[a]] = a;
    for (Index c = 0; c < count; ++c)
        for (Index m = 0; m < x->monoid()->size(); ++m)
            action[c][m] = class_of[x->act(rep[c], m)];
    ActPtr act = share(RightAct::validate(x->monoid(), std::move(action)));
    Row map = class_of;
    return QuotientResult{act, ActHom::validate(x, act, std::move(map)), std::move(class_of)};
}

}  // namespace actkit
