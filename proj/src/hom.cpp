#include "actkit/hom.hpp"

#include <algorithm>

#include "actkit/errors.hpp"

namespace actkit {

ActPtr share(RightAct act) { return std::make_shared<const RightAct>(std::move(act)); }

ActHom ActHom::validate(ActPtr source, ActPtr target, Row map) {
    if (!source || !target) throw Error("hom needs source and target");
    if (!same_monoid(source->monoid(), target->monoid()))
        throw MonoidMismatch("hom endpoints live over different monoids");
    if (static_cast<Index>(map.size()) != source->size())
        throw HomAxiomViolation("hom map has wrong length");
    for (Index x = 0; x < source->size(); ++x) {
        if (map[x] < 0 || map[x] >= target->size())
            throw HomAxiomViolation("hom image of " + std::to_string(x) + " out of range");
    }
    const Index n = source->monoid()->size();
    for (Index x = 0; x < source->size(); ++x)
        for (Index m = 0; m < n; ++m)
            if (map[source->act(x, m)] != target->act(map[x], m))
                throw HomAxiomViolation("equivariance fails at (" + std::to_string(x) + ", " +
                                        std::to_string(m) + ")");
    return ActHom(std::move(source), std::move(target), std::move(map));
}

ActHom ActHom::identity(ActPtr act) {
    Row map(act->size());
    for (Index x = 0; x < act->size(); ++x) map[x] = x;
    return ActHom(act, act, std::move(map));
}

bool is_epi(const ActHom& f) {
    std::vector<char> hit(f.target().size(), 0);
    for (Index y : f.map()) hit[y] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_mono(const ActHom& f) {
    std::vector<char> hit(f.target().size(), 0);
    for (Index y : f.map()) {
        if (hit[y]) return false;
        hit[y] = 1;
    }
    return true;
}

bool is_iso(const ActHom& f) {
    return f.source().size() == f.target().size() && is_mono(f);
}

ActHom compose(const ActHom& g, const ActHom& f) {
    if (!(f.target() == g.source()))
        throw HomAxiomViolation("composition endpoints do not match");
    Row map(f.source().size());
    for (Index x = 0; x < f.source().size(); ++x) map[x] = g.map()[f.map()[x]];
    return ActHom::validate(f.source_ptr(), g.target_ptr(), std::move(map));
}

ActHom inverse(const ActHom& f) {
    if (!is_iso(f)) throw HomAxiomViolation("only isomorphisms invert");
    Row map(f.target().size());
    for (Index x = 0; x < f.source().size(); ++x) map[f.map()[x]] = x;
    return ActHom::validate(f.target_ptr(), f.source_ptr(), std::move(map));
}

ImageFactorization image_factorize(const ActHom& f) {
    std::vector<Index> carrier;
    {
        std::vector<char> hit(f.target().size(), 0);
        for (Index y : f.map()) hit[y] = 1;
        for (Index y = 0; y < f.target().size(); ++y)
            if (hit[y]) carrier.push_back(y);
    }
    RightAct image = subact(f.target(), carrier);
    std::vector<Index> pos(f.target().size(), -1);
    for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<Index>(i);
    ActPtr image_ptr = share(image);
    Row epi_map(f.source().size());
    for (Index x = 0; x < f.source().size(); ++x) epi_map[x] = pos[f.map()[x]];
    Row mono_map(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) mono_map[i] = carrier[i];
    return ImageFactorization{
        ActHom::validate(f.source_ptr(), image_ptr, std::move(epi_map)),
        std::move(image),
        ActHom::validate(image_ptr, f.target_ptr(), std::move(mono_map)),
    };
}

}  // namespace actkit
