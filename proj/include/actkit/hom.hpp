#pragma once

#include <memory>
#include <vector>

#include "actkit/act.hpp"

namespace actkit {

using ActPtr = std::shared_ptr<const RightAct>;

ActPtr share(RightAct act);

// Equivariant map between right acts over the same monoid.
// map()[x] is the image of x; source and target are shared so that large
// hom lists stay cheap to copy.
class ActHom {
public:
    static ActHom validate(ActPtr source, ActPtr target, Row map);
    static ActHom identity(ActPtr act);

    const RightAct& source() const { return *source_; }
    const RightAct& target() const { return *target_; }
    const ActPtr& source_ptr() const { return source_; }
    const ActPtr& target_ptr() const { return target_; }
    const Row& map() const { return map_; }
    Index operator()(Index x) const { return map_[x]; }

    bool operator==(const ActHom& other) const {
        return map_ == other.map_ && source() == other.source() && target() == other.target();
    }

private:
    ActHom(ActPtr source, ActPtr target, Row map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

    ActPtr source_;
    ActPtr target_;
    Row map_;
};

// Surjective on the carrier. In this category every epimorphism is onto.
bool is_epi(const ActHom& f);
bool is_mono(const ActHom& f);
// Bijective homs are exactly the isomorphisms here.
bool is_iso(const ActHom& f);

// g after f; the middle acts must be equal.
ActHom compose(const ActHom& g, const ActHom& f);

ActHom inverse(const ActHom& f);

// f = mono after epi through the image subact of the target.
struct ImageFactorization {
    ActHom epi;
    RightAct image;
    ActHom mono;
};

ImageFactorization image_factorize(const ActHom& f);

}  // namespace actkit
