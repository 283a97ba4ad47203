#pragma once

#include <vector>

#include "actkit/hom.hpp"

namespace actkit {

struct CoproductResult {
    ActPtr act;
    std::vector<ActHom> injections;
    std::vector<Index> offsets;  // start of each part in the disjoint union
};

CoproductResult coproduct(const MonoidPtr& monoid, const std::vector<ActPtr>& parts);

struct CoequalizerResult {
    ActPtr act;
    ActHom projection;           // target of f,g onto the quotient
    std::vector<Index> class_of;  // per target element
};

CoequalizerResult coequalizer(const ActHom& f, const ActHom& g);

struct ProductResult {
    ActPtr act;
    std::vector<ActHom> projections;
    std::vector<Row> tuples;  // carrier element -> one index per factor
};

// Empty factor list gives the one-point act; any empty factor gives the
// empty act.
ProductResult product(const MonoidPtr& monoid, const std::vector<ActPtr>& parts);

struct EqualizerResult {
    ActPtr act;
    ActHom inclusion;
};

EqualizerResult equalizer(const ActHom& f, const ActHom& g);

struct PullbackResult {
    ActPtr act;
    ActHom proj1;
    ActHom proj2;
    std::vector<std::pair<Index, Index>> pairs;
};

PullbackResult pullback(const ActHom& f, const ActHom& g);

// Smallest act congruence containing the given pairs: reflexive, symmetric,
// transitive and closed under the action. Classes are numbered by least
// member.
std::vector<Index> act_congruence_classes(const RightAct& x,
                                          const std::vector<std::pair<Index, Index>>& pairs);

struct QuotientResult {
    ActPtr act;
    ActHom projection;
    std::vector<Index> class_of;
};

QuotientResult quotient_act(const ActPtr& x, const std::vector<std::pair<Index, Index>>& pairs);

}  // namespace actkit
