#pragma once

#include <vector>

#include "actkit/biact.hpp"
#include "actkit/enumerate.hpp"

namespace actkit {

// A monoid M together with a chosen right M-act A, plus everything derived
// from the pair once and shared: the endomorphism monoid E of A (elements
// are the endomorphisms of A in lexicographic map order, product e*f is
// composition, e after f) and the left-E right-M structure on A given by
// applying endomorphisms.
class Context {
public:
    static Context make(MonoidPtr monoid, RightAct base);

    const MonoidPtr& monoid() const { return monoid_; }
    const ActPtr& base() const { return base_; }
    const MonoidPtr& endo_monoid() const { return endo_monoid_; }
    const std::vector<ActHom>& endos() const { return endos_; }
    const Biact& biact() const { return *biact_; }

private:
    Context() = default;

    MonoidPtr monoid_;
    ActPtr base_;
    MonoidPtr endo_monoid_;
    std::vector<ActHom> endos_;
    std::shared_ptr<const Biact> biact_;
};

Context make_context(MonoidPtr monoid, RightAct base);

// The act of maps A -> X, a right act over E by precomposition: h*e is
// h after the endomorphism e. Carrier order is the lexicographic hom order.
class HomAct {
public:
    HomAct(ActPtr underlying, std::vector<ActHom> homs, ActPtr target);

    const ActPtr& underlying() const { return underlying_; }
    const std::vector<ActHom>& homs() const { return homs_; }
    const ActPtr& target() const { return target_; }

    // Position of the hom with this map; throws if absent.
    Index index_of(const Row& map) const;

private:
    ActPtr underlying_;
    std::vector<ActHom> homs_;
    ActPtr target_;
};

HomAct hom_act(const Context& ctx, const ActPtr& x);

// The balanced product of a right E-act Y with A: pairs (y, a) identified
// by (y*e, a) ~ (y, e*a), a right M-act through the A coordinate. Classes
// are numbered by least flat pair index y*|A|+a.
class TensorAct {
public:
    TensorAct(ActPtr underlying, std::vector<Index> class_of_flat,
              std::vector<std::pair<Index, Index>> representatives, ActPtr source, Index a_size);

    const ActPtr& underlying() const { return underlying_; }
    Index class_of(Index y, Index a) const { return class_of_flat_[y * a_size_ + a]; }
    const std::vector<std::pair<Index, Index>>& representatives() const {
        return representatives_;
    }
    const ActPtr& source() const { return source_; }
    Index y_size() const { return source_->size(); }
    Index a_size() const { return a_size_; }

private:
    ActPtr underlying_;
    std::vector<Index> class_of_flat_;
    std::vector<std::pair<Index, Index>> representatives_;
    ActPtr source_;
    Index a_size_;
};

TensorAct tensor_act(const Context& ctx, const ActPtr& y);

// Post-composition on map acts: sends h to f after h.
ActHom hom_on_morphism(const Context& ctx, const ActHom& f);
ActHom hom_on_morphism(const Context& ctx, const ActHom& f, const HomAct& source_act,
                       const HomAct& target_act);

// First-coordinate pushforward on balanced products: [y, a] to [u(y), a].
ActHom tensor_on_morphism(const Context& ctx, const ActHom& u);
ActHom tensor_on_morphism(const Context& ctx, const ActHom& u, const TensorAct& source_act,
                          const TensorAct& target_act);

// y maps to the hom sending a to [y, a].
ActHom unit(const Context& ctx, const ActPtr& y);
ActHom unit(const Context& ctx, const TensorAct& ty, const HomAct& h_of_ty);

// [h, a] maps to h(a).
ActHom counit(const Context& ctx, const ActPtr& x);
ActHom counit(const Context& ctx, const HomAct& hx, const TensorAct& t_of_hx);

// Both triangle identities at the given objects.
bool check_triangles(const Context& ctx, const ActPtr& x, const ActPtr& y);

// The natural bijection between maps T(Y) -> X and maps Y -> H(X), as
// index translations between the two (lexicographically ordered) hom lists.
struct AdjunctionBijection {
    std::vector<ActHom> tensor_side;  // maps T(Y) -> X over M
    std::vector<ActHom> hom_side;     // maps Y -> H(X) over E
    std::vector<Index> forward;       // tensor_side position -> hom_side position
    std::vector<Index> backward;
};

AdjunctionBijection adjunction_bijection(const Context& ctx, const ActPtr& x, const ActPtr& y);

}  // namespace actkit
