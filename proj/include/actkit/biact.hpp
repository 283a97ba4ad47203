#pragma once

#include "actkit/act.hpp"

namespace actkit {

// Carrier with a left action by one monoid and a right action by another,
// the two commuting: (e*a)*m = e*(a*m).
class Biact {
public:
    static Biact validate(MonoidPtr left_monoid, Grid left_action, RightAct right);

    Index size() const { return right_.size(); }
    const MonoidPtr& left_monoid() const { return left_monoid_; }
    const RightAct& right() const { return right_; }
    Index left_act(Index e, Index a) const { return left_action_[e][a]; }
    Index right_act(Index a, Index m) const { return right_.act(a, m); }

private:
    Biact(MonoidPtr left_monoid, Grid left_action, RightAct right)
        : left_monoid_(std::move(left_monoid)),
          left_action_(std::move(left_action)),
          right_(std::move(right)) {}

    MonoidPtr left_monoid_;
    Grid left_action_;
    RightAct right_;
};

}  // namespace actkit
