#pragma once

#include <optional>
#include <vector>

#include "actkit/monoid.hpp"

namespace actkit {

// Finite right act over a finite monoid: a set {0..size-1} with
// action()[x][m] = x * m satisfying x*1 = x and (x*m)*n = x*(m n).
// The empty act (size 0) is legal.
class RightAct {
public:
    static RightAct validate(MonoidPtr monoid, Grid action);

    // The monoid acting on itself by right multiplication.
    static RightAct regular(MonoidPtr monoid);
    static RightAct empty(MonoidPtr monoid);
    // One-point act: the unique action on a singleton.
    static RightAct point(MonoidPtr monoid);

    Index size() const { return static_cast<Index>(action_.size()); }
    Index act(Index x, Index m) const { return action_[x][m]; }
    const MonoidPtr& monoid() const { return monoid_; }
    const Grid& action() const { return action_; }

    bool operator==(const RightAct& other) const {
        return action_ == other.action_ && same_monoid(monoid_, other.monoid_);
    }

    // {x*m : m in M}, sorted. Complete by closure of the monoid table.
    std::vector<Index> orbit(Index x) const;

    // Minimal-by-inclusion greedy set whose orbits cover the carrier.
    std::vector<Index> generating_elements() const;

private:
    RightAct(MonoidPtr monoid, Grid action)
        : monoid_(std::move(monoid)), action_(std::move(action)) {}

    MonoidPtr monoid_;
    Grid action_;
};

// Finite left act: action()[m][x] = m * x with 1*x = x and m*(n*x) = (m n)*x.
class LeftAct {
public:
    static LeftAct validate(MonoidPtr monoid, Grid action);

    Index size() const { return size_; }
    Index act(Index m, Index x) const { return action_[m][x]; }
    const MonoidPtr& monoid() const { return monoid_; }
    const Grid& action() const { return action_; }

    // The same carrier as a right act over the opposite monoid.
    RightAct as_right_over_opposite() const;

private:
    LeftAct(MonoidPtr monoid, Grid action, Index size)
        : monoid_(std::move(monoid)), action_(std::move(action)), size_(size) {}

    MonoidPtr monoid_;
    Grid action_;
    Index size_;
};

// Partition of the carrier into connected components (x ~ x*m closure).
// Returns component id per element, ids numbered by least member.
std::vector<Index> component_partition(const RightAct& x);

// Sorted carriers of the connected components.
std::vector<std::vector<Index>> component_carriers(const RightAct& x);

// The connected components themselves, as acts, ordered by least member.
std::vector<RightAct> connected_components(const RightAct& x);

bool is_indecomposable(const RightAct& x);

// Subact on `carrier` (must be sorted, closed under the action).
RightAct subact(const RightAct& x, const std::vector<Index>& carrier);

bool is_cyclic(const RightAct& x);

}  // namespace actkit
