#include "actkit/act.hpp"

#include <algorithm>
#include <numeric>

#include "actkit/errors.hpp"

namespace actkit {

RightAct RightAct::validate(MonoidPtr monoid, Grid action) {
    if (!monoid) throw Error("act needs a monoid");
    const Index n = monoid->size();
    const Index sz = static_cast<Index>(action.size());
    for (Index x = 0; x < sz; ++x) {
        if (static_cast<Index>(action[x].size()) != n)
            throw ActAxiomViolation("act row " + std::to_string(x) + " has wrong length");
        for (Index m = 0; m < n; ++m) {
            const Index y = action[x][m];
            if (y < 0 || y >= sz)
                throw ActAxiomViolation("act entry (" + std::to_string(x) + ", " +
                                        std::to_string(m) + ") out of range");
        }
    }
    for (Index x = 0; x < sz; ++x) {
        if (action[x][monoid->identity()] != x)
            throw ActAxiomViolation("identity does not fix element " + std::to_string(x));
        for (Index m = 0; m < n; ++m)
            for (Index k = 0; k < n; ++k)
                if (action[action[x][m]][k] != action[x][monoid->mul(m, k)])
                    throw ActAxiomViolation("action law fails at (" + std::to_string(x) + ", " +
                                            std::to_string(m) + ", " + std::to_string(k) + ")");
    }
    return RightAct(std::move(monoid), std::move(action));
}

RightAct RightAct::regular(MonoidPtr monoid) {
    Grid action = monoid->table();
    return RightAct(std::move(monoid), std::move(action));
}

RightAct RightAct::empty(MonoidPtr monoid) { return RightAct(std::move(monoid), {}); }

RightAct RightAct::point(MonoidPtr monoid) {
    Grid action(1, Row(monoid->size(), 0));
    return RightAct(std::move(monoid), std::move(action));
}

std::vector<Index> RightAct::orbit(Index x) const {
    std::vector<Index> out(action_[x]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Index> RightAct::generating_elements() const {
    std::vector<char> covered(size(), 0);
    std::vector<Index> gens;
    // Greedy max-coverage over the not-yet-covered part.
    while (true) {
        Index best = -1;
        int best_gain = 0;
        for (Index x = 0; x < size(); ++x) {
            if (covered[x]) continue;
            int gain = 0;
            for (Index y : orbit(x))
                if (!covered[y]) ++gain;
            if (gain > best_gain) {
                best = x;
                best_gain = gain;
            }
        }
        if (best == -1) break;
        gens.push_back(best);
        for (Index y : orbit(best)) covered[y] = 1;
    }
    // Drop any generator whose orbit the others already cover.
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<char> rest(size(), 0);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j == i) continue;
            for (Index y : orbit(gens[j])) rest[y] = 1;
        }
        bool redundant = true;
        for (Index y : orbit(gens[i]))
            if (!rest[y]) redundant = false;
        if (redundant)
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

LeftAct LeftAct::validate(MonoidPtr monoid, Grid action) {
    if (!monoid) throw Error("act needs a monoid");
    const Index n = monoid->size();
    if (static_cast<Index>(action.size()) != n)
        throw ActAxiomViolation("left act needs one row per monoid element");
    const Index sz = n == 0 ? 0 : static_cast<Index>(action[0].size());
    for (Index m = 0; m < n; ++m) {
        if (static_cast<Index>(action[m].size()) != sz)
            throw ActAxiomViolation("left act rows have inconsistent lengths");
        for (Index x = 0; x < sz; ++x) {
            const Index y = action[m][x];
            if (y < 0 || y >= sz)
                throw ActAxiomViolation("left act entry (" + std::to_string(m) + ", " +
                                        std::to_string(x) + ") out of range");
        }
    }
    for (Index x = 0; x < sz; ++x)
        if (action[monoid->identity()][x] != x)
            throw ActAxiomViolation("identity does not fix element " + std::to_string(x));
    for (Index m = 0; m < n; ++m)
        for (Index k = 0; k < n; ++k)
            for (Index x = 0; x < sz; ++x)
                if (action[m][action[k][x]] != action[monoid->mul(m, k)][x])
                    throw ActAxiomViolation("left action law fails at (" + std::to_string(m) +
                                            ", " + std::to_string(k) + ", " + std::to_string(x) +
                                            ")");
    return LeftAct(std::move(monoid), std::move(action), sz);
}

RightAct LeftAct::as_right_over_opposite() const {
    auto opp = std::make_shared<const Monoid>(monoid_->opposite());
    Grid action(size_, Row(monoid_->size()));
    for (Index x = 0; x < size_; ++x)
        for (Index m = 0; m < monoid_->size(); ++m) action[x][m] = action_[m][x];
    return RightAct::validate(std::move(opp), std::move(action));
}

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
    void unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

std::vector<Index> component_partition(const RightAct& x) {
    Dsu dsu(x.size());
    for (Index a = 0; a < x.size(); ++a)
        for (Index m = 0; m < x.monoid()->size(); ++m) dsu.unite(a, x.act(a, m));
    std::vector<Index> id(x.size(), -1);
    Index next = 0;
    for (Index a = 0; a < x.size(); ++a) {
        const Index root = dsu.find(a);
        if (id[root] == -1) id[root] = next++;
        id[a] = id[root];
    }
    return id;
}

std::vector<std::vector<Index>> component_carriers(const RightAct& x) {
    const std::vector<Index> id = component_partition(x);
    const Index count = x.size() == 0 ? 0 : 1 + *std::max_element(id.begin(), id.end());
    std::vector<std::vector<Index>> out(count);
    for (Index a = 0; a < x.size(); ++a) out[id[a]].push_back(a);
    return out;
}

std::vector<RightAct> connected_components(const RightAct& x) {
    std::vector<RightAct> out;
    for (const std::vector<Index>& carrier : component_carriers(x)) out.push_back(subact(x, carrier));
    return out;
}

bool is_indecomposable(const RightAct& x) {
    if (x.size() == 0) return false;
    const std::vector<Index> id = component_partition(x);
    return *std::max_element(id.begin(), id.end()) == 0;
}

RightAct subact(const RightAct& x, const std::vector<Index>& carrier) {
    std::vector<Index> pos(x.size(), -1);
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        const Index a = carrier[i];
        if (a < 0 || a >= x.size()) throw Error("subact carrier element out of range");
        if (i > 0 && carrier[i - 1] >= a) throw Error("subact carrier must be sorted and unique");
        pos[a] = static_cast<Index>(i);
    }
    Grid action(carrier.size(), Row(x.monoid()->size()));
    for (std::size_t i = 0; i < carrier.size(); ++i)
        for (Index m = 0; m < x.monoid()->size(); ++m) {
            const Index y = x.act(carrier[i], m);
            if (pos[y] == -1) throw ActAxiomViolation("subact carrier is not closed");
            action[i][m] = pos[y];
        }
    return RightAct::validate(x.monoid(), std::move(action));
}

bool is_cyclic(const RightAct& x) {
    for (Index a = 0; a < x.size(); ++a)
        if (static_cast<Index>(x.orbit(a).size()) == x.size()) return true;
    return false;
}

}  // namespace actkit
