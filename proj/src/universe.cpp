#include "actkit/universe.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "actkit/errors.hpp"

namespace actkit {

namespace {

// Acts on {0..size-1} correspond to assignments of one transformation
// column per monoid element, compatible with the multiplication. Columns
// for a generating set determine the rest; the search assigns generator
// columns depth first and closes under right multiplication, pruning on
// the first conflict.
struct ActSearch {
    const Monoid& monoid;
    Index size;
    std::vector<Index> gens;
    std::vector<Row> cols;       // per monoid element; empty row = unknown
    std::vector<Index> known;    // elements with a column, in derivation order
    std::vector<Grid> results;

    ActSearch(const Monoid& monoid_, Index size_)
        : monoid(monoid_), size(size_), gens(monoid_.generating_set()), cols(monoid_.size()) {
        Row id(size);
        for (Index x = 0; x < size; ++x) id[x] = x;
        cols[monoid.identity()] = std::move(id);
        known.push_back(monoid.identity());
    }

    // Closes the known set under products with assigned generators.
    // Returns false on conflict; appends derived elements to `known`.
    bool close(std::size_t gens_assigned) {
        for (std::size_t i = 0; i < known.size(); ++i) {
            const Index u = known[i];
            for (std::size_t j = 0; j < gens_assigned; ++j) {
                const Index g = gens[j];
                const Index ug = monoid.mul(u, g);
                Row derived(size);
                for (Index x = 0; x < size; ++x) derived[x] = cols[g][cols[u][x]];
                if (cols[ug].empty()) {
                    cols[ug] = std::move(derived);
                    known.push_back(ug);
                } else if (cols[ug] != derived) {
                    return false;
                }
            }
        }
        return true;
    }

    void run(std::size_t level) {
        if (level == gens.size()) {
            // Generators generate, so closure reached every element.
            Grid action(size, Row(monoid.size()));
            for (Index m = 0; m < monoid.size(); ++m)
                for (Index x = 0; x < size; ++x) action[x][m] = cols[m][x];
            results.push_back(std::move(action));
            return;
        }
        const std::size_t known_mark = known.size();
        std::vector<Row> saved = cols;
        Row col(size);
        // All size^size candidate columns for this generator, in lex order.
        std::fill(col.begin(), col.end(), 0);
        while (true) {
            cols[gens[level]] = col;
            // The generator must join the closure worklist itself, or the
            // products it forms with assigned generators are never checked.
            known.push_back(gens[level]);
            if (close(level + 1)) run(level + 1);
            known.resize(known_mark);
            cols = saved;
            Index i = size - 1;
            while (i >= 0 && col[i] == size - 1) {
                col[i] = 0;
                --i;
            }
            if (i < 0) break;
            ++col[i];
        }
    }
};

std::uint64_t universe_key(const Monoid& monoid, Index bound) {
    std::uint64_t h = monoid.hash();
    h ^= static_cast<std::uint64_t>(bound) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
    return h;
}

std::optional<std::filesystem::path> cache_path(const Monoid& monoid, Index bound) {
    const char* dir = std::getenv("ACTKIT_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    std::ostringstream name;
    name << "universe-" << std::hex << universe_key(monoid, bound) << ".txt";
    return std::filesystem::path(dir) / name.str();
}

std::optional<std::vector<ActPtr>> load_cached(const MonoidPtr& monoid, Index bound,
                                               const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string tag;
    std::uint64_t key = 0;
    std::size_t count = 0;
    in >> tag >> key >> count;
    if (!in || tag != "actkit-universe-v1" || key != universe_key(*monoid, bound))
        return std::nullopt;
    std::vector<ActPtr> reps;
    for (std::size_t i = 0; i < count; ++i) {
        Index sz = -1;
        in >> sz;
        if (!in || sz < 0 || sz > bound) return std::nullopt;
        Grid action(sz, Row(monoid->size()));
        for (Index x = 0; x < sz; ++x)
            for (Index m = 0; m < monoid->size(); ++m) {
                in >> action[x][m];
                if (!in) return std::nullopt;
            }
        try {
            reps.push_back(share(RightAct::validate(monoid, std::move(action))));
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    return reps;
}

void store_cached(const Universe& universe, const std::filesystem::path& path) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (!out) return;
    out << "actkit-universe-v1 " << universe_key(*universe.monoid, universe.bound) << ' '
        << universe.representatives.size() << '\n';
    for (const ActPtr& act : universe.representatives) {
        out << act->size() << '\n';
        for (Index x = 0; x < act->size(); ++x) {
            for (Index m = 0; m < universe.monoid->size(); ++m) {
                if (m) out << ' ';
                out << act->act(x, m);
            }
            out << '\n';
        }
    }
}

}  // namespace

std::vector<ActPtr> enumerate_acts_of_size(const MonoidPtr& monoid, Index size) {
    if (size < 0) throw Error("act size must be nonnegative");
    if (size == 0) return {share(RightAct::empty(monoid))};
    ActSearch search(*monoid, size);
    search.run(0);
    std::sort(search.results.begin(), search.results.end());
    std::vector<ActPtr> reps;
    for (Grid& action : search.results) {
        ActPtr act = share(RightAct::validate(monoid, std::move(action)));
        bool fresh = true;
        for (const ActPtr& rep : reps)
            if (are_isomorphic(rep, act)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(std::move(act));
    }
    return reps;
}

Universe enumerate_universe(const MonoidPtr& monoid, Index bound) {
    if (bound < 0) throw Error("universe bound must be nonnegative");
    const auto path = cache_path(*monoid, bound);
    if (path) {
        if (auto cached = load_cached(monoid, bound, *path))
            return Universe{monoid, bound, std::move(*cached)};
    }
    Universe universe{monoid, bound, {}};
    for (Index size = 0; size <= bound; ++size)
        for (ActPtr& act : enumerate_acts_of_size(monoid, size))
            universe.representatives.push_back(std::move(act));
    if (path) store_cached(universe, *path);
    return universe;
}

std::optional<Index> Universe::find_representative(const ActPtr& act) const {
    if (act->size() > bound) return std::nullopt;
    for (std::size_t i = 0; i < representatives.size(); ++i) {
        if (representatives[i]->size() != act->size()) continue;
        if (are_isomorphic(representatives[i], act)) return static_cast<Index>(i);
    }
    return std::nullopt;
}

}  // namespace actkit
