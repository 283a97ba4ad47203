#include <doctest.h>

#include <algorithm>
#include <set>

#include "actkit/errors.hpp"
#include "actkit/inventory.hpp"
#include "helpers.hpp"

using namespace actkit;

TEST_CASE("monoid validation accepts lawful tables") {
    const MonoidPtr m = testkit::two_idempotent();
    CHECK(m->size() == 2);
    CHECK(m->identity() == 0);
    CHECK(m->mul(1, 1) == 1);

    const MonoidPtr g = testkit::two_group();
    CHECK(g->mul(1, 1) == 0);

    CHECK(trivial_monoid()->size() == 1);
    CHECK(trivial_monoid()->identity() == 0);
}

TEST_CASE("monoid validation rejects broken laws") {
    // mul(1, 0) = 1 contradicts identity = 1.
    CHECK_THROWS_AS(make_monoid({{0, 1}, {1, 0}}, 1), IdentityViolation);
    // (1*1)*1 = 2*1 = 1 but 1*(1*1) = 1*2 = 0.
    CHECK_THROWS_AS(make_monoid({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, 0), AssociativityViolation);
    // Ragged row.
    CHECK_THROWS_AS(make_monoid({{0, 1}, {1}}, 0), Error);
    // Identity index out of range.
    CHECK_THROWS_AS(make_monoid({{0, 1}, {1, 1}}, 2), Error);
    // Entry out of range.
    CHECK_THROWS_AS(make_monoid({{0, 1}, {1, 7}}, 0), Error);
}

TEST_CASE("idempotents are the solutions of x*x = x") {
    CHECK(testkit::two_idempotent()->idempotents() == Row{0, 1});
    CHECK(testkit::two_group()->idempotents() == Row{0});
    CHECK(testkit::right_zero_adjoined()->idempotents() == Row{0, 1, 2});
}

TEST_CASE("generating sets close to the whole monoid") {
    for (const MonoidPtr& m : monoid_inventory_upto(3)) {
        const Row gens = m->generating_set();
        const Row closed = submonoid_closure(*m, gens);
        CHECK(static_cast<Index>(closed.size()) == m->size());
    }
    CHECK(testkit::two_group()->generating_set() == Row{1});
}

TEST_CASE("submonoid closure always contains the identity") {
    const MonoidPtr m = testkit::right_zero_adjoined();
    CHECK(submonoid_closure(*m, {}) == Row{0});
    CHECK(submonoid_closure(*m, {1}) == Row{0, 1});
    CHECK(submonoid_closure(*m, {1, 2}) == Row{0, 1, 2});
}

TEST_CASE("opposite monoid transposes the table") {
    const MonoidPtr m = testkit::right_zero_adjoined();
    const Monoid op = m->opposite();
    for (Index a = 0; a < m->size(); ++a)
        for (Index b = 0; b < m->size(); ++b) CHECK(op.mul(a, b) == m->mul(b, a));
    CHECK(op.opposite() == *m);
    // A commutative monoid is its own opposite.
    CHECK(testkit::two_idempotent()->opposite() == *testkit::two_idempotent());
}

TEST_CASE("same_monoid compares by table, not by pointer") {
    const MonoidPtr a = testkit::two_idempotent();
    const MonoidPtr b = testkit::two_idempotent();
    CHECK(a.get() != b.get());
    CHECK(same_monoid(a, b));
    CHECK(!same_monoid(a, testkit::two_group()));
    CHECK(a->hash() == b->hash());
}

TEST_CASE("monoid inventory counts one, two and seven classes for orders 1 to 3") {
    CHECK(monoid_inventory(1).size() == 1);
    CHECK(monoid_inventory(2).size() == 2);
    CHECK(monoid_inventory(3).size() == 7);
    CHECK(monoid_inventory_upto(3).size() == 10);
}

TEST_CASE("order-2 inventory lists exactly the group and the idempotent monoid") {
    const auto inv = monoid_inventory(2);
    REQUIRE(inv.size() == 2);
    CHECK(*inv[0] == *testkit::two_group());
    CHECK(*inv[1] == *testkit::two_idempotent());
}

namespace {

// Relabel the table by a permutation fixing the identity slot 0.
Grid relabeled(const Grid& table, const Row& perm) {
    const auto n = table.size();
    Grid out(n, Row(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out[perm[a]][perm[b]] = perm[table[a][b]];
    return out;
}

}  // namespace

TEST_CASE("order-3 inventory is complete, canonical and irredundant") {
    const auto inv = monoid_inventory(3);
    std::set<Grid> canon;
    for (const MonoidPtr& m : inv) {
        CHECK(m->identity() == 0);
        // Least table among relabelings that keep the identity at 0.
        CHECK(relabeled(m->table(), {0, 1, 2}) >= m->table());
        CHECK(relabeled(m->table(), {0, 2, 1}) >= m->table());
        canon.insert(m->table());
    }
    CHECK(canon.size() == inv.size());

    // Independent oracle: brute-force every table with identity row/column
    // fixed, keep the associative ones, and count orbits under relabeling.
    std::set<Grid> seen;
    std::size_t classes = 0;
    for (int c = 0; c < 81; ++c) {
        Grid t = {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
        t[1][1] = c % 3;
        t[1][2] = c / 3 % 3;
        t[2][1] = c / 9 % 3;
        t[2][2] = c / 27;
        bool ok = true;
        for (int a = 0; a < 3 && ok; ++a)
            for (int b = 0; b < 3 && ok; ++b)
                for (int d = 0; d < 3 && ok; ++d) ok = t[t[a][b]][d] == t[a][t[b][d]];
        if (!ok || seen.count(t)) continue;
        seen.insert(t);
        seen.insert(relabeled(t, {0, 2, 1}));
        ++classes;
        const Grid least = std::min(t, relabeled(t, {0, 2, 1}));
        CHECK(canon.count(least) == 1);
    }
    CHECK(classes == inv.size());
}
