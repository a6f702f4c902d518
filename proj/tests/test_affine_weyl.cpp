#include <doctest.h>

#include <set>

#include "fht/affine_weyl.hpp"
#include "fht/errors.hpp"
#include "fht/weyl.hpp"
#include "test_util.hpp"

using namespace fht;
using namespace fht::test;

TEST_CASE("shifted action on A1")
{
    const auto r = rs("A1");
    const auto id = AffineWeylElem::identity(1);
    CHECK(shifted_action(r, id, wt({5}), 3) == wt({5}));
    // reflection: s(0 + rho) - rho = -2
    CHECK(shifted_action(r, AffineWeylElem{{0}, cr({0})}, wt({0}), 3) == wt({-2}));
    // translation: 0 + 3 * b_flat(alpha^vee) = 6
    CHECK(shifted_action(r, AffineWeylElem{{}, cr({1})}, wt({0}), 3) == wt({6}));
    CHECK_THROWS_AS(shifted_action(r, id, wt({0}), 0), std::invalid_argument);
}

TEST_CASE("shifted action composes as a group action")
{
    const auto r = rs("A2");
    const AffineWeylElem w1{{0, 1}, cr({1, -1})};
    const AffineWeylElem w2{{1}, cr({0, 2})};
    const Weight xi = wt({3, -2});
    const std::int64_t l = 4;
    CHECK(shifted_action(r, w1, shifted_action(r, w2, xi, l), l) ==
          shifted_action(r, compose(r, w1, w2), xi, l));
    CHECK(compose(r, w1, w2).parity() == w1.parity() * w2.parity());
}

TEST_CASE("affine fold on A1 at level 3")
{
    const auto r = rs("A1");
    CHECK(affine_fold(r, wt({0}), 3) == FoldOutcome::interior(wt({0}), 1));
    CHECK(affine_fold(r, wt({2}), 3) == FoldOutcome::boundary());
    CHECK(affine_fold(r, wt({3}), 3) == FoldOutcome::interior(wt({1}), -1));
    // idempotent on interior weights
    CHECK(affine_fold(r, wt({1}), 3) == FoldOutcome::interior(wt({1}), 1));
}

TEST_CASE("finite fold on A1")
{
    const auto r = rs("A1");
    CHECK(finite_fold(r, wt({4})) == FoldOutcome::interior(wt({4}), 1));
    CHECK(finite_fold(r, wt({-1})) == FoldOutcome::boundary());
    CHECK(finite_fold(r, wt({-3})) == FoldOutcome::interior(wt({1}), -1));
}

TEST_CASE("enumerate_orbit matches the brute-force example")
{
    const auto r = rs("A1");
    const auto orbit = enumerate_orbit(r, wt({0}), 3, 8);
    const std::set<std::pair<Weight, int>> got(orbit.begin(), orbit.end());
    const std::set<std::pair<Weight, int>> expect = {
        {wt({0}), 1}, {wt({-2}), -1}, {wt({4}), -1},
        {wt({6}), 1}, {wt({-6}), 1},  {wt({-8}), -1}};
    CHECK(got == expect);

    // Every orbit point folds back to (sign, xi0).
    for (const auto& [w, sign] : orbit)
        CHECK(affine_fold(r, w, 3) == FoldOutcome::interior(wt({0}), sign));

    // A box too small for anything but xi0 returns just xi0.
    const auto tiny = enumerate_orbit(r, wt({0}), 3, 1);
    CHECK(tiny == std::vector<std::pair<Weight, int>>{{wt({0}), 1}});

    CHECK_THROWS_AS(enumerate_orbit(r, wt({2}), 3, 8), std::invalid_argument);
}

TEST_CASE("interior weights")
{
    const auto a1 = rs("A1");
    CHECK(interior_weights(a1, 3) == std::vector<Weight>{wt({0}), wt({1})});
    CHECK(interior_weights(a1, 1).empty());
    CHECK(interior_weights(a1, 2) == std::vector<Weight>{wt({0})});
    CHECK(is_interior_weight(a1, wt({1}), 3));
    CHECK_FALSE(is_interior_weight(a1, wt({2}), 3));

    const auto a2 = rs("A2");
    CHECK(interior_weights(a2, 4).size() == 3);
    for (const auto& w : interior_weights(a2, 6))
        CHECK(affine_fold(a2, w, 6) == FoldOutcome::interior(w, 1));
}

TEST_CASE("G2 folds stay consistent with the orbit")
{
    const auto r = rs("G2");
    const std::int64_t l = 5;
    for (const auto& xi0 : interior_weights(r, l)) {
        for (const auto& [w, sign] : enumerate_orbit(r, xi0, l, 6))
            CHECK(affine_fold(r, w, l) == FoldOutcome::interior(xi0, sign));
    }
}
