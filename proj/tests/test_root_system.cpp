#include <doctest.h>

#include "fht/root_system.hpp"
#include "fht/weyl.hpp"
#include "test_util.hpp"

using namespace fht;
using namespace fht::test;

TEST_CASE("type validation")
{
    CHECK_THROWS_AS(RootSystem::build(LieType{Series::E, 9}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build(LieType{Series::D, 2}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build(LieType{Series::F, 3}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build(LieType{Series::G, 3}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build(LieType{Series::B, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse("H3"), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse("A"), std::invalid_argument);
    CHECK(LieType::parse("e7").name() == "E7");
}

TEST_CASE("A1 data")
{
    const auto r = rs("A1");
    CHECK(r.positive_roots().size() == 1);
    CHECK(r.rho() == wt({1}));
    CHECK(r.theta() == wt({2}));
    CHECK(r.h_dual() == 2);
    // B(omega, omega) = 1/2, B(alpha, alpha) = 2
    CHECK(r.inner_product_weights(wt({1}), wt({1})) == Rational(1, 2));
    CHECK(r.inner_product_weights(r.theta(), r.theta()) == Rational(2));
    CHECK(r.inner_product_weights(wt({1}), wt({0})) == Rational(0));
    CHECK(r.b_flat(cr({1})) == wt({2}));
    CHECK(r.b_flat(cr({0})) == wt({0}));
}

TEST_CASE("A2 data")
{
    const auto r = rs("A2");
    CHECK(r.positive_roots().size() == 3);
    CHECK(r.h_dual() == 3);
    CHECK(r.gram_coroot() == IntMat{{2, -1}, {-1, 2}});
    CHECK(r.pairing(r.rho(), r.theta_coroot()) == 2);
    CHECK(r.b_flat(cr({1, 0})) == wt({2, -1}));
    // <omega_i, alpha_j^vee> = delta_ij
    CHECK(r.pairing(wt({1, 0}), cr({0, 1})) == 0);
    CHECK(r.pairing(wt({1, 0}), cr({1, 0})) == 1);
    CHECK(r.pairing(wt({0, 0}), cr({3, -2})) == 0);
}

TEST_CASE("G2 data")
{
    const auto r = rs("G2");
    CHECK(r.positive_roots().size() == 6);
    CHECK(r.h_dual() == 4);
    CHECK(r.theta() == wt({0, 1}));
    CHECK(r.gram_coroot() == IntMat{{6, -3}, {-3, 2}});
}

TEST_CASE("positive root counts and Weyl orders across the series")
{
    for (const char* name : {"A3", "B2", "B4", "C3", "D4", "E6", "F4", "G2"}) {
        const auto r = rs(name);
        CHECK(static_cast<std::int64_t>(r.positive_roots().size()) ==
              positive_root_count(r.type()));
        if (weyl_order(r.type()) <= 51840)
            CHECK(static_cast<std::int64_t>(enumerate_weyl(r).size()) == weyl_order(r.type()));
    }
}

TEST_CASE("pairing rejects dimension mismatches")
{
    const auto r = rs("A2");
    CHECK_THROWS_AS(r.pairing(wt({1}), cr({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(r.inner_product_weights(wt({1, 0, 0}), wt({1, 0})), std::invalid_argument);
}

TEST_CASE("simple reflections are involutions compatible with the pairing")
{
    const auto r = rs("B3");
    const Weight w = wt({2, -1, 3});
    const CorootElem e = cr({1, -2, 1});
    for (int i = 0; i < r.rank(); ++i) {
        CHECK(r.simple_reflect(i, r.simple_reflect(i, w)) == w);
        CHECK(r.simple_reflect(i, r.simple_reflect(i, e)) == e);
        // <s_i w, s_i e> = <w, e>
        CHECK(r.pairing(r.simple_reflect(i, w), r.simple_reflect(i, e)) == r.pairing(w, e));
    }
}

TEST_CASE("b_sharp inverts b_flat")
{
    const auto r = rs("F4");
    const CorootElem e = cr({1, -2, 3, 0});
    const RatVec up = r.b_sharp(r.b_flat(e));
    for (int i = 0; i < r.rank(); ++i) CHECK(up[i] == Rational(e[i]));
}
