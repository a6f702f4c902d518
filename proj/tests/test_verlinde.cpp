#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "fht/errors.hpp"
#include "fht/verlinde.hpp"
#include "test_util.hpp"

using namespace fht;
using namespace fht::test;

TEST_CASE("level weights")
{
    const auto a1 = rs("A1");
    CHECK(level_weights(a1, 1).weights == std::vector<Weight>{wt({0}), wt({1})});
    CHECK(level_weights(a1, 0).weights == std::vector<Weight>{wt({0})});
    for (std::int64_t k = 0; k <= 10; ++k)
        CHECK(static_cast<std::int64_t>(level_weights(a1, k).weights.size()) == k + 1);

    const auto a2 = rs("A2");
    CHECK(level_weights(a2, 1).weights.size() == 3);
    for (std::int64_t k = 0; k <= 10; ++k)
        CHECK(static_cast<std::int64_t>(level_weights(a2, k).weights.size()) ==
              (k + 1) * (k + 2) / 2);

    // B(lambda, theta) <= k is the defining condition.
    for (const auto& w : level_weights(a2, 3).weights)
        CHECK(a2.inner_product_weights(w, a2.theta()) <= Rational(3));
}

TEST_CASE("freudenthal weight systems")
{
    const auto a1 = rs("A1");
    const WeightSystem v1 = freudenthal_weights(a1, wt({1}));
    CHECK(v1.mults == std::map<Weight, std::int64_t>{{wt({1}), 1}, {wt({-1}), 1}});
    const WeightSystem v2 = freudenthal_weights(a1, wt({2}));
    CHECK(v2.mults == std::map<Weight, std::int64_t>{{wt({2}), 1}, {wt({0}), 1}, {wt({-2}), 1}});

    const auto a2 = rs("A2");
    const WeightSystem adj = freudenthal_weights(a2, wt({1, 1}));
    CHECK(adj.dimension() == 8);
    CHECK(adj.mults.at(wt({0, 0})) == 2);
    CHECK(weyl_dimension(a2, wt({1, 1})) == 8);
    CHECK(weyl_dimension(a2, wt({2, 1})) == 15);

    CHECK_THROWS_AS(freudenthal_weights(a1, wt({-1})), std::invalid_argument);

    // G2 fundamental: 7-dimensional with a zero weight.
    const auto g2 = rs("G2");
    const WeightSystem seven = freudenthal_weights(g2, wt({1, 0}));
    CHECK(seven.dimension() == 7);
    CHECK(seven.mults.at(wt({0, 0})) == 1);
}

TEST_CASE("tensor decomposition")
{
    const auto a1 = rs("A1");
    CHECK(tensor_decompose(a1, wt({1}), wt({1})) ==
          std::map<Weight, std::int64_t>{{wt({0}), 1}, {wt({2}), 1}});
    CHECK(tensor_decompose(a1, wt({3}), wt({0})) ==
          std::map<Weight, std::int64_t>{{wt({3}), 1}});

    const auto a2 = rs("A2");
    CHECK(tensor_decompose(a2, wt({1, 0}), wt({0, 1})) ==
          std::map<Weight, std::int64_t>{{wt({0, 0}), 1}, {wt({1, 1}), 1}});

    // dimension bookkeeping
    const auto dec = tensor_decompose(a2, wt({2, 1}), wt({1, 1}));
    std::int64_t total = 0;
    for (const auto& [nu, m] : dec) total += m * weyl_dimension(a2, nu);
    CHECK(total == weyl_dimension(a2, wt({2, 1})) * 8);
}

TEST_CASE("fusion products")
{
    const auto a1 = rs("A1");
    CHECK(fusion(a1, wt({1}), wt({1}), 1) == FusionElement::basis(1, wt({0})));

    FusionElement k2(2);
    k2.add(wt({0}), 1);
    CHECK(fusion(a1, wt({2}), wt({2}), 2) == k2);

    CHECK(fusion(a1, wt({2}), wt({0}), 2) == FusionElement::basis(2, wt({2})));
    CHECK_THROWS_AS(fusion(a1, wt({3}), wt({0}), 2), std::invalid_argument);

    const auto a2 = rs("A2");
    FusionElement expect(2);
    expect.add(wt({0, 0}), 1);
    expect.add(wt({1, 1}), 1);
    CHECK(fusion(a2, wt({1, 0}), wt({0, 1}), 2) == expect);
}

TEST_CASE("project_to_level")
{
    const auto a1 = rs("A1");
    CHECK(project_to_level(a1, wt({1}), 1) == FusionElement::basis(1, wt({1})));
    CHECK(project_to_level(a1, wt({2}), 1).is_zero()); // wall at l = 3
    FusionElement minus(1);
    minus.add(wt({1}), -1);
    CHECK(project_to_level(a1, wt({3}), 1) == minus);
    CHECK_THROWS_AS(project_to_level(a1, wt({-2}), 1), std::invalid_argument);
}

TEST_CASE("S-matrix at A1 level 1")
{
    const auto a1 = rs("A1");
    const SMatrix s = s_matrix(a1, 1);
    CHECK(s.unitarity_error() < 1e-12);
    CHECK(s.symmetry_error() < 1e-12);
    // |S_ab| = sqrt(2/3) |sin(pi (a+1)(b+1) / 3)|
    const double c = std::sqrt(2.0 / 3.0);
    CHECK(std::abs(std::abs(s.entries[0][0]) - c * std::sin(std::numbers::pi / 3)) < 1e-12);
    CHECK(std::abs(std::abs(s.entries[1][1]) - c * std::abs(std::sin(4 * std::numbers::pi / 3))) <
          1e-12);

    CHECK(verlinde_fusion(s, wt({1}), wt({1})) == FusionElement::basis(1, wt({0})));
    CHECK(verlinde_fusion(s, wt({1}), wt({0})) == FusionElement::basis(1, wt({1})));
}

TEST_CASE("S-matrix fusion agrees at A1 level 2")
{
    const auto a1 = rs("A1");
    FusionElement expect(2);
    expect.add(wt({0}), 1);
    expect.add(wt({2}), 1);
    CHECK(verlinde_fusion(a1, wt({1}), wt({1}), 2) == expect);
}

TEST_CASE("characters at special points")
{
    const auto a1 = rs("A1");
    const WeightSystem v2 = freudenthal_weights(a1, wt({2}));

    // chi at the identity is the dimension.
    CHECK(std::abs(char_value(v2, RatVec{Rational(0)}) - std::complex<double>(3, 0)) < 1e-12);

    // chi_2 vanishes at the special point of xi = 0 at level k = 1.
    const auto pts = special_points(a1, 1);
    CHECK(pts.size() == 2);
    CHECK(pts[0] == RatVec{Rational(1, 6)});
    CHECK(std::abs(char_value(v2, pts[0])) < 1e-12);

    CHECK(ideal_vanishing_check(a1, wt({2}), 1));
    CHECK(ideal_vanishing_check(a1, wt({3}), 1));
    CHECK(ideal_vanishing_check(a1, wt({5}), 2));
}

TEST_CASE("freudenthal cache persists and survives corruption")
{
    const auto a2 = rs("A2");
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "fht-cache-test";
    std::filesystem::remove_all(dir);

    FreudenthalCache cache(dir);
    const auto ws = cache.get(a2, wt({1, 1}));
    CHECK(ws->dimension() == 8);
    const std::filesystem::path file = dir / "v1" / "A2" / "1_1.json";
    CHECK(std::filesystem::exists(file));

    // A fresh cache reads the file back.
    FreudenthalCache cache2(dir);
    CHECK(cache2.get(a2, wt({1, 1}))->mults == ws->mults);

    // Corrupt the file: the cache recomputes and overwrites, never fails.
    {
        std::ofstream out(file);
        out << "{ not json";
    }
    FreudenthalCache cache3(dir);
    CHECK(cache3.get(a2, wt({1, 1}))->dimension() == 8);
    FreudenthalCache cache4(dir);
    CHECK(cache4.get(a2, wt({1, 1}))->mults == ws->mults);

    std::filesystem::remove_all(dir);
}
