#include <doctest.h>

#include "fht/fht_map.hpp"
#include "fht/json_io.hpp"
#include "fht/weyl.hpp"
#include "test_util.hpp"

using namespace fht;
using namespace fht::test;

TEST_CASE("weyl numerator")
{
    const auto a1 = rs("A1");
    FormalCharacter expect0;
    expect0.add(wt({0}), 1);
    expect0.add(wt({-2}), -1);
    CHECK(weyl_numerator(a1, wt({0})) == expect0);

    FormalCharacter expect1;
    expect1.add(wt({1}), 1);
    expect1.add(wt({-3}), -1);
    CHECK(weyl_numerator(a1, wt({1})) == expect1);

    const auto a2 = rs("A2");
    const FormalCharacter n0 = weyl_numerator(a2, wt({0, 0}));
    CHECK(n0.term_count() == 6);
    std::int64_t coeff_sum = 0;
    for (const auto& [w, m] : n0.support()) coeff_sum += m;
    CHECK(coeff_sum == 0);

    CHECK_THROWS_AS(weyl_numerator(a1, wt({-1})), std::invalid_argument);
}

TEST_CASE("wedge n_minus character")
{
    const auto a1 = rs("A1");
    FormalCharacter expect;
    expect.add(wt({0}), 1);
    expect.add(wt({-2}), -1);
    CHECK(wedge_n_minus_char(a1) == expect);

    // Weyl denominator identity: the wedge equals the numerator at lambda = 0.
    for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
        const auto r = rs(name);
        CHECK(wedge_n_minus_char(r) == weyl_numerator(r, Weight::zero(r.rank())));
        CHECK(wedge_n_minus_char(r).value_at(Weight::zero(r.rank())) == 1);
    }
}

TEST_CASE("numerator identity")
{
    const auto a1 = rs("A1");
    CHECK(numerator_identity_check(a1, wt({1})));
    const auto g2 = rs("G2");
    CHECK(numerator_identity_check(g2, wt({2, 1})));
}

TEST_CASE("fht image on A1 level 1")
{
    const auto r = rs("A1");
    const FormalCharacter img = fht_image(r, wt({0}), 1, 8);
    FormalCharacter expect;
    expect.add(wt({0}), 1);
    expect.add(wt({-2}), -1);
    expect.add(wt({4}), -1);
    expect.add(wt({6}), 1);
    expect.add(wt({-6}), 1);
    expect.add(wt({-8}), -1);
    CHECK(img == expect);

    CHECK_THROWS_AS(fht_image(r, wt({2}), 1, 8), std::invalid_argument);

    // Golden serialization of the image character.
    CHECK(formal_character_to_json(img).dump() ==
          R"({"entries":[{"mult":-1,"weight":[-8]},{"mult":1,"weight":[-6]},)"
          R"({"mult":-1,"weight":[-2]},{"mult":1,"weight":[0]},{"mult":-1,"weight":[4]},)"
          R"({"mult":1,"weight":[6]}],"kind":"formal"})");
}

TEST_CASE("assembly character")
{
    const auto r = rs("A1");
    // Comb truncated to eta = 0 gives back the Weyl numerator.
    CHECK(assembly_character(r, wt({0}), 1, 8, 0) == weyl_numerator(r, wt({0})));
    // Auto-sized comb reproduces the orbit image exactly on the window.
    CHECK(assembly_character(r, wt({0}), 1, 8) == fht_image(r, wt({0}), 1, 8));
    CHECK(assembly_character(r, wt({1}), 1, 12) == fht_image(r, wt({1}), 1, 12));

    const auto a2 = rs("A2");
    CHECK(assembly_character(a2, wt({1, 0}), 2, 7) == fht_image(a2, wt({1, 0}), 2, 7));
}

TEST_CASE("inverse fht")
{
    const auto r = rs("A1");
    CHECK(inverse_fht(r, fht_image_alternating(r, wt({1}), 2)) ==
          FusionElement::basis(2, wt({1})));
    CHECK(inverse_fht(r, AlternatingCharacter(r, 5)).is_zero());
    // level below h_dual + 1 has no level-k reading
    CHECK_THROWS_AS(inverse_fht(r, AlternatingCharacter(r, 2)), std::invalid_argument);
}

TEST_CASE("ring compatibility example: fusion through the image at A1 k=2")
{
    const auto r = rs("A1");
    const std::int64_t k = 2, level = 4, window = 10;
    const FormalCharacter chi1 = freudenthal_weights(r, wt({1})).character();
    const FormalCharacter img = fht_image(r, wt({1}), k, window + 1);
    const FormalCharacter prod = char_multiply(chi1, img).truncated(window);
    const FusionElement got = inverse_fht(r, restrict_to_alcove(r, prod, level, window));
    FusionElement expect(k);
    expect.add(wt({0}), 1);
    expect.add(wt({2}), 1);
    CHECK(got == expect);
    CHECK(got == fusion(r, wt({1}), wt({1}), k));
}
