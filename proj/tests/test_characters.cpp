#include <doctest.h>

#include <json.hpp>

#include "fht/characters.hpp"
#include "fht/fht_map.hpp"
#include "fht/json_io.hpp"
#include "test_util.hpp"

using namespace fht;
using namespace fht::test;

TEST_CASE("formal character algebra")
{
    FormalCharacter a;
    a.add(wt({1}), 1);
    a.add(wt({-1}), 1);
    CHECK(char_multiply(a, FormalCharacter::unit(1)) == a);

    // (e_1 + e_{-1})^2 = e_2 + 2 e_0 + e_{-2}
    const FormalCharacter sq = char_multiply(a, a);
    CHECK(sq.value_at(wt({2})) == 1);
    CHECK(sq.value_at(wt({0})) == 2);
    CHECK(sq.value_at(wt({-2})) == 1);
    CHECK(sq.term_count() == 3);

    // (e_0 - e_{-2}) (e_1 + e_{-1}) = e_1 - e_{-3}
    FormalCharacter b;
    b.add(wt({0}), 1);
    b.add(wt({-2}), -1);
    const FormalCharacter prod = char_multiply(b, a);
    FormalCharacter expect;
    expect.add(wt({1}), 1);
    expect.add(wt({-3}), -1);
    CHECK(prod == expect);

    // zero multiplicities are never stored
    FormalCharacter z;
    z.add(wt({4}), 2);
    z.add(wt({4}), -2);
    CHECK(z.is_zero());
}

TEST_CASE("alternating extension on A1 level 3")
{
    const auto r = rs("A1");
    const AlternatingCharacter ac = AlternatingCharacter::delta(r, 3, wt({0}));
    CHECK(alternating_extend(r, ac, wt({0})) == 1);
    CHECK(alternating_extend(r, ac, wt({4})) == -1);
    CHECK(alternating_extend(r, ac, wt({2})) == 0); // wall
    CHECK(alternating_extend(r, ac, wt({6})) == 1);
    CHECK_THROWS_AS(ac.value_on_domain(wt({7})), std::invalid_argument);
}

TEST_CASE("restrict_to_alcove round trips and rejects non-alternating input")
{
    const auto r = rs("A1");
    const std::int64_t level = 3, window = 8;

    const FormalCharacter img = fht_image(r, wt({1}), 1, window);
    const AlternatingCharacter back = restrict_to_alcove(r, img, level, window);
    CHECK(back == AlternatingCharacter::delta(r, level, wt({1})));

    CHECK(restrict_to_alcove(r, FormalCharacter(), level, window).is_zero());

    // A boundary-supported entry cannot come from an alternating character.
    FormalCharacter bad;
    bad.add(wt({2}), 1);
    CHECK_THROWS_WITH_AS(restrict_to_alcove(r, bad, level, window),
                         doctest::Contains("(2)"), std::invalid_argument);
}

TEST_CASE("periodization on A1 level 3")
{
    const auto r = rs("A1");
    const auto trans = coset_transversal(r, 3);
    CHECK(trans->size() == 6); // l^rank * det(gram_coroot) = 3 * 2

    CHECK(periodize(r, FormalCharacter::delta(wt({0})), 3) == coset_indicator(r, wt({0}), 3));

    FormalCharacter two;
    two.add(wt({0}), 1);
    two.add(wt({6}), 1); // 6 = 3 * b_flat(alpha^vee) lies in l*Pi
    const PeriodicCharacter p = periodize(r, two, 3);
    CHECK(p.value_at(wt({0})) == 2);
    CHECK(p.value_at(wt({12})) == 2);
    CHECK(p.value_at(wt({1})) == 0);
}

TEST_CASE("coset reduction")
{
    const auto r = rs("A2");
    const auto trans = coset_transversal(r, 2);
    CHECK(trans->size() == 12); // 2^2 * 3
    for (const Weight& xi : {wt({5, -3}), wt({0, 7}), wt({-4, -4})}) {
        const auto [idx, eta] = trans->reduce(xi);
        CHECK(trans->rep(idx) + 2 * r.b_flat(eta) == xi);
        CHECK(trans->index_of(trans->rep(idx)) == idx);
    }
}

TEST_CASE("character JSON round trips")
{
    const auto r = rs("A2");

    FormalCharacter fc;
    fc.add(wt({1, -2}), 3);
    fc.add(wt({0, 5}), -1);
    CHECK(formal_character_from_json(formal_character_to_json(fc)) == fc);

    AlternatingCharacter ac(r, 4);
    ac.set(wt({0, 0}), 2);
    ac.set(wt({0, 1}), -1);
    CHECK(alternating_character_from_json(r, alternating_character_to_json(ac)) == ac);

    const PeriodicCharacter pc = coset_indicator(r, wt({1, 1}), 2);
    CHECK(periodic_character_from_json(r, periodic_character_to_json(pc)) == pc);

    // sorted support: serialization is deterministic
    CHECK(formal_character_to_json(fc).dump() == formal_character_to_json(fc).dump());
}
