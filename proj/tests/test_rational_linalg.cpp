#include <doctest.h>

#include "fht/linalg.hpp"
#include "fht/rational.hpp"

using namespace fht;

TEST_CASE("rational arithmetic is exact and normalized")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1) / Rational(3) == Rational(1, 3));
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(-1, 4).mod1() == Rational(3, 4));
    CHECK(Rational(9, 4).mod1() == Rational(1, 4));
    CHECK(Rational(-3, 2) < Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rational matrix inverse")
{
    const RatMat m = to_rational({{2, -1}, {-1, 2}});
    const RatMat inv = rat_inverse(m);
    CHECK(inv[0][0] == Rational(2, 3));
    CHECK(inv[0][1] == Rational(1, 3));
    CHECK(rat_det(m) == Rational(3));
    CHECK_THROWS_AS(rat_inverse(to_rational({{1, 1}, {1, 1}})), std::domain_error);
}

TEST_CASE("smith normal form diagonalizes with divisibility chain")
{
    auto check = [](IntMat m) {
        const SmithResult s = smith_normal_form(m);
        // V * V^-1 = 1
        const IntMat prod = int_mat_mul(s.v, s.v_inv);
        CHECK(prod == int_identity(static_cast<int>(m.size())));
        for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
            if (s.diag[i] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
        }
        // |det| preserved
        std::int64_t d = 1;
        for (auto x : s.diag) d *= x;
        CHECK(d == std::abs(int_det(m)));
    };
    check({{4, -2}, {-2, 4}});
    check({{6}});
    check({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    check({{12, 4}, {0, 8}});
}
