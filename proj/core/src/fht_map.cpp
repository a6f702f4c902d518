#include "fht/fht_map.hpp"

#include <stdexcept>

#include "fht/errors.hpp"
#include "fht/weyl.hpp"

namespace fht {

FormalCharacter weyl_numerator(const RootSystem& rs, const Weight& lambda)
{
    if (!rs.is_dominant(lambda))
        throw std::invalid_argument("weyl_numerator: " + lambda.str() + " is not dominant");
    const Weight mu = lambda + rs.rho();
    FormalCharacter out;
    for (const auto& w : enumerate_weyl(rs)) out.add(w.apply(mu) - rs.rho(), w.parity);
    internal_check(out.term_count() == static_cast<size_t>(weyl_order(rs.type())),
                   "weyl_numerator: orbit of a strictly dominant weight must be free");
    return out;
}

FormalCharacter wedge_n_minus_char(const RootSystem& rs)
{
    FormalCharacter out = FormalCharacter::unit(rs.rank());
    for (const auto& pr : rs.positive_roots()) {
        FormalCharacter factor = FormalCharacter::unit(rs.rank());
        factor.add(-pr.wt, -1);
        out = char_multiply(out, factor);
    }
    return out;
}

bool numerator_identity_check(const RootSystem& rs, const Weight& lambda, FreudenthalCache* cache)
{
    FormalCharacter restriction;
    if (cache) {
        restriction = cache->get(rs, lambda)->character();
    } else {
        restriction = freudenthal_weights(rs, lambda).character();
    }
    return char_multiply(restriction, wedge_n_minus_char(rs)) == weyl_numerator(rs, lambda);
}

FormalCharacter fht_image(const RootSystem& rs, const Weight& lambda, std::int64_t k,
                          std::int64_t window)
{
    const std::int64_t level = k + rs.h_dual();
    if (!level_weights(rs, k).contains(lambda))
        throw std::invalid_argument("fht_image: " + lambda.str() + " is not a level-" +
                                    std::to_string(k) + " weight");
    FormalCharacter out;
    for (const auto& [w, sign] : enumerate_orbit(rs, lambda, level, window)) out.add(w, sign);
    return out;
}

AlternatingCharacter fht_image_alternating(const RootSystem& rs, const Weight& lambda,
                                           std::int64_t k)
{
    const std::int64_t level = k + rs.h_dual();
    if (!level_weights(rs, k).contains(lambda))
        throw std::invalid_argument("fht_image_alternating: " + lambda.str() +
                                    " is not a level-" + std::to_string(k) + " weight");
    return AlternatingCharacter::delta(rs, level, lambda);
}

FormalCharacter assembly_character(const RootSystem& rs, const Weight& lambda, std::int64_t k,
                                   std::int64_t window, std::int64_t comb_radius)
{
    const std::int64_t level = k + rs.h_dual();
    const FormalCharacter numerator = weyl_numerator(rs, lambda);
    const std::int64_t margin = numerator.max_abs_coord();

    std::int64_t radius = comb_radius;
    if (radius < 0) {
        // Size the comb so that every decomposition xi = nu + l*b_flat(eta)
        // with xi in the box and nu in supp(numerator) is included: bound
        // |eta|_inf through the inverse Gram matrix.
        Rational max_col_sum(0);
        for (int j = 0; j < rs.rank(); ++j) {
            Rational s(0);
            for (int i = 0; i < rs.rank(); ++i) {
                Rational g = rs.gram_weight()[i][j];
                s += g < Rational(0) ? -g : g;
            }
            if (max_col_sum < s) max_col_sum = s;
        }
        radius = ((Rational(window + margin) * max_col_sum) / Rational(level)).floor() + 1;
    }

    FormalCharacter comb;
    const int r = rs.rank();
    IntVec eta(r, -radius);
    for (;;) {
        comb.add(level * rs.b_flat(CorootElem(eta)), 1);
        int i = 0;
        while (i < r && eta[i] == radius) eta[i++] = -radius;
        if (i == r) break;
        ++eta[i];
    }
    return char_multiply(numerator, comb).truncated(window);
}

FusionElement inverse_fht(const RootSystem& rs, const AlternatingCharacter& ac)
{
    const std::int64_t k = ac.level() - rs.h_dual();
    if (k < 1)
        throw std::invalid_argument("inverse_fht: level " + std::to_string(ac.level()) +
                                    " is below h_dual + 1; no level-k interpretation");
    FusionElement out(k);
    for (const auto& [w, m] : ac.mults()) out.add(w, m);
    return out;
}

} // namespace fht
