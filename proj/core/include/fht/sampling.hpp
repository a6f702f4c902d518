#pragma once

#include <cstdint>
#include <random>

#include "fht/lattice_group.hpp"
#include "fht/root_system.hpp"

namespace fht {

// Seeded draws for the property suites.  Coordinate and denominator ranges
// are kept small so every rational computation stays exact and cheap.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Weight weight(const RootSystem& rs, std::int64_t bound)
    {
        IntVec c(rs.rank());
        for (auto& x : c) x = integer(-bound, bound);
        return Weight(std::move(c));
    }

    CorootElem coroot(const RootSystem& rs, std::int64_t bound)
    {
        IntVec c(rs.rank());
        for (auto& x : c) x = integer(-bound, bound);
        return CorootElem(std::move(c));
    }

    Rational rational(std::int64_t max_den = 12)
    {
        const std::int64_t den = integer(1, max_den);
        return Rational(integer(-3 * den, 3 * den), den);
    }

    TorusElem torus(const RootSystem& rs, std::int64_t max_den = 12)
    {
        RatVec c(rs.rank());
        for (auto& x : c) x = rational(max_den);
        return TorusElem(std::move(c));
    }

    GroupElem group_elem(const RootSystem& rs, std::int64_t level, std::int64_t bound = 3)
    {
        return GroupElem{torus(rs), coroot(rs, bound), Phase(rational()), level};
    }

    std::vector<int> word(const RootSystem& rs, size_t max_len)
    {
        std::vector<int> w(integer(0, static_cast<std::int64_t>(max_len)));
        for (auto& i : w) i = static_cast<int>(integer(0, rs.rank() - 1));
        return w;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace fht
