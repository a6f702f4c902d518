#include "fht/weyl.hpp"

#include <set>
#include <stdexcept>

#include "fht/errors.hpp"

namespace fht {

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::int64_t cap)
{
    const std::int64_t order = weyl_order(rs.type());
    if (order > cap)
        throw std::invalid_argument("enumerate_weyl: |W| = " + std::to_string(order) +
                                    " exceeds cap for " + rs.type().name());
    const int r = rs.rank();

    // Simple reflection matrices S_i (column action).
    std::vector<IntMat> gens(r, int_identity(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gens[i][j][i] -= rs.cartan()[i][j];

    std::vector<WeylElement> out;
    std::set<IntMat> seen;
    out.push_back(WeylElement{int_identity(r), 1});
    seen.insert(out.back().mat);
    for (size_t next = 0; next < out.size(); ++next) {
        const WeylElement w = out[next];
        for (int i = 0; i < r; ++i) {
            IntMat m = int_mat_mul(gens[i], w.mat);
            if (seen.insert(m).second) out.push_back(WeylElement{std::move(m), -w.parity});
        }
    }
    internal_check(static_cast<std::int64_t>(out.size()) == order,
                   "enumerate_weyl: generated group has wrong order");
    return out;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu)
{
    std::set<Weight> seen{mu};
    std::vector<Weight> queue{mu};
    for (size_t next = 0; next < queue.size(); ++next) {
        const Weight w = queue[next];
        for (int i = 0; i < rs.rank(); ++i) {
            Weight im = rs.simple_reflect(i, w);
            if (seen.insert(im).second) queue.push_back(im);
        }
    }
    return queue;
}

Weight dominant_representative(const RootSystem& rs, const Weight& mu)
{
    Weight w = mu;
    for (;;) {
        bool moved = false;
        for (int i = 0; i < rs.rank(); ++i) {
            if (w[i] < 0) {
                w = rs.simple_reflect(i, w);
                moved = true;
            }
        }
        if (!moved) return w;
    }
}

} // namespace fht
