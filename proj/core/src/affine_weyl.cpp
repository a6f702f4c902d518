#include "fht/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fht/errors.hpp"
#include "fht/weyl.hpp"

namespace fht {

AffineWeylElem compose(const RootSystem& rs, const AffineWeylElem& a, const AffineWeylElem& b)
{
    AffineWeylElem out;
    out.word = a.word;
    out.word.insert(out.word.end(), b.word.begin(), b.word.end());
    out.eta = a.eta + rs.apply_word(a.word, b.eta);
    return out;
}

Weight shifted_action(const RootSystem& rs, const AffineWeylElem& w, const Weight& xi,
                      std::int64_t level)
{
    if (level < 1) throw std::invalid_argument("shifted_action: level must be >= 1");
    Weight mu = rs.apply_word(w.word, xi + rs.rho()) - rs.rho();
    return mu + level * rs.b_flat(w.eta);
}

namespace {

FoldOutcome fold_impl(const RootSystem& rs, const Weight& xi, std::int64_t level,
                      bool affine, const std::function<size_t(size_t)>* pick)
{
    const int r = rs.rank();
    Weight mu = xi + rs.rho();
    int sign = 1;

    // The fold strictly shrinks mu, so this cap is generous; hitting it means
    // a bug, not a hard input.
    std::int64_t guard = 10 * (xi.l1_norm() + r) * std::max<std::int64_t>(level, 1);
    std::vector<size_t> violated;
    for (;;) {
        violated.clear();
        for (int i = 0; i < r; ++i) {
            if (mu[i] == 0) return FoldOutcome::boundary();
            if (mu[i] < 0) violated.push_back(i);
        }
        std::int64_t height = 0;
        if (affine) {
            height = rs.pairing(mu, rs.theta_coroot());
            if (height == level) return FoldOutcome::boundary();
            if (height > level) violated.push_back(r);
        }
        if (violated.empty()) return FoldOutcome::interior(mu - rs.rho(), sign);

        size_t wall = violated[pick ? (*pick)(violated.size()) : 0];
        if (wall < static_cast<size_t>(r)) {
            mu = rs.simple_reflect(static_cast<int>(wall), mu);
        } else {
            // Reflection in the wall <mu, theta^vee> = level.
            mu = mu - (height - level) * rs.theta();
        }
        sign = -sign;
        if (--guard < 0)
            throw InternalError("affine_fold: termination guard exceeded at " + xi.str());
    }
}

} // namespace

FoldOutcome affine_fold(const RootSystem& rs, const Weight& xi, std::int64_t level)
{
    if (level < 1) throw std::invalid_argument("affine_fold: level must be >= 1");
    return fold_impl(rs, xi, level, true, nullptr);
}

FoldOutcome affine_fold_tiebreak(const RootSystem& rs, const Weight& xi, std::int64_t level,
                                 const std::function<size_t(size_t)>& pick)
{
    if (level < 1) throw std::invalid_argument("affine_fold: level must be >= 1");
    return fold_impl(rs, xi, level, true, &pick);
}

FoldOutcome finite_fold(const RootSystem& rs, const Weight& xi)
{
    return fold_impl(rs, xi, 0, false, nullptr);
}

bool is_interior_weight(const RootSystem& rs, const Weight& xi, std::int64_t level)
{
    const Weight mu = xi + rs.rho();
    for (int i = 0; i < rs.rank(); ++i)
        if (mu[i] <= 0) return false;
    return rs.pairing(mu, rs.theta_coroot()) < level;
}

std::vector<Weight> interior_weights(const RootSystem& rs, std::int64_t level)
{
    // Dominant xi with <xi + rho, theta^vee> <= level - 1; every comark is
    // >= 1, so each coordinate is bounded by the slack level - h_dual.
    std::vector<Weight> out;
    const std::int64_t slack = level - rs.h_dual();
    if (slack < 0) return out;

    Weight xi = Weight::zero(rs.rank());
    const auto& tc = rs.theta_coroot();
    auto rec = [&](auto&& self, int pos, std::int64_t used) -> void {
        if (pos == rs.rank()) {
            out.push_back(xi);
            return;
        }
        for (std::int64_t c = 0; used + c * tc[pos] <= slack; ++c) {
            xi[pos] = c;
            self(self, pos + 1, used + c * tc[pos]);
        }
        xi[pos] = 0;
    };
    rec(rec, 0, 0);

    // Graded lexicographic order: by coordinate sum, then lexicographically.
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
        auto sa = a.l1_norm(), sb = b.l1_norm();
        return std::tie(sa, a.coords) < std::tie(sb, b.coords);
    });
    return out;
}

std::vector<std::pair<Weight, int>> enumerate_orbit(const RootSystem& rs, const Weight& xi0,
                                                    std::int64_t level, std::int64_t box)
{
    if (!is_interior_weight(rs, xi0, level))
        throw std::invalid_argument("enumerate_orbit: " + xi0.str() + " is not interior");
    const int r = rs.rank();
    const auto weyl = enumerate_weyl(rs);
    const Weight mu0 = xi0 + rs.rho();

    // Row sums of |gram_weight| bound eta through eta = v * gram_weight / level.
    Rational max_row_sum(0);
    for (int i = 0; i < r; ++i) {
        Rational s(0);
        for (int j = 0; j < r; ++j) {
            Rational g = rs.gram_weight()[j][i];
            s += g < Rational(0) ? -g : g;
        }
        if (max_row_sum < s) max_row_sum = s;
    }

    std::map<Weight, int> found;
    for (const auto& w : weyl) {
        const Weight base = w.apply(mu0) - rs.rho();
        std::int64_t reach = box + base.linf_norm();
        std::int64_t bound = ((Rational(reach) * max_row_sum) / Rational(level)).floor() + 1;

        IntVec eta(r, -bound);
        for (;;) {
            Weight cand = base + level * rs.b_flat(CorootElem(eta));
            if (cand.linf_norm() <= box) {
                auto [it, inserted] = found.emplace(cand, w.parity);
                internal_check(inserted, "enumerate_orbit: duplicate orbit point (free action)");
                (void)it;
            }
            int i = 0;
            while (i < r && eta[i] == bound) eta[i++] = -bound;
            if (i == r) break;
            ++eta[i];
        }
    }

    std::vector<std::pair<Weight, int>> out(found.begin(), found.end());
    return out;
}

} // namespace fht
