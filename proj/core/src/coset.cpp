#include "fht/coset.hpp"

#include <stdexcept>

#include "fht/errors.hpp"

namespace fht {

CosetTransversal::CosetTransversal(const RootSystem& rs, std::int64_t level)
    : rs_(&rs), level_(level)
{
    if (level == 0) throw std::invalid_argument("CosetTransversal: level must be nonzero");
    const int r = rs.rank();
    IntMat m = rs.gram_coroot();
    for (auto& row : m)
        for (auto& x : row) x *= level;
    smith_ = smith_normal_form(std::move(m));
    for (auto d : smith_.diag)
        internal_check(d > 0, "CosetTransversal: degenerate level lattice");

    strides_.assign(r, 1);
    for (int i = r - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * smith_.diag[i + 1];
    const std::int64_t count = strides_.empty() ? 1 : strides_[0] * smith_.diag[0];

    reps_.reserve(count);
    IntVec w(r, 0);
    for (std::int64_t n = 0; n < count; ++n) {
        // Canonical box element, pulled back and then shifted to the nearest
        // lattice point so representatives keep small coordinates.
        Weight rep(vec_mat(w, smith_.v_inv));
        RatVec up(rep.coords.begin(), rep.coords.end());
        up = vec_mat(up, rs.gram_weight());
        IntVec eta(r);
        for (int i = 0; i < r; ++i) {
            const Rational q = up[i] / Rational(level);
            eta[i] = (q + Rational(1, 2)).floor();
        }
        rep = rep - level * rs.b_flat(CorootElem(std::move(eta)));
        reps_.push_back(std::move(rep));

        int i = r - 1;
        while (i >= 0 && w[i] == smith_.diag[i] - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
}

size_t CosetTransversal::index_of(const Weight& xi) const
{
    const int r = rs_->rank();
    IntVec w = vec_mat(xi.coords, smith_.v);
    std::int64_t idx = 0;
    for (int i = 0; i < r; ++i) {
        std::int64_t m = w[i] % smith_.diag[i];
        if (m < 0) m += smith_.diag[i];
        idx += m * strides_[i];
    }
    return static_cast<size_t>(idx);
}

std::pair<size_t, CorootElem> CosetTransversal::reduce(const Weight& xi) const
{
    const size_t idx = index_of(xi);
    const Weight diff = xi - reps_[idx];
    // eta = diff * gram_weight / level, exactly integral by construction.
    RatVec v(diff.coords.begin(), diff.coords.end());
    RatVec eta_rat = vec_mat(v, rs_->gram_weight());
    IntVec eta(rs_->rank());
    for (int i = 0; i < rs_->rank(); ++i)
        eta[i] = (eta_rat[i] / Rational(level_)).as_integer();
    return {idx, CorootElem(std::move(eta))};
}

std::shared_ptr<const CosetTransversal> coset_transversal(const RootSystem& rs,
                                                          std::int64_t level)
{
    return std::make_shared<CosetTransversal>(rs, level);
}

} // namespace fht
