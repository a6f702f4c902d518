#include "fht/characters.hpp"

#include <algorithm>
#include <stdexcept>

#include "fht/errors.hpp"

namespace fht {

std::int64_t FormalCharacter::max_abs_coord() const
{
    std::int64_t m = 0;
    for (const auto& [w, mult] : support_) m = std::max(m, w.linf_norm());
    return m;
}

FormalCharacter FormalCharacter::truncated(std::int64_t box) const
{
    FormalCharacter out;
    for (const auto& [w, mult] : support_)
        if (w.linf_norm() <= box) out.add(w, mult);
    return out;
}

FormalCharacter operator+(const FormalCharacter& a, const FormalCharacter& b)
{
    FormalCharacter out = a;
    for (const auto& [w, mult] : b.support_) out.add(w, mult);
    return out;
}

FormalCharacter operator-(const FormalCharacter& a, const FormalCharacter& b)
{
    FormalCharacter out = a;
    for (const auto& [w, mult] : b.support_) out.add(w, -mult);
    return out;
}

FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b)
{
    return char_multiply(a, b);
}

FormalCharacter char_multiply(const FormalCharacter& a, const FormalCharacter& b)
{
    FormalCharacter out;
    for (const auto& [wa, ma] : a.support())
        for (const auto& [wb, mb] : b.support()) out.add(wa + wb, ma * mb);
    return out;
}

PeriodicCharacter::PeriodicCharacter(std::shared_ptr<const CosetTransversal> trans)
    : trans_(std::move(trans)), mults_(trans_->size(), 0)
{
}

PeriodicCharacter operator+(const PeriodicCharacter& a, const PeriodicCharacter& b)
{
    if (a.level() != b.level() || a.mults_.size() != b.mults_.size())
        throw std::invalid_argument("PeriodicCharacter: level mismatch");
    PeriodicCharacter out = a;
    for (size_t i = 0; i < out.mults_.size(); ++i) out.mults_[i] += b.mults_[i];
    return out;
}

AlternatingCharacter::AlternatingCharacter(const RootSystem& rs, std::int64_t level)
    : level_(level), domain_(interior_weights(rs, level))
{
    if (level < 1) throw std::invalid_argument("AlternatingCharacter: level must be >= 1");
    for (const auto& w : domain_) mults_.emplace(w, 0);
}

std::int64_t AlternatingCharacter::value_on_domain(const Weight& interior) const
{
    auto it = mults_.find(interior);
    if (it == mults_.end())
        throw std::invalid_argument("AlternatingCharacter: " + interior.str() +
                                    " is not an interior weight at level " +
                                    std::to_string(level_));
    return it->second;
}

void AlternatingCharacter::set(const Weight& interior, std::int64_t mult)
{
    auto it = mults_.find(interior);
    if (it == mults_.end())
        throw std::invalid_argument("AlternatingCharacter: " + interior.str() +
                                    " is not an interior weight at level " +
                                    std::to_string(level_));
    it->second = mult;
}

bool AlternatingCharacter::is_zero() const
{
    return std::all_of(mults_.begin(), mults_.end(),
                       [](const auto& kv) { return kv.second == 0; });
}

std::int64_t alternating_extend(const RootSystem& rs, const AlternatingCharacter& ac,
                                const Weight& xi)
{
    const FoldOutcome f = affine_fold(rs, xi, ac.level());
    if (!f.is_interior()) return 0;
    return f.sign * ac.value_on_domain(f.weight);
}

AlternatingCharacter restrict_to_alcove(const RootSystem& rs, const FormalCharacter& fc,
                                        std::int64_t level, std::int64_t window)
{
    if (window < 1) throw std::invalid_argument("restrict_to_alcove: window must be >= 1");
    AlternatingCharacter ac(rs, level);
    for (const auto& w : ac.domain()) {
        if (w.linf_norm() <= window) ac.set(w, fc.value_at(w));
    }

    // Consistency of the whole window box against the alternating extension.
    const int r = rs.rank();
    IntVec c(r, -window);
    for (;;) {
        Weight xi{c};
        const std::int64_t expect = alternating_extend(rs, ac, xi);
        if (fc.value_at(xi) != expect)
            throw std::invalid_argument("restrict_to_alcove: input is not alternating on the "
                                        "window; first violation at " + xi.str());
        int i = 0;
        while (i < r && c[i] == window) c[i++] = -window;
        if (i == r) break;
        ++c[i];
    }
    return ac;
}

PeriodicCharacter periodize(const RootSystem& rs, const FormalCharacter& fc, std::int64_t level)
{
    PeriodicCharacter out(coset_transversal(rs, level));
    for (const auto& [w, mult] : fc.support()) out.at(out.transversal().index_of(w)) += mult;
    return out;
}

PeriodicCharacter coset_indicator(const RootSystem& rs, const Weight& xi, std::int64_t level)
{
    PeriodicCharacter out(coset_transversal(rs, level));
    out.at(out.transversal().index_of(xi)) = 1;
    return out;
}

} // namespace fht
