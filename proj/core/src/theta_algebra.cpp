#include "fht/theta_algebra.hpp"

#include <stdexcept>

#include "fht/errors.hpp"

namespace fht {

ThetaElement::ThetaElement(std::int64_t level) : level_(level)
{
    if (level == 0) throw std::invalid_argument("ThetaElement: level must be nonzero");
}

ThetaElement ThetaElement::generator(std::int64_t level, const CorootElem& eta, const Weight& mu)
{
    ThetaElement t(level);
    t.add(eta, mu, 1);
    return t;
}

void ThetaElement::add(const CorootElem& eta, const Weight& mu, std::int64_t c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Key{eta, mu}, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

ThetaElement operator+(const ThetaElement& a, const ThetaElement& b)
{
    if (a.level_ != b.level_) throw std::invalid_argument("ThetaElement: level mismatch");
    ThetaElement out = a;
    for (const auto& [key, c] : b.terms_) out.add(key.first, key.second, c);
    return out;
}

ThetaElement operator-(const ThetaElement& a, const ThetaElement& b)
{
    if (a.level_ != b.level_) throw std::invalid_argument("ThetaElement: level mismatch");
    ThetaElement out = a;
    for (const auto& [key, c] : b.terms_) out.add(key.first, key.second, -c);
    return out;
}

std::string ThetaElement::str() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += (c == 1 ? "" : std::to_string(c) + "*") + "theta" +
             "(" + key.first.str() + "," + key.second.str() + ")";
    }
    return s;
}

ThetaElement theta_multiply(const RootSystem& rs, const ThetaElement& a, const ThetaElement& b)
{
    if (a.level() != b.level())
        throw std::invalid_argument("theta_multiply: level mismatch");
    const std::int64_t l = a.level();
    ThetaElement out(l);
    for (const auto& [ka, ca] : a.terms()) {
        const auto& [eta_a, mu_a] = ka;
        for (const auto& [kb, cb] : b.terms()) {
            const auto& [eta_b, mu_b] = kb;
            if (mu_a == mu_b + l * rs.b_flat(eta_b)) out.add(eta_a + eta_b, mu_b, ca * cb);
        }
    }
    return out;
}

ThetaElement theta_star(const RootSystem& rs, const ThetaElement& a)
{
    const std::int64_t l = a.level();
    ThetaElement out(l);
    for (const auto& [key, c] : a.terms())
        out.add(-key.first, key.second + l * rs.b_flat(key.first), c);
    return out;
}

BlockMatrixModel::BlockMatrixModel(const RootSystem& rs, std::int64_t level, std::int64_t window)
    : trans_(coset_transversal(rs, level)), window_(window)
{
    if (window < 1) throw std::invalid_argument("BlockMatrixModel: window must be >= 1");
    size_t d = 1;
    for (int i = 0; i < rs.rank(); ++i) d *= static_cast<size_t>(2 * window + 1);
    dim_ = d;
    blocks_.assign(trans_->size(), IntMat(dim_, IntVec(dim_, 0)));
}

size_t BlockMatrixModel::basis_index(const CorootElem& eta) const
{
    size_t idx = 0;
    for (size_t i = 0; i < eta.rank(); ++i) {
        internal_check(eta[i] >= -window_ && eta[i] <= window_,
                       "BlockMatrixModel: basis index out of window");
        idx = idx * static_cast<size_t>(2 * window_ + 1) +
              static_cast<size_t>(eta[i] + window_);
    }
    return idx;
}

bool BlockMatrixModel::is_zero() const
{
    for (const auto& b : blocks_)
        for (const auto& row : b)
            for (auto x : row)
                if (x != 0) return false;
    return true;
}

BlockMatrixModel operator*(const BlockMatrixModel& a, const BlockMatrixModel& b)
{
    if (a.level() != b.level() || a.window_ != b.window_)
        throw std::invalid_argument("BlockMatrixModel: shape mismatch");
    BlockMatrixModel out = a;
    for (size_t c = 0; c < a.blocks_.size(); ++c)
        out.blocks_[c] = int_mat_mul(a.blocks_[c], b.blocks_[c]);
    return out;
}

BlockMatrixModel matrix_model(const RootSystem& rs, const ThetaElement& a, std::int64_t window)
{
    BlockMatrixModel model(rs, a.level(), window);
    const auto& trans = model.transversal();
    const std::int64_t l = a.level();
    for (const auto& [key, c] : a.terms()) {
        const auto& [eta, mu] = key;
        const auto [coset, offset] = trans.reduce(mu);
        const CorootElem target = offset + eta; // mu + l*b_flat(eta) = rep + l*b_flat(target)
        if (!model.in_window(offset) || !model.in_window(target))
            throw std::invalid_argument("matrix_model: window " + std::to_string(window) +
                                        " too small for term theta(" + eta.str() + "," +
                                        mu.str() + ")");
        model.block(coset)[model.basis_index(target)][model.basis_index(offset)] += c;
    }
    return model;
}

PeriodicCharacter k0_generator_character(const RootSystem& rs, const Weight& xi,
                                         std::int64_t level)
{
    return coset_indicator(rs, xi, level);
}

} // namespace fht
