#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fht/characters.hpp"
#include "fht/coset.hpp"
#include "fht/root_system.hpp"

namespace fht {

// Integer combination of the generators theta_{eta,mu} of the level-l
// homogeneous ideal of the twisted group algebra: theta_{eta,mu} acts on
// l^2(Pi^*) as the rank-1 map delta_mu -> delta_{mu + l*b_flat(eta)}.
class ThetaElement {
public:
    using Key = std::pair<CorootElem, Weight>;

    explicit ThetaElement(std::int64_t level);
    static ThetaElement generator(std::int64_t level, const CorootElem& eta, const Weight& mu);

    std::int64_t level() const { return level_; }
    void add(const CorootElem& eta, const Weight& mu, std::int64_t c);
    const std::map<Key, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend ThetaElement operator+(const ThetaElement& a, const ThetaElement& b);
    friend ThetaElement operator-(const ThetaElement& a, const ThetaElement& b);
    bool operator==(const ThetaElement&) const = default;
    std::string str() const;

private:
    std::int64_t level_;
    std::map<Key, std::int64_t> terms_;
};

// Bilinear extension of
//   theta_{eta,mu} * theta_{eta',mu'} = [mu == mu' + l*b_flat(eta')] theta_{eta+eta', mu'}.
ThetaElement theta_multiply(const RootSystem& rs, const ThetaElement& a, const ThetaElement& b);

// *-structure: theta_{eta,mu}^* = theta_{-eta, mu + l*b_flat(eta)}.
ThetaElement theta_star(const RootSystem& rs, const ThetaElement& a);

// Faithful block matrix model on the window truncation of l^2(Pi^*): one
// square integer block per coset [xi] of Pi^*/l*Pi over the basis
// {delta_{xi + l*eta} : |eta|_inf <= window}.
class BlockMatrixModel {
public:
    BlockMatrixModel(const RootSystem& rs, std::int64_t level, std::int64_t window);

    std::int64_t level() const { return trans_->level(); }
    std::int64_t window() const { return window_; }
    const CosetTransversal& transversal() const { return *trans_; }
    size_t block_count() const { return blocks_.size(); }
    size_t block_dim() const { return dim_; }
    const IntMat& block(size_t coset) const { return blocks_[coset]; }
    IntMat& block(size_t coset) { return blocks_[coset]; }

    // Index of delta_{rep + l*b_flat(eta)} within its block.
    size_t basis_index(const CorootElem& eta) const;
    bool in_window(const CorootElem& eta) const { return eta.linf_norm() <= window_; }

    bool is_zero() const;
    friend BlockMatrixModel operator*(const BlockMatrixModel& a, const BlockMatrixModel& b);
    bool operator==(const BlockMatrixModel& o) const
    {
        return level() == o.level() && window_ == o.window_ && blocks_ == o.blocks_;
    }

private:
    std::shared_ptr<const CosetTransversal> trans_;
    std::int64_t window_;
    size_t dim_;
    std::vector<IntMat> blocks_;
};

// Matrix model of a theta element; throws std::invalid_argument naming the
// first term whose source or target leaves the window.
BlockMatrixModel matrix_model(const RootSystem& rs, const ThetaElement& a, std::int64_t window);

// K_0 generator [L^2([xi])] -> its formal T-character, the indicator of the
// coset [xi] in Pi^*.
PeriodicCharacter k0_generator_character(const RootSystem& rs, const Weight& xi,
                                         std::int64_t level);

} // namespace fht
