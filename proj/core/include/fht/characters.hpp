#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "fht/affine_weyl.hpp"
#include "fht/coset.hpp"
#include "fht/root_system.hpp"

namespace fht {

// Finitely supported formal character sum a_xi e_xi; zero multiplicities are
// never stored.  Multiplication is convolution.
class FormalCharacter {
public:
    FormalCharacter() = default;
    static FormalCharacter unit(int rank) { return delta(Weight::zero(rank), 1); }
    static FormalCharacter delta(const Weight& w, std::int64_t mult = 1)
    {
        FormalCharacter c;
        c.add(w, mult);
        return c;
    }

    void add(const Weight& w, std::int64_t mult)
    {
        if (mult == 0) return;
        auto [it, inserted] = support_.emplace(w, mult);
        if (!inserted && (it->second += mult) == 0) support_.erase(it);
    }

    std::int64_t value_at(const Weight& w) const
    {
        auto it = support_.find(w);
        return it == support_.end() ? 0 : it->second;
    }

    const std::map<Weight, std::int64_t>& support() const { return support_; }
    size_t term_count() const { return support_.size(); }
    bool is_zero() const { return support_.empty(); }
    std::int64_t max_abs_coord() const;

    FormalCharacter truncated(std::int64_t box) const;

    friend FormalCharacter operator+(const FormalCharacter& a, const FormalCharacter& b);
    friend FormalCharacter operator-(const FormalCharacter& a, const FormalCharacter& b);
    friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b);
    bool operator==(const FormalCharacter&) const = default;

private:
    std::map<Weight, std::int64_t> support_;
};

// Convolution product of multiplicity functions.
FormalCharacter char_multiply(const FormalCharacter& a, const FormalCharacter& b);

// l*Pi-periodic character: one multiplicity per coset of Pi^*/l*Pi, stored
// densely over the canonical transversal.
class PeriodicCharacter {
public:
    PeriodicCharacter(std::shared_ptr<const CosetTransversal> trans);

    std::int64_t level() const { return trans_->level(); }
    const CosetTransversal& transversal() const { return *trans_; }
    const std::vector<std::int64_t>& mults() const { return mults_; }
    std::int64_t& at(size_t idx) { return mults_[idx]; }
    std::int64_t value_at(const Weight& xi) const { return mults_[trans_->index_of(xi)]; }

    friend PeriodicCharacter operator+(const PeriodicCharacter& a, const PeriodicCharacter& b);
    bool operator==(const PeriodicCharacter& o) const
    {
        return level() == o.level() && mults_ == o.mults_;
    }

private:
    std::shared_ptr<const CosetTransversal> trans_;
    std::vector<std::int64_t> mults_;
};

// W_aff-alternating character at level l, stored by its multiplicities on the
// interior weights of the shifted scaled alcove (its fundamental domain).
class AlternatingCharacter {
public:
    AlternatingCharacter(const RootSystem& rs, std::int64_t level);

    std::int64_t level() const { return level_; }
    const std::vector<Weight>& domain() const { return domain_; }
    std::int64_t value_on_domain(const Weight& interior) const;
    void set(const Weight& interior, std::int64_t mult);
    const std::map<Weight, std::int64_t>& mults() const { return mults_; }
    bool is_zero() const;

    static AlternatingCharacter delta(const RootSystem& rs, std::int64_t level, const Weight& w)
    {
        AlternatingCharacter ac(rs, level);
        ac.set(w, 1);
        return ac;
    }

    bool operator==(const AlternatingCharacter& o) const
    {
        return level_ == o.level_ && mults_ == o.mults_;
    }

private:
    std::int64_t level_;
    std::vector<Weight> domain_;
    std::map<Weight, std::int64_t> mults_; // dense over domain_
};

// Value of the unique alternating extension of ac at an arbitrary weight:
// 0 on walls, sign * stored multiplicity otherwise.
std::int64_t alternating_extend(const RootSystem& rs, const AlternatingCharacter& ac,
                                const Weight& xi);

// Read an alternating character off a window truncation, verifying every
// lattice point of the window box against the extension of the result.
// Throws std::invalid_argument naming the first violating weight.
AlternatingCharacter restrict_to_alcove(const RootSystem& rs, const FormalCharacter& fc,
                                        std::int64_t level, std::int64_t window);

// Sum the multiplicities of fc over each coset of Pi^*/l*Pi.
PeriodicCharacter periodize(const RootSystem& rs, const FormalCharacter& fc, std::int64_t level);
// Indicator of a single coset.
PeriodicCharacter coset_indicator(const RootSystem& rs, const Weight& xi, std::int64_t level);

} // namespace fht
