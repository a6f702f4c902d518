#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fht/linalg.hpp"
#include "fht/root_system.hpp"

namespace fht {

// Canonical transversal of Pi^* / (level * B_flat(Pi)), built from the Smith
// normal form of level * gram_coroot.  Representatives are the canonical box
// {w * V^-1 : 0 <= w_i < d_i}, enumerated in mixed-radix order, so equality of
// periodic data is plain vector equality.
class CosetTransversal {
public:
    CosetTransversal(const RootSystem& rs, std::int64_t level);

    std::int64_t level() const { return level_; }
    size_t size() const { return reps_.size(); }
    const std::vector<Weight>& reps() const { return reps_; }
    const Weight& rep(size_t idx) const { return reps_[idx]; }

    // Index of the canonical representative of [xi].
    size_t index_of(const Weight& xi) const;
    // Canonical representative together with the lattice offset:
    // xi = rep + level * b_flat(eta).
    std::pair<size_t, CorootElem> reduce(const Weight& xi) const;

private:
    const RootSystem* rs_;
    std::int64_t level_;
    SmithResult smith_;
    std::vector<std::int64_t> strides_;
    std::vector<Weight> reps_;
};

std::shared_ptr<const CosetTransversal> coset_transversal(const RootSystem& rs,
                                                          std::int64_t level);

} // namespace fht
