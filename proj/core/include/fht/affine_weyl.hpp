#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "fht/root_system.hpp"

namespace fht {

// Element (wbar, eta) of W_aff = W x| Pi.  The finite part is a word in simple
// reflections; only the parity (-1)^{l(w)} is ever needed downstream, and
// lattice translations are even, so parity is the word-length parity.
struct AffineWeylElem {
    std::vector<int> word; // applied leftmost-last
    CorootElem eta;

    static AffineWeylElem identity(int rank)
    {
        return AffineWeylElem{{}, CorootElem::zero(rank)};
    }
    int parity() const { return word.size() % 2 == 0 ? 1 : -1; }
};

// Composition in W x| Pi: (w1,e1)(w2,e2) = (w1 w2, e1 + w1(e2)).
AffineWeylElem compose(const RootSystem& rs, const AffineWeylElem& a, const AffineWeylElem& b);

// Result of folding a weight to the fundamental domain of the rho-shifted
// level-l affine action: an interior representative with a sign, or a
// boundary flag (the weight sits on an affine wall and carries multiplicity 0).
struct FoldOutcome {
    enum class Kind { Interior, Boundary };
    Kind kind = Kind::Boundary;
    Weight weight; // present iff Interior
    int sign = 0;  // +-1 iff Interior

    static FoldOutcome interior(Weight w, int s)
    {
        return FoldOutcome{Kind::Interior, std::move(w), s};
    }
    static FoldOutcome boundary() { return FoldOutcome{}; }
    bool is_interior() const { return kind == Kind::Interior; }
    bool operator==(const FoldOutcome&) const = default;
};

// w .__l xi = wbar(xi + rho) - rho + l * b_flat(eta).
Weight shifted_action(const RootSystem& rs, const AffineWeylElem& w, const Weight& xi,
                      std::int64_t level);

// Fold xi into the interior of the shifted, scaled alcove at level l >= 1.
// Deterministic tie-breaking: lowest-index violated wall, the affine wall last.
FoldOutcome affine_fold(const RootSystem& rs, const Weight& xi, std::int64_t level);

// Same fold with a caller-supplied choice among the violated walls; exposed so
// that sign well-definedness can be property-tested under random orders.
FoldOutcome affine_fold_tiebreak(const RootSystem& rs, const Weight& xi, std::int64_t level,
                                 const std::function<size_t(size_t)>& pick);

// rho-shifted fold under the finite Weyl group (dominant chamber interior).
FoldOutcome finite_fold(const RootSystem& rs, const Weight& xi);

// Weights strictly inside the shifted scaled alcove at level l:
// 0 < <xi+rho, alpha_i^vee> for all i and <xi+rho, theta^vee> < l.
std::vector<Weight> interior_weights(const RootSystem& rs, std::int64_t level);
bool is_interior_weight(const RootSystem& rs, const Weight& xi, std::int64_t level);

// All pairs (w .__l xi0, parity(w)) whose coordinates lie in [-box, box]^rank.
// Requires xi0 strictly interior; the listing is duplicate-free and sorted.
std::vector<std::pair<Weight, int>> enumerate_orbit(const RootSystem& rs, const Weight& xi0,
                                                    std::int64_t level, std::int64_t box);

} // namespace fht
