#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fht/root_system.hpp"

namespace fht {

// One finite Weyl group element: action matrix on fundamental-weight
// coordinates (column convention, w(mu) = mat * mu) plus det(w) = parity.
struct WeylElement {
    IntMat mat;
    int parity = 1;

    Weight apply(const Weight& w) const { return Weight(mat_vec(mat, w.coords)); }
};

// Enumerate all of W by breadth-first closure over the simple reflections.
// Throws if |W| exceeds `cap` (E7/E8 are intentionally out of reach).
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::int64_t cap = 2000000);

// W-orbit of a weight, with the orbit-constant multiplicity semantics used by
// weight systems: returns every distinct w(mu).
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu);

// Unshifted dominant representative of the W-orbit (no sign; always exists).
Weight dominant_representative(const RootSystem& rs, const Weight& mu);

} // namespace fht
