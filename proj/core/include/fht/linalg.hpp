#pragma once

#include <cstdint>
#include <vector>

#include "fht/rational.hpp"

namespace fht {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

IntMat int_identity(int n);
IntMat int_mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& m, const IntVec& v);        // column action m*v
IntVec vec_mat(const IntVec& v, const IntMat& m);        // row action v*m
RatVec vec_mat(const RatVec& v, const RatMat& m);
RatMat to_rational(const IntMat& m);

// Exact Gauss-Jordan inverse; throws std::domain_error on singular input.
RatMat rat_inverse(const RatMat& m);
Rational rat_det(RatMat m);
std::int64_t int_det(const IntMat& m);

// Diagonalization D = U*M*V over Z with d_1 | d_2 | ... | d_r, d_i > 0.
// Row operations are not tracked (they do not change the row lattice); the
// accumulated column operations V and its inverse are returned so that
// Z^r / rowspace(M) can be reduced coordinatewise in the V basis.
struct SmithResult {
    IntVec diag;
    IntMat v;
    IntMat v_inv;
};
SmithResult smith_normal_form(IntMat m);

} // namespace fht
