#include "fht/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "fht/errors.hpp"

namespace fht {

IntMat int_identity(int n)
{
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b)
{
    const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IntMat c(n, IntVec(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
        }
    return c;
}

IntVec mat_vec(const IntMat& m, const IntVec& v)
{
    IntVec out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

IntVec vec_mat(const IntVec& v, const IntMat& m)
{
    IntVec out(m.empty() ? 0 : m[0].size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
    }
    return out;
}

RatVec vec_mat(const RatVec& v, const RatMat& m)
{
    RatVec out(m.empty() ? 0 : m[0].size(), Rational(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
    return out;
}

RatMat to_rational(const IntMat& m)
{
    RatMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        out[i] = RatVec(m[i].begin(), m[i].end());
    return out;
}

RatMat rat_inverse(const RatMat& m)
{
    const size_t n = m.size();
    RatMat a = m;
    RatMat inv(n, RatVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);

    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("rat_inverse: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = a[col][col];
        for (size_t j = 0; j < n; ++j) { a[col][j] /= p; inv[col][j] /= p; }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rational f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Rational rat_det(RatMat a)
{
    const size_t n = a.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) { std::swap(a[pivot], a[col]); det = -det; }
        det *= a[col][col];
        Rational p = a[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            Rational f = a[row][col] / p;
            for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
        }
    }
    return det;
}

std::int64_t int_det(const IntMat& m)
{
    return rat_det(to_rational(m)).as_integer();
}

namespace {

void col_add(IntMat& m, IntMat& v, IntMat& v_inv, size_t src, size_t dst, std::int64_t f)
{
    // M <- M*C and V <- V*C with C = I + f*E_{src,dst}; V^-1 <- C^-1 * V^-1.
    for (auto& row : m) row[dst] += f * row[src];
    for (auto& row : v) row[dst] += f * row[src];
    for (size_t j = 0; j < v_inv[src].size(); ++j) v_inv[src][j] -= f * v_inv[dst][j];
}

void col_swap(IntMat& m, IntMat& v, IntMat& v_inv, size_t a, size_t b)
{
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : v) std::swap(row[a], row[b]);
    std::swap(v_inv[a], v_inv[b]);
}

void col_negate(IntMat& m, IntMat& v, IntMat& v_inv, size_t c)
{
    for (auto& row : m) row[c] = -row[c];
    for (auto& row : v) row[c] = -row[c];
    for (auto& x : v_inv[c]) x = -x;
}

} // namespace

SmithResult smith_normal_form(IntMat m)
{
    const size_t n = m.size();
    IntMat v = int_identity(static_cast<int>(n));
    IntMat v_inv = int_identity(static_cast<int>(n));

    for (size_t k = 0; k < n; ++k) {
        for (;;) {
            // Locate the smallest nonzero entry of the trailing block.
            size_t pi = n, pj = n;
            std::int64_t best = 0;
            for (size_t i = k; i < n; ++i)
                for (size_t j = k; j < n; ++j)
                    if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                        best = std::llabs(m[i][j]);
                        pi = i; pj = j;
                    }
            if (pi == n) break; // trailing block is zero

            std::swap(m[pi], m[k]);
            if (pj != k) col_swap(m, v, v_inv, pj, k);
            if (m[k][k] < 0) col_negate(m, v, v_inv, k);

            bool reduced = true;
            for (size_t i = k + 1; i < n; ++i) {
                std::int64_t q = m[i][k] / m[k][k];
                if (q != 0)
                    for (size_t j = 0; j < n; ++j) m[i][j] -= q * m[k][j];
                if (m[i][k] != 0) reduced = false;
            }
            for (size_t j = k + 1; j < n; ++j) {
                std::int64_t q = m[k][j] / m[k][k];
                if (q != 0) col_add(m, v, v_inv, k, j, -q);
                if (m[k][j] != 0) reduced = false;
            }
            if (reduced) break;
        }
    }

    // Enforce the divisibility chain d_k | d_{k+1}.  Only nonsingular inputs
    // reach this point in practice (level lattices), so diagonals are > 0.
    for (size_t k = 0; k + 1 < n; ++k) {
        for (size_t j = k + 1; j < n; ++j) {
            if (m[k][k] == 0 || m[j][j] == 0 || m[j][j] % m[k][k] == 0) continue;
            // Turn diag(d_k, d_j) into diag(gcd, +-lcm) by elementary ops.
            col_add(m, v, v_inv, j, k, 1); // row j gains d_j in column k
            while (m[j][k] != 0) {
                std::int64_t q = m[k][k] / m[j][k];
                if (q != 0)
                    for (size_t c = 0; c < n; ++c) m[k][c] -= q * m[j][c];
                std::swap(m[k], m[j]);
            }
            internal_check(m[k][k] > 0 && m[k][j] % m[k][k] == 0,
                           "smith_normal_form: chain step failed");
            std::int64_t q = m[k][j] / m[k][k];
            if (q != 0) col_add(m, v, v_inv, k, j, -q);
            if (m[j][j] < 0) col_negate(m, v, v_inv, j);
            internal_check(m[k][j] == 0 && m[j][k] == 0 && m[j][j] % m[k][k] == 0,
                           "smith_normal_form: block cleanup failed");
        }
    }

    SmithResult out;
    out.diag.resize(n);
    for (size_t i = 0; i < n; ++i) {
        internal_check(m[i][i] >= 0, "smith_normal_form: negative diagonal");
        for (size_t j = 0; j < n; ++j)
            internal_check(i == j || m[i][j] == 0, "smith_normal_form: not diagonal");
        out.diag[i] = m[i][i];
    }
    out.v = std::move(v);
    out.v_inv = std::move(v_inv);
    return out;
}

} // namespace fht
