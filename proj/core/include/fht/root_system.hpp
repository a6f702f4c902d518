#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fht/linalg.hpp"
#include "fht/rational.hpp"

namespace fht {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple Lie type, e.g. A2, E8.  Validity: E only 6..8, F only 4, G only 2,
// D >= 3, B and C >= 2, A >= 1.
struct LieType {
    Series series;
    int rank;

    std::string name() const;
    static LieType parse(const std::string& s); // "A2", "E8", ...
    bool operator==(const LieType&) const = default;
};

// Element of the weight lattice Pi^*, coordinates in the fundamental-weight
// basis.
struct Weight {
    IntVec coords;

    Weight() = default;
    explicit Weight(IntVec c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(IntVec(rank, 0)); }

    size_t rank() const { return coords.size(); }
    std::int64_t operator[](size_t i) const { return coords[i]; }
    std::int64_t& operator[](size_t i) { return coords[i]; }

    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
    friend Weight operator*(std::int64_t s, const Weight& w);
    Weight operator-() const { return std::int64_t(-1) * *this; }

    std::int64_t linf_norm() const;
    std::int64_t l1_norm() const;
    bool is_zero() const;
    std::string str() const;

    bool operator==(const Weight&) const = default;
    // Lexicographic; gives maps over Weight a deterministic order.
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

// Element of the (co)root lattice Pi, coordinates in the simple-coroot basis.
struct CorootElem {
    IntVec coords;

    CorootElem() = default;
    explicit CorootElem(IntVec c) : coords(std::move(c)) {}
    static CorootElem zero(int rank) { return CorootElem(IntVec(rank, 0)); }
    static CorootElem basis(int rank, int i);

    size_t rank() const { return coords.size(); }
    std::int64_t operator[](size_t i) const { return coords[i]; }
    std::int64_t& operator[](size_t i) { return coords[i]; }

    friend CorootElem operator+(const CorootElem& a, const CorootElem& b);
    friend CorootElem operator-(const CorootElem& a, const CorootElem& b);
    friend CorootElem operator*(std::int64_t s, const CorootElem& w);
    CorootElem operator-() const { return std::int64_t(-1) * *this; }

    std::int64_t linf_norm() const;
    bool is_zero() const;
    std::string str() const;

    bool operator==(const CorootElem&) const = default;
    friend bool operator<(const CorootElem& a, const CorootElem& b) { return a.coords < b.coords; }
};

// A positive root together with its simple-root coordinates and its coroot.
struct PositiveRoot {
    Weight wt;           // fundamental-weight coordinates
    IntVec root_coords;  // simple-root basis
    CorootElem coroot;   // simple-coroot basis
    std::int64_t height; // sum of root_coords
};

// Exact root-system data for one simple type, Bourbaki simple-root numbering.
// Immutable after construction; safe to share across threads.
class RootSystem {
public:
    static RootSystem build(LieType t);

    const LieType& type() const { return type_; }
    int rank() const { return rank_; }

    // cartan()[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in
    // fundamental-weight coordinates.
    const IntMat& cartan() const { return cartan_; }
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
    const Weight& rho() const { return rho_; }
    const Weight& theta() const { return theta_; }
    const CorootElem& theta_coroot() const { return theta_coroot_; }
    std::int64_t h_dual() const { return h_dual_; }

    // Basic inner product B, normalized so short coroots have squared length 2.
    const IntMat& gram_coroot() const { return gram_coroot_; } // B on Pi, simple-coroot basis
    const RatMat& gram_weight() const { return gram_weight_; } // B on t^*, fundamental-weight basis

    // Canonical pairing <Pi^*, Pi>.
    std::int64_t pairing(const Weight& xi, const CorootElem& eta) const;
    // Exact B(xi, mu) on the weight side.
    Rational inner_product_weights(const Weight& xi, const Weight& mu) const;
    // B-flat embedding Pi -> Pi^*:  pairing(b_flat(eta), eta') = B(eta, eta').
    Weight b_flat(const CorootElem& eta) const;
    // Inverse image under b_flat, as rational simple-coroot coordinates.
    RatVec b_sharp(const Weight& xi) const;

    // Simple reflection s_i on each lattice.
    Weight simple_reflect(int i, const Weight& w) const;
    CorootElem simple_reflect(int i, const CorootElem& c) const;
    // Reduced or unreduced word, applied leftmost-last: word {i,j} acts as s_i s_j.
    Weight apply_word(const std::vector<int>& word, const Weight& w) const;
    CorootElem apply_word(const std::vector<int>& word, const CorootElem& c) const;

    bool is_dominant(const Weight& w) const;
    // Level of a dominant weight: <lambda, theta^vee> = B(lambda, theta).
    std::int64_t theta_level(const Weight& w) const { return pairing(w, theta_coroot_); }

private:
    RootSystem() = default;

    LieType type_{};
    int rank_ = 0;
    IntMat cartan_;
    std::vector<Weight> simple_roots_;
    std::vector<PositiveRoot> positive_roots_;
    Weight rho_;
    Weight theta_;
    CorootElem theta_coroot_;
    std::int64_t h_dual_ = 0;
    IntMat gram_coroot_;
    RatMat gram_weight_;
};

// Number of positive roots of a simple type (closed form, used as an oracle).
std::int64_t positive_root_count(LieType t);
// Order of the finite Weyl group (closed form).
std::int64_t weyl_order(LieType t);

} // namespace fht
