#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "fht/characters.hpp"
#include "fht/root_system.hpp"

namespace fht {

// The level-k weights Pi^*_k = {dominant lambda : B(lambda, theta) <= k},
// in graded lexicographic order.
struct LevelWeights {
    std::int64_t k = 0;
    std::int64_t level = 0; // k + h_dual
    std::vector<Weight> weights;

    bool contains(const Weight& w) const;
    size_t index_of(const Weight& w) const; // throws if absent
};

LevelWeights level_weights(const RootSystem& rs, std::int64_t k);

// Element of R_k(G) as a multiplicity vector over Pi^*_k.
class FusionElement {
public:
    FusionElement(std::int64_t k) : k_(k) {}
    static FusionElement basis(std::int64_t k, const Weight& w)
    {
        FusionElement e(k);
        e.add(w, 1);
        return e;
    }

    std::int64_t k() const { return k_; }
    void add(const Weight& w, std::int64_t c)
    {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(w, c);
        if (!inserted && (it->second += c) == 0) coeffs_.erase(it);
    }
    std::int64_t coeff(const Weight& w) const
    {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? 0 : it->second;
    }
    const std::map<Weight, std::int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool operator==(const FusionElement&) const = default;
    std::string str() const;

private:
    std::int64_t k_;
    std::map<Weight, std::int64_t> coeffs_;
};

// Weights of the irreducible V_lambda with multiplicities (Freudenthal).
struct WeightSystem {
    Weight highest;
    std::map<Weight, std::int64_t> mults;

    std::int64_t dimension() const;
    FormalCharacter character() const;
};

// Memoizing store for weight systems, optionally persisted one JSON file per
// (lie_type, lambda) under <dir>/v1/<type>/.  A corrupt or stale cache file is
// recomputed and overwritten, never an error.  Reads are concurrent; writes
// serialize on an internal mutex.
class FreudenthalCache {
public:
    FreudenthalCache() = default;
    explicit FreudenthalCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::shared_ptr<const WeightSystem> get(const RootSystem& rs, const Weight& lambda);
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::shared_mutex mu_;
    std::map<std::pair<std::string, Weight>, std::shared_ptr<const WeightSystem>> mem_;
    std::filesystem::path dir_;
};

// Weight multiplicities of V_lambda by the Freudenthal recursion, checked
// against the Weyl dimension formula.
WeightSystem freudenthal_weights(const RootSystem& rs, const Weight& lambda);
std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Tensor product decomposition V_lambda (x) V_mu by signed folding of
// lambda + (weights of V_mu) into the dominant chamber.
std::map<Weight, std::int64_t> tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                                const Weight& mu, FreudenthalCache* cache = nullptr);

// Fusion product in R_k(G): the same sum folded affinely at level k + h_dual.
FusionElement fusion(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                     std::int64_t k, FreudenthalCache* cache = nullptr);

// Quotient map R(G) -> R_k(G): a single affine fold of a dominant weight.
FusionElement project_to_level(const RootSystem& rs, const Weight& nu, std::int64_t k);

// The Verlinde S-matrix at level k (rows/columns ordered as level_weights),
// normalized by unitarity of the row of the zero weight.
struct SMatrix {
    std::int64_t k = 0;
    std::int64_t level = 0;
    std::vector<Weight> weights;
    std::vector<std::vector<std::complex<double>>> entries;

    double unitarity_error() const;
    double symmetry_error() const;
};

SMatrix s_matrix(const RootSystem& rs, std::int64_t k);

// Independent fusion oracle: N_{lambda mu}^nu from the Verlinde formula.
// Throws OracleError if the pre-rounding deviation exceeds `tol`.
FusionElement verlinde_fusion(const SMatrix& s, const Weight& lambda, const Weight& mu,
                              double tol = 1e-6);
FusionElement verlinde_fusion(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                              std::int64_t k, double tol = 1e-6);

// chi(exp x) = sum_mu mult(mu) e^{2 pi i <mu, x>} for x in t with rational
// simple-coroot coordinates (the weight-sum form has no singularities).
std::complex<double> char_value(const WeightSystem& ws, const RatVec& x);

// The Verlinde-ideal special points: B_sharp(xi + rho)/(k + h_dual), xi in
// Pi^*_k, as rational coordinate vectors in t.
std::vector<RatVec> special_points(const RootSystem& rs, std::int64_t k);

// True iff chi_nu agrees with the character of its level-k fold image at
// every special point, i.e. chi_nu - chi(fold image) lies in the ideal I_k.
bool ideal_vanishing_check(const RootSystem& rs, const Weight& nu, std::int64_t k,
                           FreudenthalCache* cache = nullptr, double tol = 1e-9);

} // namespace fht
