#include "fht/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "fht/errors.hpp"

namespace fht {

std::string LieType::name() const
{
    return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

LieType LieType::parse(const std::string& s)
{
    if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
        throw std::invalid_argument("LieType: cannot parse '" + s + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'G')
        throw std::invalid_argument("LieType: unknown series '" + std::string(1, c) + "'");
    int rank = 0;
    try {
        size_t pos = 0;
        rank = std::stoi(s.substr(1), &pos);
        if (pos + 1 != s.size()) throw std::invalid_argument("");
    } catch (const std::logic_error&) {
        throw std::invalid_argument("LieType: cannot parse rank in '" + s + "'");
    }
    return LieType{static_cast<Series>(c), rank};
}

namespace {

void validate(LieType t)
{
    const int r = t.rank;
    bool ok = false;
    switch (t.series) {
        case Series::A: ok = r >= 1; break;
        case Series::B: ok = r >= 2; break;
        case Series::C: ok = r >= 2; break;
        case Series::D: ok = r >= 3; break;
        case Series::E: ok = r >= 6 && r <= 8; break;
        case Series::F: ok = r == 4; break;
        case Series::G: ok = r == 2; break;
    }
    if (!ok)
        throw std::invalid_argument("LieType: invalid series/rank combination " + t.name());
}

std::string vec_str(const IntVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

IntVec add(const IntVec& a, const IntVec& b)
{
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

// Dynkin-diagram edges and the Cartan matrix cartan[i][j] = <alpha_i, alpha_j^vee>,
// Bourbaki numbering throughout.
IntMat cartan_matrix(LieType t)
{
    const int r = t.rank;
    IntMat a(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; }; // 0-based

    switch (t.series) {
        case Series::A:
            for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
            break;
        case Series::B: // alpha_r short
            for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
            a[r - 2][r - 1] = -2;
            a[r - 1][r - 2] = -1;
            break;
        case Series::C: // alpha_r long
            for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
            a[r - 2][r - 1] = -1;
            a[r - 1][r - 2] = -2;
            break;
        case Series::D:
            for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
            edge(r - 3, r - 1);
            break;
        case Series::E:
            edge(0, 2);
            edge(2, 3);
            edge(3, 4);
            edge(4, 5);
            edge(1, 3);
            if (r >= 7) edge(5, 6);
            if (r == 8) edge(6, 7);
            break;
        case Series::F: // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            edge(0, 1);
            edge(2, 3);
            a[1][2] = -2;
            a[2][1] = -1;
            break;
        case Series::G: // alpha_1 short, alpha_2 long
            a[0][1] = -1;
            a[1][0] = -3;
            break;
    }
    return a;
}

// Half squared root lengths d_i = (alpha_i, alpha_i)/2, normalized so long
// roots have d = 1.  Determined by d_j * A[j][i] = d_i * A[i][j].
std::vector<Rational> symmetrizers(const IntMat& cartan)
{
    const int r = static_cast<int>(cartan.size());
    std::vector<Rational> d(r, Rational(0));
    d[0] = Rational(1);
    // Propagate over the (connected) Dynkin graph.
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < r; ++j) {
            if (j == i || cartan[i][j] == 0 || !d[j].is_zero()) continue;
            d[j] = d[i] * Rational(cartan[j][i]) / Rational(cartan[i][j]);
            stack.push_back(j);
        }
    }
    Rational dmax(0);
    for (auto& x : d) {
        internal_check(!x.is_zero(), "symmetrizers: Dynkin diagram not connected");
        if (dmax < x) dmax = x;
    }
    for (auto& x : d) x /= dmax;
    return d;
}

} // namespace

Weight operator+(const Weight& a, const Weight& b) { return Weight(add(a.coords, b.coords)); }
Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }
Weight operator*(std::int64_t s, const Weight& w)
{
    IntVec c = w.coords;
    for (auto& x : c) x *= s;
    return Weight(std::move(c));
}
std::int64_t Weight::linf_norm() const
{
    std::int64_t m = 0;
    for (auto x : coords) m = std::max(m, x < 0 ? -x : x);
    return m;
}
std::int64_t Weight::l1_norm() const
{
    std::int64_t m = 0;
    for (auto x : coords) m += (x < 0 ? -x : x);
    return m;
}
bool Weight::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}
std::string Weight::str() const { return vec_str(coords); }

CorootElem CorootElem::basis(int rank, int i)
{
    CorootElem c = zero(rank);
    c.coords[i] = 1;
    return c;
}
CorootElem operator+(const CorootElem& a, const CorootElem& b)
{
    return CorootElem(add(a.coords, b.coords));
}
CorootElem operator-(const CorootElem& a, const CorootElem& b) { return a + (-b); }
CorootElem operator*(std::int64_t s, const CorootElem& w)
{
    IntVec c = w.coords;
    for (auto& x : c) x *= s;
    return CorootElem(std::move(c));
}
std::int64_t CorootElem::linf_norm() const
{
    std::int64_t m = 0;
    for (auto x : coords) m = std::max(m, x < 0 ? -x : x);
    return m;
}
bool CorootElem::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}
std::string CorootElem::str() const { return vec_str(coords); }

RootSystem RootSystem::build(LieType t)
{
    validate(t);
    const int r = t.rank;

    RootSystem rs;
    rs.type_ = t;
    rs.rank_ = r;
    rs.cartan_ = cartan_matrix(t);

    const auto d = symmetrizers(rs.cartan_);

    rs.simple_roots_.reserve(r);
    for (int i = 0; i < r; ++i) rs.simple_roots_.emplace_back(rs.cartan_[i]);

    // Positive roots by closure from the simple roots: beta + alpha_i is a
    // root iff p - <beta, alpha_i^vee> > 0, with p the largest m such that
    // beta - m*alpha_i is a root.  Processing by height keeps the down-strings
    // complete when needed.
    std::map<IntVec, size_t> seen; // root_coords -> index
    auto push_root = [&](IntVec rc) {
        if (seen.count(rc)) return;
        PositiveRoot pr;
        pr.root_coords = rc;
        pr.height = 0;
        for (auto x : rc) pr.height += x;
        IntVec wt(r, 0);
        Rational half_len(0); // (beta, beta)/2 in units where long roots give 1
        for (int i = 0; i < r; ++i) {
            if (rc[i] == 0) continue;
            for (int j = 0; j < r; ++j) wt[j] += rc[i] * rs.cartan_[i][j];
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                half_len += Rational(rc[i] * rc[j]) * Rational(rs.cartan_[i][j]) * d[j];
        half_len /= Rational(2);
        pr.wt = Weight(wt);
        IntVec cr(r, 0);
        for (int i = 0; i < r; ++i) {
            Rational c = Rational(rc[i]) * d[i] / half_len;
            cr[i] = c.as_integer();
        }
        pr.coroot = CorootElem(cr);
        seen.emplace(std::move(rc), rs.positive_roots_.size());
        rs.positive_roots_.push_back(std::move(pr));
    };

    for (int i = 0; i < r; ++i) {
        IntVec rc(r, 0);
        rc[i] = 1;
        push_root(std::move(rc));
    }
    for (size_t next = 0; next < rs.positive_roots_.size(); ++next) {
        // positive_roots_ grows height-monotonically under this scan.
        const PositiveRoot beta = rs.positive_roots_[next];
        for (int i = 0; i < r; ++i) {
            std::int64_t p = 0;
            IntVec down = beta.root_coords;
            for (;;) {
                down[i] -= 1;
                if (down[i] < 0 || !seen.count(down)) break;
                ++p;
            }
            if (p - beta.wt[i] > 0) {
                IntVec up = beta.root_coords;
                up[i] += 1;
                push_root(std::move(up));
            }
        }
    }
    std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
              [](const PositiveRoot& a, const PositiveRoot& b) {
                  return std::tie(a.height, a.root_coords) < std::tie(b.height, b.root_coords);
              });

    internal_check(static_cast<std::int64_t>(rs.positive_roots_.size()) == positive_root_count(t),
                   "build: positive root count mismatch for " + t.name());

    rs.rho_ = Weight(IntVec(r, 1));
    const PositiveRoot& top = rs.positive_roots_.back();
    internal_check(rs.positive_roots_.size() < 2 ||
                       top.height > rs.positive_roots_[rs.positive_roots_.size() - 2].height,
                   "build: highest root not unique");
    rs.theta_ = top.wt;
    rs.theta_coroot_ = top.coroot;

    rs.h_dual_ = 1 + rs.pairing(rs.rho_, rs.theta_coroot_);

    // B(alpha_i^vee, alpha_j^vee) = cartan[i][j] / d_i.
    rs.gram_coroot_.assign(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            rs.gram_coroot_[i][j] = (Rational(rs.cartan_[i][j]) / d[i]).as_integer();
    rs.gram_weight_ = rat_inverse(to_rational(rs.gram_coroot_));

    return rs;
}

std::int64_t RootSystem::pairing(const Weight& xi, const CorootElem& eta) const
{
    if (xi.rank() != static_cast<size_t>(rank_) || eta.rank() != static_cast<size_t>(rank_))
        throw std::invalid_argument("pairing: dimension mismatch");
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += xi[i] * eta[i];
    return s;
}

Rational RootSystem::inner_product_weights(const Weight& xi, const Weight& mu) const
{
    if (xi.rank() != static_cast<size_t>(rank_) || mu.rank() != static_cast<size_t>(rank_))
        throw std::invalid_argument("inner_product_weights: dimension mismatch");
    Rational s(0);
    for (int i = 0; i < rank_; ++i) {
        if (xi[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            s += Rational(xi[i] * mu[j]) * gram_weight_[i][j];
    }
    return s;
}

Weight RootSystem::b_flat(const CorootElem& eta) const
{
    if (eta.rank() != static_cast<size_t>(rank_))
        throw std::invalid_argument("b_flat: dimension mismatch");
    return Weight(vec_mat(eta.coords, gram_coroot_));
}

RatVec RootSystem::b_sharp(const Weight& xi) const
{
    if (xi.rank() != static_cast<size_t>(rank_))
        throw std::invalid_argument("b_sharp: dimension mismatch");
    RatVec v(xi.coords.begin(), xi.coords.end());
    return vec_mat(v, gram_weight_);
}

Weight RootSystem::simple_reflect(int i, const Weight& w) const
{
    Weight out = w;
    const std::int64_t c = w[i];
    if (c == 0) return out;
    for (int j = 0; j < rank_; ++j) out[j] -= c * cartan_[i][j];
    return out;
}

CorootElem RootSystem::simple_reflect(int i, const CorootElem& c) const
{
    // s_i(eta) = eta - <alpha_i, eta> alpha_i^vee.
    std::int64_t pair = 0;
    for (int j = 0; j < rank_; ++j) pair += cartan_[i][j] * c[j];
    CorootElem out = c;
    out[i] -= pair;
    return out;
}

Weight RootSystem::apply_word(const std::vector<int>& word, const Weight& w) const
{
    Weight out = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = simple_reflect(*it, out);
    return out;
}

CorootElem RootSystem::apply_word(const std::vector<int>& word, const CorootElem& c) const
{
    CorootElem out = c;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = simple_reflect(*it, out);
    return out;
}

bool RootSystem::is_dominant(const Weight& w) const
{
    return std::all_of(w.coords.begin(), w.coords.end(), [](std::int64_t x) { return x >= 0; });
}

std::int64_t positive_root_count(LieType t)
{
    const std::int64_t r = t.rank;
    switch (t.series) {
        case Series::A: return r * (r + 1) / 2;
        case Series::B:
        case Series::C: return r * r;
        case Series::D: return r * (r - 1);
        case Series::E: return r == 6 ? 36 : (r == 7 ? 63 : 120);
        case Series::F: return 24;
        case Series::G: return 6;
    }
    throw std::invalid_argument("positive_root_count: bad series");
}

std::int64_t weyl_order(LieType t)
{
    const std::int64_t r = t.rank;
    auto fact = [](std::int64_t n) {
        std::int64_t f = 1;
        for (std::int64_t i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (t.series) {
        case Series::A: return fact(r + 1);
        case Series::B:
        case Series::C: return (std::int64_t(1) << r) * fact(r);
        case Series::D: return (std::int64_t(1) << (r - 1)) * fact(r);
        case Series::E: return r == 6 ? 51840 : (r == 7 ? 2903040 : 696729600);
        case Series::F: return 1152;
        case Series::G: return 12;
    }
    throw std::invalid_argument("weyl_order: bad series");
}

} // namespace fht
