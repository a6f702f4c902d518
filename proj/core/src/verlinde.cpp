#include "fht/verlinde.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "fht/errors.hpp"
#include "fht/json_io.hpp"
#include "fht/weyl.hpp"

namespace fht {

bool LevelWeights::contains(const Weight& w) const
{
    return std::binary_search(weights.begin(), weights.end(), w,
                              [](const Weight& a, const Weight& b) {
                                  auto sa = a.l1_norm(), sb = b.l1_norm();
                                  return std::tie(sa, a.coords) < std::tie(sb, b.coords);
                              });
}

size_t LevelWeights::index_of(const Weight& w) const
{
    auto it = std::find(weights.begin(), weights.end(), w);
    if (it == weights.end())
        throw std::invalid_argument("LevelWeights: " + w.str() + " is not a level-" +
                                    std::to_string(k) + " weight");
    return static_cast<size_t>(it - weights.begin());
}

LevelWeights level_weights(const RootSystem& rs, std::int64_t k)
{
    if (k < 0) throw std::invalid_argument("level_weights: k must be >= 0");
    LevelWeights out;
    out.k = k;
    out.level = k + rs.h_dual();

    // Dominant lambda with <lambda, theta^vee> <= k, enumerated directly.
    Weight xi = Weight::zero(rs.rank());
    const auto& tc = rs.theta_coroot();
    auto rec = [&](auto&& self, int pos, std::int64_t used) -> void {
        if (pos == rs.rank()) {
            out.weights.push_back(xi);
            return;
        }
        for (std::int64_t c = 0; used + c * tc[pos] <= k; ++c) {
            xi[pos] = c;
            self(self, pos + 1, used + c * tc[pos]);
        }
        xi[pos] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.weights.begin(), out.weights.end(), [](const Weight& a, const Weight& b) {
        auto sa = a.l1_norm(), sb = b.l1_norm();
        return std::tie(sa, a.coords) < std::tie(sb, b.coords);
    });
    return out;
}

std::string FusionElement::str() const
{
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += (c == 1 ? "" : std::to_string(c) + "*") + "[" + w.str() + "]";
    }
    return s;
}

std::int64_t WeightSystem::dimension() const
{
    std::int64_t d = 0;
    for (const auto& [w, m] : mults) d += m;
    return d;
}

FormalCharacter WeightSystem::character() const
{
    FormalCharacter c;
    for (const auto& [w, m] : mults) c.add(w, m);
    return c;
}

std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lambda)
{
    if (!rs.is_dominant(lambda))
        throw std::invalid_argument("weyl_dimension: " + lambda.str() + " is not dominant");
    const Weight num = lambda + rs.rho();
    Rational dim(1);
    for (const auto& pr : rs.positive_roots())
        dim *= Rational(rs.pairing(num, pr.coroot), rs.pairing(rs.rho(), pr.coroot));
    return dim.as_integer();
}

WeightSystem freudenthal_weights(const RootSystem& rs, const Weight& lambda)
{
    if (!rs.is_dominant(lambda))
        throw std::invalid_argument("freudenthal_weights: " + lambda.str() + " is not dominant");

    const Rational lambda_norm = rs.inner_product_weights(lambda, lambda);
    const Weight lr = lambda + rs.rho();
    const Rational lr_norm = rs.inner_product_weights(lr, lr);

    // Candidates mu with lambda - mu in the positive root cone and
    // B(mu,mu) <= B(lambda,lambda); contains every weight of V_lambda.
    std::set<Weight> ball{lambda};
    std::vector<Weight> queue{lambda};
    for (size_t next = 0; next < queue.size(); ++next) {
        const Weight w = queue[next];
        for (const auto& alpha : rs.simple_roots()) {
            Weight down = w - alpha;
            if (rs.inner_product_weights(down, down) > lambda_norm) continue;
            if (ball.insert(down).second) queue.push_back(down);
        }
    }

    // Dominant candidates sorted by depth below lambda, shallow first.
    const RatMat inv_cartan = rat_inverse(to_rational(rs.cartan()));
    std::vector<std::pair<std::int64_t, Weight>> dominants;
    for (const auto& w : ball) {
        if (!rs.is_dominant(w)) continue;
        // depth = height of lambda - w in the root lattice.
        const Weight diff = lambda - w;
        const RatVec rc = vec_mat(RatVec(diff.coords.begin(), diff.coords.end()), inv_cartan);
        Rational h(0);
        for (const auto& x : rc) h += x;
        dominants.emplace_back(h.as_integer(), w);
    }
    std::sort(dominants.begin(), dominants.end());

    std::map<Weight, std::int64_t> dom_mult;
    for (const auto& [depth, mu] : dominants) {
        if (depth == 0) {
            dom_mult[mu] = 1;
            continue;
        }
        Rational acc(0);
        for (const auto& pr : rs.positive_roots()) {
            for (std::int64_t j = 1;; ++j) {
                const Weight up = mu + j * pr.wt;
                if (rs.inner_product_weights(up, up) > lambda_norm) break;
                auto it = dom_mult.find(dominant_representative(rs, up));
                if (it == dom_mult.end() || it->second == 0) continue;
                acc += Rational(2 * it->second) * rs.inner_product_weights(up, pr.wt);
            }
        }
        const Weight mr = mu + rs.rho();
        const Rational denom = lr_norm - rs.inner_product_weights(mr, mr);
        internal_check(!denom.is_zero(), "freudenthal: vanishing denominator");
        const Rational m = acc / denom;
        const std::int64_t mi = m.as_integer();
        internal_check(mi >= 0, "freudenthal: negative multiplicity");
        if (mi > 0) dom_mult[mu] = mi;
    }

    WeightSystem ws;
    ws.highest = lambda;
    for (const auto& [mu, m] : dom_mult) {
        if (m == 0) continue;
        for (const auto& w : weyl_orbit(rs, mu)) ws.mults[w] = m;
    }
    internal_check(ws.dimension() == weyl_dimension(rs, lambda),
                   "freudenthal: dimension mismatch for " + lambda.str());
    return ws;
}

namespace {

std::string lambda_file_name(const Weight& lambda)
{
    std::string s;
    for (size_t i = 0; i < lambda.rank(); ++i) {
        if (i) s += "_";
        s += std::to_string(lambda[i]);
    }
    return s + ".json";
}

} // namespace

std::shared_ptr<const WeightSystem> FreudenthalCache::get(const RootSystem& rs,
                                                          const Weight& lambda)
{
    const auto key = std::make_pair(rs.type().name(), lambda);
    {
        std::shared_lock lock(mu_);
        auto it = mem_.find(key);
        if (it != mem_.end()) return it->second;
    }

    std::shared_ptr<const WeightSystem> ws;
    std::filesystem::path file;
    if (!dir_.empty()) {
        file = dir_ / "v1" / rs.type().name() / lambda_file_name(lambda);
        std::error_code ec;
        if (std::filesystem::exists(file, ec)) {
            try {
                std::ifstream in(file);
                nlohmann::json j = nlohmann::json::parse(in);
                WeightSystem loaded;
                loaded.highest = weight_from_json(j.at("highest"));
                const FormalCharacter c = formal_character_from_json(j.at("character"));
                for (const auto& [w, m] : c.support()) loaded.mults.emplace(w, m);
                if (loaded.highest == lambda &&
                    loaded.dimension() == weyl_dimension(rs, lambda))
                    ws = std::make_shared<WeightSystem>(std::move(loaded));
            } catch (const std::exception&) {
                // fall through to recompute and overwrite
            }
        }
    }

    if (!ws) {
        ws = std::make_shared<WeightSystem>(freudenthal_weights(rs, lambda));
        if (!dir_.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(file.parent_path(), ec);
            nlohmann::json j;
            j["highest"] = weight_to_json(ws->highest);
            j["character"] = formal_character_to_json(ws->character());
            const auto tmp = file.string() + ".tmp";
            {
                std::ofstream out(tmp);
                out << j.dump(0) << "\n";
            }
            std::filesystem::rename(tmp, file, ec); // best effort
        }
    }

    std::unique_lock lock(mu_);
    auto [it, inserted] = mem_.emplace(key, ws);
    return it->second;
}

namespace {

std::shared_ptr<const WeightSystem> weights_of(const RootSystem& rs, const Weight& lambda,
                                               FreudenthalCache* cache)
{
    if (cache) return cache->get(rs, lambda);
    return std::make_shared<WeightSystem>(freudenthal_weights(rs, lambda));
}

} // namespace

std::map<Weight, std::int64_t> tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                                const Weight& mu, FreudenthalCache* cache)
{
    if (!rs.is_dominant(lambda) || !rs.is_dominant(mu))
        throw std::invalid_argument("tensor_decompose: inputs must be dominant");
    const auto ws = weights_of(rs, mu, cache);
    std::map<Weight, std::int64_t> out;
    for (const auto& [xi, m] : ws->mults) {
        const FoldOutcome f = finite_fold(rs, lambda + xi);
        if (!f.is_interior()) continue;
        auto [it, inserted] = out.emplace(f.weight, f.sign * m);
        if (!inserted && (it->second += f.sign * m) == 0) out.erase(it);
    }
    return out;
}

FusionElement fusion(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                     std::int64_t k, FreudenthalCache* cache)
{
    const LevelWeights lw = level_weights(rs, k);
    if (!lw.contains(lambda) || !lw.contains(mu))
        throw std::invalid_argument("fusion: inputs must be level-" + std::to_string(k) +
                                    " weights");
    const auto ws = weights_of(rs, mu, cache);
    FusionElement out(k);
    for (const auto& [xi, m] : ws->mults) {
        const FoldOutcome f = affine_fold(rs, lambda + xi, lw.level);
        if (f.is_interior()) out.add(f.weight, f.sign * m);
    }
    return out;
}

FusionElement project_to_level(const RootSystem& rs, const Weight& nu, std::int64_t k)
{
    if (!rs.is_dominant(nu))
        throw std::invalid_argument("project_to_level: " + nu.str() + " is not dominant");
    FusionElement out(k);
    const FoldOutcome f = affine_fold(rs, nu, k + rs.h_dual());
    if (f.is_interior()) out.add(f.weight, f.sign);
    return out;
}

double SMatrix::unitarity_error() const
{
    const size_t n = weights.size();
    double err = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::complex<double> dot = 0;
            for (size_t l = 0; l < n; ++l) dot += entries[i][l] * std::conj(entries[j][l]);
            err = std::max(err, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    return err;
}

double SMatrix::symmetry_error() const
{
    double err = 0;
    for (size_t i = 0; i < weights.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            err = std::max(err, std::abs(entries[i][j] - entries[j][i]));
    return err;
}

SMatrix s_matrix(const RootSystem& rs, std::int64_t k)
{
    if (k < 1) throw std::invalid_argument("s_matrix: k must be >= 1");
    SMatrix s;
    s.k = k;
    s.level = k + rs.h_dual();
    s.weights = level_weights(rs, k).weights;
    internal_check(!s.weights.empty() && s.weights.front().is_zero(),
                   "s_matrix: zero weight must come first");

    const auto weyl = enumerate_weyl(rs);
    const size_t n = s.weights.size();
    s.entries.assign(n, std::vector<std::complex<double>>(n, 0.0));
    for (size_t a = 0; a < n; ++a) {
        const Weight la = s.weights[a] + rs.rho();
        for (size_t b = a; b < n; ++b) {
            const Weight mb = s.weights[b] + rs.rho();
            std::complex<double> sum = 0;
            for (const auto& w : weyl) {
                const Rational phase =
                    (rs.inner_product_weights(w.apply(la), mb) / Rational(s.level)).mod1();
                const double ang = -2.0 * std::numbers::pi * phase.to_double();
                sum += static_cast<double>(w.parity) *
                       std::complex<double>(std::cos(ang), std::sin(ang));
            }
            s.entries[a][b] = sum;
            s.entries[b][a] = sum;
        }
    }

    double norm0 = 0;
    for (size_t j = 0; j < n; ++j) norm0 += std::norm(s.entries[0][j]);
    const double scale = 1.0 / std::sqrt(norm0);
    for (auto& row : s.entries)
        for (auto& e : row) e *= scale;
    return s;
}

FusionElement verlinde_fusion(const SMatrix& s, const Weight& lambda, const Weight& mu,
                              double tol)
{
    const size_t n = s.weights.size();
    auto find = [&](const Weight& w) -> size_t {
        for (size_t i = 0; i < n; ++i)
            if (s.weights[i] == w) return i;
        throw std::invalid_argument("verlinde_fusion: " + w.str() + " is not a level-" +
                                    std::to_string(s.k) + " weight");
    };
    const size_t a = find(lambda), b = find(mu);

    FusionElement out(s.k);
    double dev = 0;
    for (size_t c = 0; c < n; ++c) {
        std::complex<double> x = 0;
        for (size_t q = 0; q < n; ++q)
            x += s.entries[a][q] * s.entries[b][q] * std::conj(s.entries[c][q]) /
                 s.entries[0][q];
        const auto rounded = std::llround(x.real());
        dev = std::max(dev, std::abs(x - std::complex<double>(double(rounded), 0.0)));
        out.add(s.weights[c], rounded);
    }
    if (dev > tol)
        throw OracleError("verlinde_fusion: pre-rounding deviation " + std::to_string(dev) +
                          " exceeds " + std::to_string(tol) + " for " + lambda.str() + " * " +
                          mu.str());
    return out;
}

FusionElement verlinde_fusion(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                              std::int64_t k, double tol)
{
    return verlinde_fusion(s_matrix(rs, k), lambda, mu, tol);
}

std::complex<double> char_value(const WeightSystem& ws, const RatVec& x)
{
    std::complex<double> sum = 0;
    for (const auto& [w, m] : ws.mults) {
        Rational pair(0);
        for (size_t i = 0; i < x.size(); ++i) pair += Rational(w[i]) * x[i];
        const double ang = 2.0 * std::numbers::pi * pair.mod1().to_double();
        sum += static_cast<double>(m) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return sum;
}

std::vector<RatVec> special_points(const RootSystem& rs, std::int64_t k)
{
    const LevelWeights lw = level_weights(rs, k);
    std::vector<RatVec> out;
    out.reserve(lw.weights.size());
    for (const auto& xi : lw.weights) {
        RatVec p = rs.b_sharp(xi + rs.rho());
        for (auto& c : p) c /= Rational(lw.level);
        out.push_back(std::move(p));
    }
    return out;
}

bool ideal_vanishing_check(const RootSystem& rs, const Weight& nu, std::int64_t k,
                           FreudenthalCache* cache, double tol)
{
    const auto ws_nu = weights_of(rs, nu, cache);
    const FusionElement folded = project_to_level(rs, nu, k);
    for (const auto& p : special_points(rs, k)) {
        std::complex<double> lhs = char_value(*ws_nu, p);
        std::complex<double> rhs = 0;
        for (const auto& [w, c] : folded.coeffs())
            rhs += static_cast<double>(c) * char_value(*weights_of(rs, w, cache), p);
        if (std::abs(lhs - rhs) >= tol) return false;
    }
    return true;
}

} // namespace fht
