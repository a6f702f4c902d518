// Acceptance suite: ten gate criteria, one pass/fail line each.  Exit code 0
// iff every criterion passes.  Criterion 10 shells out to the CLI named by
// the FHT_CLI environment variable.

#include <chrono>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fht/affine_weyl.hpp"
#include "fht/characters.hpp"
#include "fht/fht_map.hpp"
#include "fht/lattice_group.hpp"
#include "fht/sampling.hpp"
#include "fht/theta_algebra.hpp"
#include "fht/verify.hpp"
#include "fht/verlinde.hpp"
#include "fht/weyl.hpp"

using namespace fht;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

RootSystem build(const char* name) { return RootSystem::build(LieType::parse(name)); }

struct Config {
    const char* type;
    std::int64_t k;
};

const std::vector<Config> kFusionConfigs = {
    {"A1", 1}, {"A1", 2}, {"A1", 3}, {"A1", 4}, {"A1", 5}, {"A1", 6},
    {"A2", 1}, {"A2", 2}, {"A2", 3}, {"A2", 4}, {"G2", 1}, {"G2", 2}};

// 1. Kac-Walton fusion equals S-matrix Verlinde fusion on every pair;
//    pre-rounding deviation < 1e-6; total runtime < 60 s.
Outcome criterion_oracle_equivalence()
{
    const auto start = std::chrono::steady_clock::now();
    FreudenthalCache cache;
    std::int64_t pairs = 0;
    for (const auto& cfg : kFusionConfigs) {
        const RootSystem rs = build(cfg.type);
        const LevelWeights lw = level_weights(rs, cfg.k);
        const SMatrix s = s_matrix(rs, cfg.k);
        for (const auto& a : lw.weights)
            for (const auto& b : lw.weights) {
                ++pairs;
                // verlinde_fusion enforces deviation <= 1e-6 internally.
                if (!(fusion(rs, a, b, cfg.k, &cache) == verlinde_fusion(s, a, b, 1e-6)))
                    return {false, std::string(cfg.type) + " k=" + std::to_string(cfg.k) +
                                       ": mismatch at " + a.str() + " * " + b.str()};
            }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0) return {false, "runtime " + std::to_string(secs) + " s exceeds 60 s"};
    return {true, std::to_string(pairs) + " pairs, " + std::to_string(secs) + " s"};
}

// 2. |chi_l(p) chi_m(p) - sum_n N chi_n(p)| < 1e-9 at every special point.
Outcome criterion_ideal_identity()
{
    FreudenthalCache cache;
    std::int64_t evaluations = 0;
    double worst = 0;
    for (const auto& cfg : kFusionConfigs) {
        const RootSystem rs = build(cfg.type);
        const LevelWeights lw = level_weights(rs, cfg.k);
        const auto points = special_points(rs, cfg.k);
        for (const auto& a : lw.weights)
            for (const auto& b : lw.weights) {
                const FusionElement n = fusion(rs, a, b, cfg.k, &cache);
                for (const auto& p : points) {
                    const std::complex<double> lhs =
                        char_value(*cache.get(rs, a), p) * char_value(*cache.get(rs, b), p);
                    std::complex<double> rhs = 0;
                    for (const auto& [nu, c] : n.coeffs())
                        rhs += double(c) * char_value(*cache.get(rs, nu), p);
                    const double err = std::abs(lhs - rhs);
                    worst = std::max(worst, err);
                    ++evaluations;
                    if (err >= 1e-9)
                        return {false, std::string(cfg.type) + " k=" + std::to_string(cfg.k) +
                                           ": deviation " + std::to_string(err) + " at " +
                                           a.str() + " * " + b.str()};
                }
            }
    }
    std::ostringstream os;
    os << evaluations << " evaluations, worst deviation " << worst;
    return {true, os.str()};
}

// 3. project_to_level(lambda (x) mu) = fusion(lambda, mu), exact integers.
Outcome criterion_quotient_multiplicative()
{
    FreudenthalCache cache;
    std::int64_t pairs = 0;
    for (const auto& cfg : kFusionConfigs) {
        const RootSystem rs = build(cfg.type);
        const LevelWeights lw = level_weights(rs, cfg.k);
        for (const auto& a : lw.weights)
            for (const auto& b : lw.weights) {
                ++pairs;
                FusionElement projected(cfg.k);
                for (const auto& [nu, m] : tensor_decompose(rs, a, b, &cache)) {
                    const FusionElement f = project_to_level(rs, nu, cfg.k);
                    for (const auto& [w, c] : f.coeffs()) projected.add(w, m * c);
                }
                if (!(projected == fusion(rs, a, b, cfg.k, &cache)))
                    return {false, std::string(cfg.type) + " k=" + std::to_string(cfg.k) +
                                       ": quotient map fails at " + a.str() + " * " + b.str()};
            }
    }
    return {true, std::to_string(pairs) + " pairs exact"};
}

const std::vector<Config> kFhtConfigs = {{"A1", 1}, {"A1", 2}, {"A1", 3}, {"A1", 4},
                                         {"A1", 5}, {"A2", 1}, {"A2", 2}, {"A2", 3}};

// 4. inverse_fht(fht_image(lambda)) = [lambda] and assembly = image, window 10.
Outcome criterion_fht_round_trip()
{
    const std::int64_t window = 10;
    std::int64_t generators = 0;
    for (const auto& cfg : kFhtConfigs) {
        const RootSystem rs = build(cfg.type);
        const LevelWeights lw = level_weights(rs, cfg.k);
        for (const auto& lambda : lw.weights) {
            ++generators;
            const FusionElement direct =
                inverse_fht(rs, fht_image_alternating(rs, lambda, cfg.k));
            const FormalCharacter img = fht_image(rs, lambda, cfg.k, window);
            const FusionElement via_window =
                inverse_fht(rs, restrict_to_alcove(rs, img, lw.level, window));
            if (!(direct == FusionElement::basis(cfg.k, lambda)) ||
                !(via_window == FusionElement::basis(cfg.k, lambda)))
                return {false, std::string(cfg.type) + " k=" + std::to_string(cfg.k) +
                                   ": round trip fails at " + lambda.str()};
            if (!(assembly_character(rs, lambda, cfg.k, window) == img))
                return {false, std::string(cfg.type) + " k=" + std::to_string(cfg.k) +
                                   ": assembly differs from the orbit image at " + lambda.str()};
        }
    }
    return {true, std::to_string(generators) + " generators, exact"};
}

// 5. Alternation m(w . xi) = (-1)^{l(w)} m(xi), 500 random (w, xi) per image.
Outcome criterion_alternation()
{
    std::int64_t cases = 0;
    for (const auto& cfg : kFhtConfigs) {
        const RootSystem rs = build(cfg.type);
        const LevelWeights lw = level_weights(rs, cfg.k);
        Sampler gen(2026);
        for (const auto& lambda : lw.weights) {
            const AlternatingCharacter ac = fht_image_alternating(rs, lambda, cfg.k);
            for (int i = 0; i < 500; ++i) {
                const AffineWeylElem w{gen.word(rs, 6), gen.coroot(rs, 2)};
                const Weight xi = gen.weight(rs, 2 * lw.level);
                ++cases;
                if (alternating_extend(rs, ac, shifted_action(rs, w, xi, lw.level)) !=
                    w.parity() * alternating_extend(rs, ac, xi))
                    return {false, std::string(cfg.type) + " k=" + std::to_string(cfg.k) +
                                       ": alternation fails at " + xi.str()};
            }
        }
    }
    return {true, std::to_string(cases) + " cases exact"};
}

// 6. Group-theory suite: 1000 seeded cases each for A1, A2, B2, G2.
Outcome criterion_group_suite()
{
    VerifyOptions opt;
    opt.seed = 2026;
    opt.cases = 1000;
    opt.jobs = 2;
    const SuiteResult r = run_suite("lattice_cocycle", opt);
    if (!r.passed()) {
        return {false, r.checks.empty() ? "suite failed"
                                        : (r.total_failures() > 0 ? r.checks.front().name
                                                                  : "suite failed")};
    }
    return {true, std::to_string(r.total_cases()) + " cases exact, zero failures"};
}

// 7. Theta algebra suite: associativity, star, block-diagonal matrix model
//    with |Pi*/l Pi| = l^rank det(gram_coroot) blocks, (A1 l=2,3), (A2 l=2).
Outcome criterion_algebra_suite()
{
    VerifyOptions opt;
    opt.seed = 2026;
    opt.jobs = 2;
    const SuiteResult r = run_suite("twisted_group_algebra", opt);
    if (!r.passed()) return {false, "suite reported failures"};

    struct Expect { const char* type; std::int64_t level; std::int64_t blocks; };
    for (const auto& e : std::vector<Expect>{{"A1", 2, 4}, {"A1", 3, 6}, {"A2", 2, 12}}) {
        const RootSystem rs = build(e.type);
        const auto trans = coset_transversal(rs, e.level);
        if (static_cast<std::int64_t>(trans->size()) != e.blocks)
            return {false, std::string(e.type) + " l=" + std::to_string(e.level) +
                               ": block count " + std::to_string(trans->size()) + " != " +
                               std::to_string(e.blocks)};
    }
    return {true, std::to_string(r.total_cases()) + " cases, block counts 4/6/12"};
}

// 8. Weyl numerator identity for all dominant lambda with coords <= 3,
//    rank <= 3; Freudenthal totals equal Weyl dimensions throughout.
Outcome criterion_numerator_identity()
{
    std::int64_t lambdas = 0;
    for (const char* name : {"A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3", "D3"}) {
        const RootSystem rs = build(name);
        FreudenthalCache cache;
        IntVec c(rs.rank(), 0);
        for (;;) {
            const Weight lambda{c};
            ++lambdas;
            const auto ws = cache.get(rs, lambda);
            if (ws->dimension() != weyl_dimension(rs, lambda))
                return {false, std::string(name) + ": dimension mismatch at " + lambda.str()};
            if (!numerator_identity_check(rs, lambda, &cache))
                return {false, std::string(name) + ": numerator identity fails at " +
                                   lambda.str()};
            int i = 0;
            while (i < rs.rank() && c[i] == 3) c[i++] = 0;
            if (i == rs.rank()) break;
            ++c[i];
        }
    }
    return {true, std::to_string(lambdas) + " highest weights exact"};
}

// 9. Closed forms: |Pi*_k| for A1/A2 and the dual Coxeter table, rank <= 8.
Outcome criterion_closed_forms()
{
    const RootSystem a1 = build("A1");
    const RootSystem a2 = build("A2");
    for (std::int64_t k = 0; k <= 10; ++k) {
        if (static_cast<std::int64_t>(level_weights(a1, k).weights.size()) != k + 1)
            return {false, "A1 level weight count fails at k=" + std::to_string(k)};
        if (static_cast<std::int64_t>(level_weights(a2, k).weights.size()) !=
            (k + 1) * (k + 2) / 2)
            return {false, "A2 level weight count fails at k=" + std::to_string(k)};
    }

    struct Entry { const char* type; std::int64_t h; };
    const std::vector<Entry> table = {
        {"A1", 2},  {"A2", 3},  {"A3", 4},  {"A4", 5},  {"A5", 6},  {"A6", 7},  {"A7", 8},
        {"A8", 9},  {"B2", 3},  {"B3", 5},  {"B4", 7},  {"B5", 9},  {"B6", 11}, {"B7", 13},
        {"B8", 15}, {"C2", 3},  {"C3", 4},  {"C4", 5},  {"C5", 6},  {"C6", 7},  {"C7", 8},
        {"C8", 9},  {"D3", 4},  {"D4", 6},  {"D5", 8},  {"D6", 10}, {"D7", 12}, {"D8", 14},
        {"E6", 12}, {"E7", 18}, {"E8", 30}, {"F4", 9},  {"G2", 4}};
    for (const auto& e : table) {
        const RootSystem rs = build(e.type);
        const std::int64_t recomputed = 1 + rs.pairing(rs.rho(), rs.theta_coroot());
        if (rs.h_dual() != e.h || recomputed != e.h)
            return {false, std::string(e.type) + ": h_dual " + std::to_string(rs.h_dual()) +
                               " (recomputed " + std::to_string(recomputed) + ") != " +
                               std::to_string(e.h)};
    }
    return {true, "A1/A2 counts k<=10 and the h_dual table for all 33 types"};
}

// 10. Byte-identical JSON from fusion-table and verify across jobs=1 / jobs=8.
Outcome criterion_determinism()
{
    const char* cli = std::getenv("FHT_CLI");
    if (!cli) return {false, "FHT_CLI not set (run through ctest)"};

    auto capture = [&](const std::string& args, const std::string& tag) -> std::string {
        const auto tmp = std::filesystem::temp_directory_path() / ("fht-acc-" + tag + ".json");
        const std::string cmd = std::string(cli) + " " + args + " > " + tmp.string();
        if (std::system(cmd.c_str()) != 0) return "";
        std::ifstream in(tmp);
        std::stringstream ss;
        ss << in.rdbuf();
        std::filesystem::remove(tmp);
        return ss.str();
    };

    const std::string table1 = capture("fusion-table --type A2 -k 3 --jobs 1", "t1");
    const std::string table8 = capture("fusion-table --type A2 -k 3 --jobs 8", "t8");
    if (table1.empty() || table1 != table8)
        return {false, "fusion-table output differs between jobs=1 and jobs=8"};

    const std::string verify1 =
        capture("verify --seed 7 --jobs 1 --suite characters --suite verlinde", "v1");
    const std::string verify8 =
        capture("verify --seed 7 --jobs 8 --suite characters --suite verlinde", "v8");
    if (verify1.empty() || verify1 != verify8)
        return {false, "verify output differs between jobs=1 and jobs=8"};
    return {true, "fusion-table and verify byte-identical across jobs=1/8"};
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"fusion oracle equivalence (A1 k<=6, A2 k<=4, G2 k<=2; <1e-6; <60s)",
         criterion_oracle_equivalence},
        {"Verlinde ideal identity at special points (<1e-9)", criterion_ideal_identity},
        {"quotient map multiplicativity (exact)", criterion_quotient_multiplicative},
        {"FHT generator round trip and assembly character (window 10)",
         criterion_fht_round_trip},
        {"alternation of generator images (500 random cases each)", criterion_alternation},
        {"group-theory suite (1000 seeded cases, A1/A2/B2/G2)", criterion_group_suite},
        {"theta algebra suite and block counts", criterion_algebra_suite},
        {"Weyl numerator identity and dimensions (coords <= 3, rank <= 3)",
         criterion_numerator_identity},
        {"closed forms: level-weight counts and dual Coxeter table", criterion_closed_forms},
        {"deterministic JSON across jobs=1/8", criterion_determinism},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, "exception"};
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failures;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << "/"
                  << criteria.size() << ": " << criteria[i].name << " - " << o.detail << "\n";
        std::cout.flush();
    }
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << (criteria.size() - failures) << "/" << criteria.size() << ")\n";
    return failures == 0 ? 0 : 1;
}
