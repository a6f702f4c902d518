// fht: exact combinatorics of level-k fusion rings, affine Weyl folding,
// twisted lattice group algebras, and the character-side correspondence.
//
// Exit codes: 0 success, 2 usage error, 3 oracle disagreement, 4 internal
// invariant failure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fht/affine_weyl.hpp"
#include "fht/characters.hpp"
#include "fht/errors.hpp"
#include "fht/fht_map.hpp"
#include "fht/json_io.hpp"
#include "fht/lattice_group.hpp"
#include "fht/parallel.hpp"
#include "fht/sampling.hpp"
#include "fht/theta_algebra.hpp"
#include "fht/verify.hpp"
#include "fht/verlinde.hpp"
#include "fht/version.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    std::string type;
    std::int64_t k = 1;
    std::int64_t level = 1;
    std::int64_t window = 10;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "json"; // json, csv, pretty
    std::string cache_dir;
};

json meta_block(const RunConfig& cfg, std::int64_t level)
{
    return {{"tool_version", fht::kToolVersion},
            {"lie_type", cfg.type},
            {"level", level},
            {"seed", cfg.seed}};
}

void emit(const RunConfig& cfg, const json& meta, const json& result,
          const std::vector<std::string>& csv_lines, const std::string& pretty)
{
    if (cfg.format == "json") {
        std::cout << json{{"meta", meta}, {"result", result}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        for (const auto& line : csv_lines) std::cout << line << "\n";
    } else {
        std::cout << pretty;
    }
}

fht::Weight parse_weight(const std::string& s, int rank)
{
    fht::IntVec c;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) c.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (static_cast<int>(c.size()) != rank)
        throw std::invalid_argument("weight '" + s + "' has " + std::to_string(c.size()) +
                                    " coordinates, expected " + std::to_string(rank));
    return fht::Weight(std::move(c));
}

std::string weight_csv(const fht::Weight& w)
{
    std::string s;
    for (size_t i = 0; i < w.rank(); ++i) s += (i ? ";" : "") + std::to_string(w[i]);
    return s;
}

fht::GroupElem group_elem_from_json(const fht::RootSystem& rs, const json& j, std::int64_t level)
{
    fht::RatVec t;
    for (const auto& x : j.at("t")) t.push_back(fht::Rational::parse(x.get<std::string>()));
    fht::IntVec eta = j.at("eta").get<fht::IntVec>();
    if (t.size() != static_cast<size_t>(rs.rank()) || eta.size() != static_cast<size_t>(rs.rank()))
        throw std::invalid_argument("group element has wrong rank");
    fht::Phase z(fht::Rational::parse(j.value("z", std::string("0"))));
    return fht::GroupElem{fht::TorusElem(std::move(t)), fht::CorootElem(std::move(eta)), z, level};
}

json group_elem_to_json(const fht::GroupElem& g)
{
    std::vector<std::string> t;
    for (const auto& x : g.t.coords) t.push_back(x.str());
    return {{"t", t}, {"eta", g.eta.coords}, {"z", g.z.value.str()}, {"level", g.level}};
}

// ------------------------------------------------------------------ commands

int cmd_info(const RunConfig& cfg)
{
    const auto rs = fht::RootSystem::build(fht::LieType::parse(cfg.type));
    json result;
    result["rank"] = rs.rank();
    result["cartan"] = rs.cartan();
    result["positive_root_count"] = rs.positive_roots().size();
    json roots = json::array();
    for (const auto& pr : rs.positive_roots()) roots.push_back(pr.wt.coords);
    result["positive_roots"] = roots;
    result["rho"] = rs.rho().coords;
    result["theta"] = rs.theta().coords;
    result["theta_coroot"] = rs.theta_coroot().coords;
    result["h_dual"] = rs.h_dual();
    result["gram_coroot"] = rs.gram_coroot();
    json gw = json::array();
    for (const auto& row : rs.gram_weight()) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.str());
        gw.push_back(r);
    }
    result["gram_weight"] = gw;
    result["weyl_order"] = fht::weyl_order(rs.type());

    std::vector<std::string> csv{"key,value"};
    csv.push_back("rank," + std::to_string(rs.rank()));
    csv.push_back("positive_root_count," + std::to_string(rs.positive_roots().size()));
    csv.push_back("h_dual," + std::to_string(rs.h_dual()));
    csv.push_back("theta," + weight_csv(rs.theta()));
    csv.push_back("weyl_order," + std::to_string(fht::weyl_order(rs.type())));

    std::string pretty = cfg.type + ": rank " + std::to_string(rs.rank()) + ", " +
                         std::to_string(rs.positive_roots().size()) + " positive roots, h^v = " +
                         std::to_string(rs.h_dual()) + "\n  rho = " + rs.rho().str() +
                         ", theta = " + rs.theta().str() + ", theta^v = " +
                         rs.theta_coroot().str() + "\n  |W| = " +
                         std::to_string(fht::weyl_order(rs.type())) + "\n";

    emit(cfg, meta_block(cfg, 0), result, csv, pretty);
    return 0;
}

int cmd_fold(const RunConfig& cfg, const std::string& weight)
{
    const auto rs = fht::RootSystem::build(fht::LieType::parse(cfg.type));
    const fht::Weight xi = parse_weight(weight, rs.rank());
    const fht::FoldOutcome f = fht::affine_fold(rs, xi, cfg.level);

    std::vector<std::string> csv{"kind,sign,weight"};
    std::string pretty;
    if (f.is_interior()) {
        csv.push_back("interior," + std::to_string(f.sign) + "," + weight_csv(f.weight));
        pretty = "interior, sign " + std::to_string(f.sign) + ", representative " +
                 f.weight.str() + "\n";
    } else {
        csv.push_back("boundary,,");
        pretty = "boundary (multiplicity 0)\n";
    }
    emit(cfg, meta_block(cfg, cfg.level), fht::fold_outcome_to_json(f), csv, pretty);
    return 0;
}

int cmd_fusion(const RunConfig& cfg, const std::string& lambda_s, const std::string& mu_s,
               const std::string& oracle)
{
    const auto rs = fht::RootSystem::build(fht::LieType::parse(cfg.type));
    const fht::Weight lambda = parse_weight(lambda_s, rs.rank());
    const fht::Weight mu = parse_weight(mu_s, rs.rank());
    fht::FreudenthalCache cache(cfg.cache_dir);
    const fht::FusionElement prod = fht::fusion(rs, lambda, mu, cfg.k, &cache);

    json result = fht::fusion_element_to_json(prod);
    if (oracle == "smatrix") {
        const auto s = fht::s_matrix(rs, cfg.k);
        if (s.unitarity_error() > cfg.tolerance)
            throw fht::InternalError("S-matrix unitarity error " +
                                     std::to_string(s.unitarity_error()));
        const fht::FusionElement check = fht::verlinde_fusion(s, lambda, mu);
        result["oracle"] = "smatrix";
        if (!(check == prod))
            throw fht::OracleError("fusion disagrees with the S-matrix oracle at " +
                                   lambda.str() + " * " + mu.str());
        result["oracle_agrees"] = true;
    }

    std::vector<std::string> csv{"lambda,mu,nu,coeff"};
    for (const auto& [nu, c] : prod.coeffs())
        csv.push_back(weight_csv(lambda) + "," + weight_csv(mu) + "," + weight_csv(nu) + "," +
                      std::to_string(c));
    const std::string pretty = "[" + lambda.str() + "] * [" + mu.str() + "] = " + prod.str() +
                               "\n";
    emit(cfg, meta_block(cfg, cfg.k), result, csv, pretty);
    return 0;
}

int cmd_fusion_table(const RunConfig& cfg, const std::string& oracle)
{
    const auto rs = fht::RootSystem::build(fht::LieType::parse(cfg.type));
    const auto lw = fht::level_weights(rs, cfg.k);
    fht::FreudenthalCache cache(cfg.cache_dir);

    std::optional<fht::SMatrix> s;
    if (oracle == "smatrix") {
        s = fht::s_matrix(rs, cfg.k);
        if (s->unitarity_error() > cfg.tolerance)
            throw fht::InternalError("S-matrix unitarity error " +
                                     std::to_string(s->unitarity_error()));
    }

    const size_t n = lw.weights.size();
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) pairs.emplace_back(a, b);

    std::vector<fht::FusionElement> table(pairs.size(), fht::FusionElement(cfg.k));
    std::vector<char> agrees(pairs.size(), 1);
    fht::parallel_for(pairs.size(), cfg.jobs, [&](size_t i) {
        const auto& [a, b] = pairs[i];
        table[i] = fht::fusion(rs, lw.weights[a], lw.weights[b], cfg.k, &cache);
        if (s && !(fht::verlinde_fusion(*s, lw.weights[a], lw.weights[b]) == table[i]))
            agrees[i] = 0;
    });

    for (size_t i = 0; i < pairs.size(); ++i)
        if (!agrees[i])
            throw fht::OracleError("fusion disagrees with the S-matrix oracle at " +
                                   lw.weights[pairs[i].first].str() + " * " +
                                   lw.weights[pairs[i].second].str());

    json rows = json::array();
    std::vector<std::string> csv{"lambda,mu,nu,coeff"};
    std::string pretty;
    for (size_t i = 0; i < pairs.size(); ++i) {
        const fht::Weight &a = lw.weights[pairs[i].first], &b = lw.weights[pairs[i].second];
        json row = {{"lambda", fht::weight_to_json(a)},
                    {"mu", fht::weight_to_json(b)},
                    {"product", fht::fusion_element_to_json(table[i])}};
        rows.push_back(row);
        for (const auto& [nu, c] : table[i].coeffs())
            csv.push_back(weight_csv(a) + "," + weight_csv(b) + "," + weight_csv(nu) + "," +
                          std::to_string(c));
        pretty += "[" + a.str() + "] * [" + b.str() + "] = " + table[i].str() + "\n";
    }
    json result = {{"k", cfg.k}, {"weights", json::array()}, {"table", rows}};
    for (const auto& w : lw.weights) result["weights"].push_back(fht::weight_to_json(w));
    if (s) result["oracle"] = "smatrix";

    emit(cfg, meta_block(cfg, cfg.k), result, csv, pretty);
    return 0;
}

int cmd_fht_image(const RunConfig& cfg, const std::string& lambda_s)
{
    const auto rs = fht::RootSystem::build(fht::LieType::parse(cfg.type));
    const fht::Weight lambda = parse_weight(lambda_s, rs.rank());
    const fht::FormalCharacter img = fht::fht_image(rs, lambda, cfg.k, cfg.window);

    std::vector<std::string> csv{"weight,mult"};
    std::string pretty = "image of [" + lambda.str() + "] at k=" + std::to_string(cfg.k) +
                         ", window " + std::to_string(cfg.window) + ":\n";
    for (const auto& [w, m] : img.support()) {
        csv.push_back(weight_csv(w) + "," + std::to_string(m));
        pretty += "  " + w.str() + " : " + std::to_string(m) + "\n";
    }
    json result = fht::formal_character_to_json(img);
    result["lambda"] = fht::weight_to_json(lambda);
    result["window"] = cfg.window;
    emit(cfg, meta_block(cfg, cfg.k), result, csv, pretty);
    return 0;
}

int cmd_group_law(const RunConfig& cfg, const std::string& g1_s, const std::string& g2_s)
{
    const auto rs = fht::RootSystem::build(fht::LieType::parse(cfg.type));
    fht::GroupElem g1, g2;
    if (!g1_s.empty() && !g2_s.empty()) {
        g1 = group_elem_from_json(rs, json::parse(g1_s), cfg.level);
        g2 = group_elem_from_json(rs, json::parse(g2_s), cfg.level);
    } else {
        fht::Sampler gen(cfg.seed);
        g1 = gen.group_elem(rs, cfg.level);
        g2 = gen.group_elem(rs, cfg.level);
    }

    const fht::GroupElem prod_bas = fht::multiply(rs, g1, g2, fht::ExtVariant::bas);
    const fht::GroupElem prod_triv = fht::multiply(rs, g1, g2, fht::ExtVariant::triv);
    const int sig = fht::sigma(rs, g1.eta, g2.eta);

    json result = {{"g1", group_elem_to_json(g1)},
                   {"g2", group_elem_to_json(g2)},
                   {"product_bas", group_elem_to_json(prod_bas)},
                   {"product_triv", group_elem_to_json(prod_triv)},
                   {"sigma", sig},
                   {"epsilon", fht::epsilon(rs, g1.eta, g2.eta)},
                   {"kappa", fht::kappa(rs, g1.eta, g2.t, cfg.level).value.str()}};
    if (cfg.level == 1) {
        const bool hom = fht::psi(rs, prod_bas) ==
                         fht::multiply(rs, fht::psi(rs, g1), fht::psi(rs, g2),
                                       fht::ExtVariant::triv);
        result["psi_homomorphism"] = hom;
        if (!hom) throw fht::InternalError("Psi failed to intertwine the group laws");
    }

    std::vector<std::string> csv{"key,value"};
    csv.push_back("sigma," + std::to_string(sig));
    csv.push_back("product_bas_z," + prod_bas.z.value.str());
    csv.push_back("product_triv_z," + prod_triv.z.value.str());
    std::string pretty = "g1 = " + g1.str() + "\ng2 = " + g2.str() + "\ng1 g2 (bas)  = " +
                         prod_bas.str() + "\ng1 g2 (triv) = " + prod_triv.str() +
                         "\nsigma(eta1, eta2) = " + std::to_string(sig) + "\n";
    emit(cfg, meta_block(cfg, cfg.level), result, csv, pretty);
    return 0;
}

int cmd_algebra(const RunConfig& cfg, const std::string& terms_s)
{
    const auto rs = fht::RootSystem::build(fht::LieType::parse(cfg.type));
    fht::ThetaElement elem(cfg.level);
    if (terms_s.empty()) {
        elem.add(fht::CorootElem::zero(rs.rank()), fht::Weight::zero(rs.rank()), 1);
    } else {
        for (const auto& t : json::parse(terms_s))
            elem.add(fht::CorootElem(t.at("eta").get<fht::IntVec>()),
                     fht::Weight(t.at("mu").get<fht::IntVec>()),
                     t.value("c", std::int64_t(1)));
    }
    const fht::BlockMatrixModel model = fht::matrix_model(rs, elem, cfg.window);

    json blocks = json::array();
    for (size_t c = 0; c < model.block_count(); ++c)
        blocks.push_back({{"rep", fht::weight_to_json(model.transversal().rep(c))},
                          {"matrix", model.block(c)}});
    json result = {{"level", cfg.level},
                   {"window", cfg.window},
                   {"block_count", model.block_count()},
                   {"block_dim", model.block_dim()},
                   {"element", elem.str()},
                   {"blocks", blocks}};

    std::vector<std::string> csv{"block,rep,rows"};
    for (size_t c = 0; c < model.block_count(); ++c)
        csv.push_back(std::to_string(c) + "," + weight_csv(model.transversal().rep(c)) + "," +
                      std::to_string(model.block_dim()));
    std::string pretty = elem.str() + "\n" + std::to_string(model.block_count()) +
                         " blocks of dimension " + std::to_string(model.block_dim()) + "\n";
    emit(cfg, meta_block(cfg, cfg.level), result, csv, pretty);
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::vector<std::string> suites, std::int64_t cases,
               const std::string& type_filter, std::optional<std::int64_t> k_filter)
{
    if (suites.empty()) suites = fht::all_suites();
    for (const auto& s : suites) {
        if (std::find(fht::all_suites().begin(), fht::all_suites().end(), s) ==
            fht::all_suites().end())
            throw CLI::ValidationError("--suite", "unknown suite '" + s + "'");
    }

    fht::VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.jobs = cfg.jobs;
    opt.cases = cases;
    if (!type_filter.empty()) opt.types.push_back(fht::LieType::parse(type_filter));
    opt.k = k_filter;

    json result = json::array();
    std::vector<std::string> csv{"suite,check,cases,failures"};
    std::string pretty;
    bool all_passed = true;
    for (const auto& name : suites) {
        const fht::SuiteResult r = fht::run_suite(name, opt);
        all_passed = all_passed && r.passed();
        json checks = json::array();
        for (const auto& c : r.checks) {
            checks.push_back(
                {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}});
            csv.push_back(name + ",\"" + c.name + "\"," + std::to_string(c.cases) + "," +
                          std::to_string(c.failures.size()));
        }
        result.push_back({{"suite", r.suite},
                          {"cases", r.total_cases()},
                          {"failures", r.total_failures()},
                          {"passed", r.passed()},
                          {"checks", checks}});
        pretty += (r.passed() ? "PASS " : "FAIL ") + r.suite + ": " +
                  std::to_string(r.total_cases()) + " cases, " +
                  std::to_string(r.total_failures()) + " failures\n";
        for (const auto& c : r.checks)
            for (const auto& f : c.failures) pretty += "    " + f + "\n";
    }

    emit(cfg, meta_block(cfg, cfg.k), result, csv, pretty);
    return all_passed ? 0 : 4;
}

// Flat key=value config support: `--config FILE` is stripped from argv and
// each `key=value` line becomes `--key value` unless that flag was given
// explicitly, so command-line flags always win.
std::vector<std::string> merge_config(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size())
                throw std::invalid_argument("--config requires a file argument");
            config_path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            args.erase(args.begin() + i);
            break;
        }
    }
    if (config_path.empty()) return args;

    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file '" + config_path + "'");
    auto given = [&](const std::string& key) {
        for (const auto& a : args)
            if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0 ||
                (key.size() == 1 && (a == "-" + key || a.rfind("-" + key + "=", 0) == 0)))
                return true;
        return false;
    };
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || given(key)) continue;
        args.push_back("--" + key);
        args.push_back(value);
    }
    return args;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in level-k Verlinde rings, affine Weyl folding, and "
                 "twisted lattice group algebras.  A plain key=value file passed as "
                 "--config FILE is merged under explicit flags."};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "Worker count for table and verify commands")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance, "Numeric tolerance for floating-point checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--cache-dir", cfg.cache_dir,
                   "Directory for the persistent weight-system cache")
        ->envname("FHT_CACHE_DIR");

    std::string weight, lambda_s, mu_s, oracle, g1_s, g2_s, terms_s, vtype;
    std::vector<std::string> suites;
    std::int64_t cases = 0;
    std::int64_t k_filter_raw = -1;

    auto* info = app.add_subcommand("info", "Root system summary");
    info->add_option("--type", cfg.type, "Simple type, e.g. A2")->required();

    auto* fold = app.add_subcommand("fold", "Fold a weight into the shifted alcove");
    fold->add_option("--type", cfg.type)->required();
    fold->add_option("--level", cfg.level, "Affine level l")->check(CLI::PositiveNumber)
        ->required();
    fold->add_option("--weight", weight, "Comma-separated coordinates")->required();

    auto* fus = app.add_subcommand("fusion", "Fusion product of two level weights");
    fus->add_option("--type", cfg.type)->required();
    fus->add_option("-k,--k", cfg.k, "Level k")->check(CLI::NonNegativeNumber)->required();
    fus->add_option("--lambda", lambda_s)->required();
    fus->add_option("--mu", mu_s)->required();
    fus->add_option("--oracle", oracle, "Cross-check: smatrix")
        ->check(CLI::IsMember({"smatrix"}));

    auto* table = app.add_subcommand("fusion-table", "Full fusion table at level k");
    table->add_option("--type", cfg.type)->required();
    table->add_option("-k,--k", cfg.k)->check(CLI::NonNegativeNumber)->required();
    table->add_option("--oracle", oracle)->check(CLI::IsMember({"smatrix"}));

    auto* image = app.add_subcommand("fht-image", "Windowed generator image character");
    image->add_option("--type", cfg.type)->required();
    image->add_option("-k,--k", cfg.k)->check(CLI::NonNegativeNumber)->required();
    image->add_option("--lambda", lambda_s)->required();
    image->add_option("--window", cfg.window)->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* law = app.add_subcommand("group-law", "Multiply elements of T x| Pi^bas / Pi^triv");
    law->add_option("--type", cfg.type)->required();
    law->add_option("--level", cfg.level)->capture_default_str();
    law->add_option("--g1", g1_s, "JSON element {\"t\":[..],\"eta\":[..],\"z\":\"p/q\"}");
    law->add_option("--g2", g2_s, "JSON element; omit both for a seeded demo pair");

    auto* alg = app.add_subcommand("algebra", "Block matrix model of a theta element");
    alg->add_option("--type", cfg.type)->required();
    alg->add_option("--level", cfg.level)->required();
    alg->add_option("--window", cfg.window, "Window in eta coordinates")
        ->check(CLI::PositiveNumber)->capture_default_str();
    alg->add_option("--terms", terms_s, "JSON [{\"eta\":[..],\"mu\":[..],\"c\":n}, ...]");

    auto* ver = app.add_subcommand("verify", "Run the invariant suites");
    ver->add_option("--suite", suites, "Suites to run (default: all)");
    ver->add_option("--type", vtype, "Restrict suites to one simple type");
    ver->add_option("-k,--k", k_filter_raw, "Level/cap override for the restricted type");
    ver->add_option("--cases", cases, "Override per-check case counts");

    try {
        std::vector<std::string> args = merge_config(argc, argv);
        std::reverse(args.begin(), args.end()); // CLI11 consumes from the back
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (info->parsed()) return cmd_info(cfg);
        if (fold->parsed()) return cmd_fold(cfg, weight);
        if (fus->parsed()) return cmd_fusion(cfg, lambda_s, mu_s, oracle);
        if (table->parsed()) return cmd_fusion_table(cfg, oracle);
        if (image->parsed()) return cmd_fht_image(cfg, lambda_s);
        if (law->parsed()) return cmd_group_law(cfg, g1_s, g2_s);
        if (alg->parsed()) return cmd_algebra(cfg, terms_s);
        if (ver->parsed())
            return cmd_verify(cfg, suites, cases, vtype,
                              k_filter_raw >= 0 ? std::optional<std::int64_t>(k_filter_raw)
                                                : std::nullopt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fht::OracleError& e) {
        std::cerr << "oracle disagreement: " << e.what() << "\n";
        return 3;
    } catch (const fht::InternalError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
