#include "csys/duality.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <tuple>
#include <map>
#include <random>
#include <sstream>

namespace csys {

SetFamily dual_ideal(const SetFamily& family, const ConnectivitySystem& system) {
    SetFamily ideal;
    for (Mask m : family.members) {
        if (m & ~system.full_mask())
            throw InputError("family member lies outside the system's ground set");
        ideal.members.push_back(system.full_mask() & ~m);
    }
    ideal.normalize();
    return ideal;
}

namespace {

TheoremVerdict base_verdict(const ConnectivitySystem& system, Value k,
                            const SearchConfig& config, const char* theorem) {
    TheoremVerdict v;
    v.instance = system.name();
    v.k = k;
    v.config = config;
    v.config.order_k = k;
    v.theorem = theorem;
    auto found = search(system, k, v.config);
    v.wuf_exists = found.has_value();
    if (found) v.witness_family = std::move(*found);
    auto bw = exact_branchwidth(system);
    v.branchwidth = bw.width;
    v.witness_tree = std::move(bw.witness);
    return v;
}

} // namespace

TheoremVerdict check_theorem6(const ConnectivitySystem& system, Value k,
                              const SearchConfig& config) {
    TheoremVerdict v = base_verdict(system, k, config, "theorem6");
    v.consistent = !v.wuf_exists || v.branchwidth <= k;
    if (!v.consistent) v.violated_claim = "theorem6";
    return v;
}

TheoremVerdict check_theorem7(const ConnectivitySystem& system, Value k,
                              const SearchConfig& config) {
    TheoremVerdict v = base_verdict(system, k, config, "theorem7");
    if (v.branchwidth != k + 1) {
        v.vacuous = true;
        v.consistent = true;
    } else {
        v.consistent = !v.wuf_exists;
        if (!v.consistent) v.violated_claim = "theorem7";
    }
    return v;
}

std::vector<MatrixCell> run_matrix(const ConnectivitySystem& system) {
    std::vector<MatrixCell> cells;
    const Value top = system.max_value();
    for (Value k = 0; k <= top; ++k) {
        for (FeMode mode : {FeMode::Conditional, FeMode::Unconditional}) {
            for (bool fp : {false, true}) {
                SearchConfig config;
                config.order_k = k;
                config.fe_mode = mode;
                config.require_fp = fp;
                cells.push_back({check_theorem6(system, k, config),
                                 check_theorem7(system, k, config)});
            }
        }
    }
    return cells;
}

namespace {

std::vector<std::pair<int, int>> all_vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

std::vector<std::string> numbered_labels(const char* prefix, int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return labels;
}

} // namespace

std::vector<ConnectivitySystem> generate(const GeneratorConfig& config) {
    if (config.vertices < 1 || config.count < 0)
        throw InputError("generator needs at least one vertex and a non-negative count");
    const int max_edges = config.vertices * (config.vertices - 1) / 2;
    if (config.kind != GeneratorKind::RandomCutRank &&
        (config.edges < 0 || config.edges > max_edges))
        throw InputError("edge count must be between 0 and " + std::to_string(max_edges));
    if (config.kind == GeneratorKind::RandomGraphCut && config.edges > kMaxGroundSize)
        throw InputError("graph-cut ground set (edges) exceeds the hard cap");
    if (config.kind != GeneratorKind::RandomGraphCut && config.vertices > kMaxGroundSize)
        throw InputError("ground set (vertices) exceeds the hard cap");

    std::mt19937_64 rng(config.seed);
    std::vector<ConnectivitySystem> out;
    for (int i = 0; i < config.count; ++i) {
        std::ostringstream name;
        if (config.kind == GeneratorKind::RandomGraphCut ||
            config.kind == GeneratorKind::RandomWeightedGraphCut) {
            auto pairs = all_vertex_pairs(config.vertices);
            std::shuffle(pairs.begin(), pairs.end(), rng);
            pairs.resize(static_cast<std::size_t>(config.edges));
            std::sort(pairs.begin(), pairs.end());
            auto vertices = numbered_labels("v", config.vertices);
            if (config.kind == GeneratorKind::RandomGraphCut) {
                std::vector<std::string> labels;
                for (auto [u, v] : pairs)
                    labels.push_back(vertices[static_cast<std::size_t>(u)] + "-" +
                                     vertices[static_cast<std::size_t>(v)]);
                name << "graph-cut-s" << config.seed << "-" << i;
                out.emplace_back(GroundSet(std::move(labels)),
                                 GraphCutSpec{std::move(vertices), std::move(pairs)}, name.str());
            } else {
                std::uniform_int_distribution<Value> weight(1, 4);
                std::vector<Value> weights;
                for (std::size_t e = 0; e < pairs.size(); ++e) weights.push_back(weight(rng));
                name << "weighted-graph-cut-s" << config.seed << "-" << i;
                out.emplace_back(GroundSet(std::move(vertices)),
                                 WeightedGraphCutSpec{std::move(pairs), std::move(weights)},
                                 name.str());
            }
        } else {
            std::bernoulli_distribution edge(0.5);
            std::vector<Mask> rows(static_cast<std::size_t>(config.vertices), 0);
            for (int a = 0; a < config.vertices; ++a)
                for (int b = a + 1; b < config.vertices; ++b)
                    if (edge(rng)) {
                        rows[static_cast<std::size_t>(a)] |= Mask{1} << b;
                        rows[static_cast<std::size_t>(b)] |= Mask{1} << a;
                    }
            name << "cut-rank-s" << config.seed << "-" << i;
            out.emplace_back(GroundSet(numbered_labels("v", config.vertices)),
                             CutRankSpec{std::move(rows)}, name.str());
        }
    }
    return out;
}

Json verdict_to_json(const TheoremVerdict& verdict, const ConnectivitySystem& system) {
    Json doc;
    doc["instance"] = verdict.instance;
    doc["theorem"] = verdict.theorem;
    doc["k"] = verdict.k;
    doc["config"] = search_config_to_json(verdict.config);
    doc["wuf_exists"] = verdict.wuf_exists;
    if (verdict.witness_family)
        doc["witness_family"] = family_to_json(*verdict.witness_family, system.ground())["members"];
    doc["branchwidth"] = verdict.branchwidth;
    doc["consistent"] = verdict.consistent;
    doc["vacuous"] = verdict.vacuous;
    doc["violated_claim"] = verdict.violated_claim;
    return doc;
}

Json matrix_to_json(const std::vector<MatrixCell>& matrix, const ConnectivitySystem& system) {
    Json cells = Json::array();
    for (const auto& cell : matrix) {
        cells.push_back({{"k", cell.theorem6.k},
                         {"config", search_config_to_json(cell.theorem6.config)},
                         {"theorem6", verdict_to_json(cell.theorem6, system)},
                         {"theorem7", verdict_to_json(cell.theorem7, system)}});
    }
    return Json{{"instance", system.name()}, {"cells", std::move(cells)}};
}

std::string matrix_to_text(const std::vector<MatrixCell>& matrix) {
    std::ostringstream out;
    out << "  k  fe-mode        fp  wuf  bw  thm6        thm7\n";
    for (const auto& cell : matrix) {
        const auto& t6 = cell.theorem6;
        std::ostringstream mode;
        mode << (t6.config.fe_mode == FeMode::Conditional ? "conditional" : "unconditional");
        out << "  " << t6.k << "  ";
        out.width(13);
        out << std::left << mode.str() << "  " << (t6.config.require_fp ? "on " : "off")
            << "  " << (t6.wuf_exists ? "yes" : "no ") << "  " << t6.branchwidth << "   "
            << (t6.consistent ? "consistent" : "VIOLATED  ") << "  "
            << (cell.theorem7.vacuous ? "vacuous"
                                      : (cell.theorem7.consistent ? "consistent" : "VIOLATED"))
            << "\n";
    }
    return out.str();
}

FuzzReport fuzz(const std::vector<ConnectivitySystem>& corpus,
                const std::filesystem::path& findings_dir,
                std::optional<std::uint64_t> seed, int jobs) {
    FuzzReport report;
    report.corpus_size = corpus.size();
    report.findings_dir = findings_dir;

    std::vector<std::vector<MatrixCell>> matrices(corpus.size());
    if (jobs > 1 && corpus.size() > 1) {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1))
                matrices[i] = run_matrix(corpus[i]);
        };
        std::vector<std::future<void>> pool;
        for (int j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    } else {
        for (std::size_t i = 0; i < corpus.size(); ++i) matrices[i] = run_matrix(corpus[i]);
    }

    std::error_code ec;
    std::map<std::tuple<int, bool, Value>, FuzzCellStats> stats;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (const auto& cell : matrices[i]) {
            const auto& cfg = cell.theorem6.config;
            auto& slot = stats[{static_cast<int>(cfg.fe_mode), cfg.require_fp, cell.theorem6.k}];
            slot.fe_mode = cfg.fe_mode;
            slot.require_fp = cfg.require_fp;
            slot.k = cell.theorem6.k;
            for (const TheoremVerdict* v : {&cell.theorem6, &cell.theorem7}) {
                if (v->consistent) continue;
                if (v->theorem == "theorem6") ++slot.theorem6_violations;
                else ++slot.theorem7_violations;

                std::filesystem::path dir =
                    findings_dir / ("finding-" + std::to_string(report.findings++));
                std::filesystem::create_directories(dir, ec);
                if (ec) throw IoError("cannot create findings directory '" + dir.string() + "'");
                Json instance = instance_to_json(corpus[i]);
                instance["name"] = corpus[i].name();
                if (seed) instance["generator_seed"] = *seed;
                write_json_file(dir / "instance.json", instance);
                if (v->witness_family)
                    write_json_file(dir / "family.json",
                                    family_to_json(*v->witness_family, corpus[i].ground()));
                write_json_file(dir / "decomposition.json",
                                decomposition_to_json(v->witness_tree, corpus[i]));
                write_json_file(dir / "verdict.json", verdict_to_json(*v, corpus[i]));
            }
        }
    }
    for (const auto& [key, slot] : stats) report.cells.push_back(slot);
    return report;
}

Json fuzz_report_to_json(const FuzzReport& report) {
    Json cells = Json::array();
    for (const auto& c : report.cells) {
        cells.push_back({{"fe_mode", c.fe_mode == FeMode::Conditional ? "conditional" : "unconditional"},
                         {"require_fp", c.require_fp},
                         {"k", c.k},
                         {"theorem6_violations", c.theorem6_violations},
                         {"theorem7_violations", c.theorem7_violations}});
    }
    return Json{{"corpus_size", report.corpus_size},
                {"cells", std::move(cells)},
                {"findings", report.findings},
                {"findings_dir", report.findings_dir.string()}};
}

} // namespace csys
