// Command-line front end for connectivity systems: function verification,
// exact branch-width, weak ultrafilter search, and duality audits.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "csys/duality.hpp"

namespace {

using namespace csys;

// Exit codes: 0 success/found, 2 usage or parse, 3 none-exists or capacity,
// 4 check violations, 5 internal oracle mismatch, 6 I/O failure.
enum ExitCode {
    kOk = 0,
    kUsage = 2,
    kNoneOrCapacity = 3,
    kViolations = 4,
    kOracleMismatch = 5,
    kIoFailure = 6,
};

struct Options {
    std::string instance_path;
    std::string format = "json";
    std::string decompose_path;
    std::string check_path;
    bool oracle = false;

    Value k = 0;
    std::string fe_mode = "conditional";
    bool require_fp = false;
    bool with_fs = false;
    std::string family_path;
    std::string family_inline;
    std::size_t limit = 100;
    std::string out_path;

    std::string gen_kind;
    int gen_vertices = 4;
    int gen_edges = 5;
    std::uint64_t seed = 0;
    int count = 1;
    int jobs = 1;
};

void emit(const Json& doc, const std::string& out_path) {
    if (out_path.empty())
        std::cout << doc.dump(2) << '\n';
    else
        write_json_file(out_path, doc);
}

SearchConfig make_config(const Options& opt) {
    SearchConfig config;
    config.order_k = opt.k;
    if (opt.fe_mode == "conditional") config.fe_mode = FeMode::Conditional;
    else if (opt.fe_mode == "unconditional") config.fe_mode = FeMode::Unconditional;
    else throw InputError("--fe-mode must be 'conditional' or 'unconditional'");
    config.require_fp = opt.require_fp;
    config.axiom_set = opt.with_fs ? AxiomSet::UltrafilterFs : AxiomSet::WeakUltrafilter;
    return config;
}

Json check_report_json(const CheckReport& report, const GroundSet& ground) {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        Json sets = Json::array();
        for (Mask m : v.sets) sets.push_back(ground.names_of(m));
        violations.push_back({{"sets", std::move(sets)}, {"values", v.values}, {"detail", v.detail}});
    }
    return Json{{"check", report.check},
                {"pass", report.pass},
                {"violation_count", report.violation_count},
                {"violations", std::move(violations)}};
}

int cmd_verify(const Options& opt) {
    const auto system = load_instance(opt.instance_path);
    Json doc;
    doc["instance"] = system.name();
    Json checks = Json::array();
    bool all_pass = true;
    for (const CheckReport& report :
         {system.verify_symmetry(), system.verify_submodularity(), system.verify_lemma2()}) {
        all_pass = all_pass && report.pass;
        checks.push_back(check_report_json(report, system.ground()));
    }
    doc["pass"] = all_pass;
    doc["checks"] = std::move(checks);
    if (opt.format == "text") {
        for (const auto& c : doc["checks"])
            std::cout << c["check"].get<std::string>() << ": "
                      << (c["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
    } else {
        emit(doc, opt.out_path);
    }
    return all_pass ? kOk : kViolations;
}

int cmd_branchwidth(const Options& opt) {
    const auto system = load_instance(opt.instance_path);

    if (!opt.check_path.empty()) {
        const Json decomp = load_json_file(opt.check_path);
        const DecompositionCheck check = check_decomposition(decomp, system);
        Json doc{{"pass", check.pass}, {"problems", check.problems}};
        emit(doc, opt.out_path);
        return check.pass ? kOk : kViolations;
    }

    const BranchwidthResult result = exact_branchwidth(system);
    Json doc;
    doc["instance"] = system.name();
    doc["branchwidth"] = result.width;
    if (system.size() < 2) doc["note"] = "degenerate tree: fewer than two elements";

    if (opt.oracle) {
        const Value oracle = brute_force_branchwidth(system);
        doc["oracle"] = oracle;
        if (oracle != result.width) {
            doc["error"] = "exact DP disagrees with the enumeration oracle";
            emit(doc, opt.out_path);
            return kOracleMismatch;
        }
    }
    if (!opt.decompose_path.empty())
        write_json_file(opt.decompose_path, decomposition_to_json(result.witness, system));

    if (opt.format == "text")
        std::cout << result.width << '\n';
    else
        emit(doc, opt.out_path);
    return kOk;
}

int cmd_wuf(const Options& opt, const std::string& action) {
    const auto system = load_instance(opt.instance_path);
    const SearchConfig config = make_config(opt);

    if (action == "find") {
        const auto found = search(system, opt.k, config);
        if (!found) {
            Json doc{{"order", opt.k + 1}, {"config", search_config_to_json(config)},
                     {"exists", false}};
            emit(doc, opt.out_path);
            return kNoneOrCapacity;
        }
        emit(certificate_to_json(*found, system, opt.k, config), opt.out_path);
        return kOk;
    }
    if (action == "enumerate") {
        const EnumerationResult result = enumerate_families(system, opt.k, config, opt.limit);
        Json families = Json::array();
        for (const auto& f : result.families)
            families.push_back(family_to_json(f, system.ground())["members"]);
        Json doc{{"order", opt.k + 1},
                 {"config", search_config_to_json(config)},
                 {"total", result.total},
                 {"families", std::move(families)}};
        emit(doc, opt.out_path);
        return kOk;
    }
    // check
    Json family_doc = opt.family_path.empty() ? Json::parse(opt.family_inline)
                                              : load_json_file(opt.family_path);
    const SetFamily family = family_from_json(family_doc, system.ground());
    const AxiomReport report = is_weak_ultrafilter(family, system, opt.k, config);
    Json doc{{"order", opt.k + 1},
             {"config", search_config_to_json(config)},
             {"family", family_to_json(family, system.ground())["members"]},
             {"axioms", axiom_report_to_json(report, system.ground())},
             {"overall", report.overall}};
    emit(doc, opt.out_path);
    return report.overall ? kOk : kViolations;
}

int cmd_tangle_find(const Options& opt) {
    const auto system = load_instance(opt.instance_path);
    const auto found = search_tangle(system, opt.k);
    SearchConfig config;
    config.order_k = opt.k;
    config.axiom_set = AxiomSet::Tangle;
    if (!found) {
        Json doc{{"order", opt.k + 1}, {"config", search_config_to_json(config)},
                 {"exists", false}};
        emit(doc, opt.out_path);
        return kNoneOrCapacity;
    }
    emit(certificate_to_json(*found, system, opt.k, config), opt.out_path);
    return kOk;
}

GeneratorConfig make_generator(const Options& opt) {
    GeneratorConfig gen;
    if (opt.gen_kind == "random-graph-cut") gen.kind = GeneratorKind::RandomGraphCut;
    else if (opt.gen_kind == "random-weighted-graph-cut")
        gen.kind = GeneratorKind::RandomWeightedGraphCut;
    else if (opt.gen_kind == "random-cut-rank") gen.kind = GeneratorKind::RandomCutRank;
    else throw InputError("--gen must be one of random-graph-cut, "
                          "random-weighted-graph-cut, random-cut-rank");
    gen.vertices = opt.gen_vertices;
    gen.edges = opt.gen_edges;
    gen.seed = opt.seed;
    gen.count = opt.count;
    return gen;
}

int cmd_duality(const Options& opt, const std::string& action) {
    std::vector<ConnectivitySystem> corpus;
    std::optional<std::uint64_t> seed;
    if (!opt.gen_kind.empty()) {
        corpus = generate(make_generator(opt));
        seed = opt.seed;
    } else if (!opt.instance_path.empty()) {
        corpus.push_back(load_instance(opt.instance_path));
    } else {
        throw InputError("duality needs an instance file or --gen");
    }

    if (action == "matrix") {
        const auto matrix = run_matrix(corpus.front());
        if (opt.format == "text")
            std::cout << matrix_to_text(matrix);
        else
            emit(matrix_to_json(matrix, corpus.front()), opt.out_path);
        return kOk;
    }
    // fuzz
    const std::string dir = opt.out_path.empty() ? "findings" : opt.out_path;
    const FuzzReport report = fuzz(corpus, dir, seed, opt.jobs);
    std::cout << fuzz_report_to_json(report).dump(2) << '\n';
    return kOk; // findings are reported, not failed
}

int cmd_gen(const Options& opt) {
    const auto corpus = generate(make_generator(opt));
    Json instances = Json::array();
    for (const auto& system : corpus) {
        Json doc = instance_to_json(system);
        doc["name"] = system.name();
        instances.push_back(std::move(doc));
    }
    if (!opt.out_path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(opt.out_path, ec);
        if (ec) throw IoError("cannot create output directory '" + opt.out_path + "'");
        for (std::size_t i = 0; i < corpus.size(); ++i)
            write_json_file(std::filesystem::path(opt.out_path) / (corpus[i].name() + ".json"),
                            instances[i]);
    } else {
        std::cout << instances.dump(2) << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"connectivity system toolkit: branch-width, weak ultrafilters, duality audits"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "json | text")
            ->check(CLI::IsMember({"json", "text"}));
    };
    auto add_wuf_flags = [&](CLI::App* cmd) {
        cmd->add_option("-k,--order-k", opt.k, "order bound k (family order is k+1)")->required();
        cmd->add_option("--fe-mode", opt.fe_mode, "conditional | unconditional")
            ->check(CLI::IsMember({"conditional", "unconditional"}));
        cmd->add_flag("--require-fp", opt.require_fp, "also require the non-principal axiom");
        cmd->add_flag("--fs", opt.with_fs, "also require intersection membership");
        cmd->add_option("--out", opt.out_path, "write the JSON result here");
    };

    auto* verify = app.add_subcommand("verify", "check symmetry, submodularity, and the derived bounds");
    verify->add_option("instance", opt.instance_path)->required();
    add_format(verify);

    auto* bw = app.add_subcommand("branchwidth", "exact branch-width with optional witness output");
    bw->add_option("instance", opt.instance_path)->required();
    bw->add_option("--decompose", opt.decompose_path, "write the witness decomposition JSON");
    bw->add_flag("--oracle", opt.oracle, "cross-check against full tree enumeration");
    bw->add_option("--check", opt.check_path, "re-verify a decomposition JSON instead");
    bw->add_option("--out", opt.out_path);
    add_format(bw);

    auto* wuf = app.add_subcommand("wuf", "weak ultrafilters of a given order");
    wuf->require_subcommand(1);
    for (const char* action : {"find", "enumerate", "check"}) {
        auto* sub = wuf->add_subcommand(action);
        sub->add_option("instance", opt.instance_path)->required();
        add_wuf_flags(sub);
        if (std::string(action) == "enumerate")
            sub->add_option("--limit", opt.limit, "max families to output");
        if (std::string(action) == "check") {
            sub->add_option("--family", opt.family_path, "family JSON file");
            sub->add_option("--family-inline", opt.family_inline, "family JSON literal");
        }
    }

    auto* tangle = app.add_subcommand("tangle", "tangle-style obstructions");
    auto* tangle_find = tangle->add_subcommand("find");
    tangle_find->add_option("instance", opt.instance_path)->required();
    tangle_find->add_option("-k,--order-k", opt.k)->required();
    tangle_find->add_option("--out", opt.out_path);
    tangle->require_subcommand(1);

    auto add_gen_flags = [&](CLI::App* cmd, bool required) {
        auto* g = cmd->add_option("--gen,--kind", opt.gen_kind,
                                  "random-graph-cut | random-weighted-graph-cut | random-cut-rank");
        if (required) g->required();
        cmd->add_option("--vertices", opt.gen_vertices);
        cmd->add_option("--edges", opt.gen_edges);
        cmd->add_option("--seed", opt.seed);
        cmd->add_option("--count", opt.count);
    };

    auto* duality = app.add_subcommand("duality", "machine-check the two duality claims");
    duality->require_subcommand(1);
    for (const char* action : {"matrix", "fuzz"}) {
        auto* sub = duality->add_subcommand(action);
        sub->add_option("instance", opt.instance_path);
        add_gen_flags(sub, false);
        sub->add_option("--out", opt.out_path, "output path (fuzz: findings directory)");
        sub->add_option("--jobs", opt.jobs, "parallel fuzz workers");
        add_format(sub);
    }

    auto* gen = app.add_subcommand("gen", "generate seeded random instances");
    add_gen_flags(gen, true);
    gen->add_option("--out", opt.out_path, "directory for instance files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(opt);
        if (bw->parsed()) return cmd_branchwidth(opt);
        if (wuf->parsed()) {
            for (const char* action : {"find", "enumerate", "check"})
                if (wuf->get_subcommand(action)->parsed()) return cmd_wuf(opt, action);
        }
        if (tangle->parsed()) return cmd_tangle_find(opt);
        if (duality->parsed()) {
            for (const char* action : {"matrix", "fuzz"})
                if (duality->get_subcommand(action)->parsed()) return cmd_duality(opt, action);
        }
        if (gen->parsed()) return cmd_gen(opt);
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kNoneOrCapacity;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    }
}
