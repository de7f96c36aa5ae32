#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "csys/decomposition.hpp"
#include "csys/ultrafilter.hpp"

namespace csys {

// The ideal dual to a weak ultrafilter: complements of every member.
SetFamily dual_ideal(const SetFamily& family, const ConnectivitySystem& system);

struct TheoremVerdict {
    std::string instance;
    Value k = 0;
    SearchConfig config;
    std::string theorem;       // "theorem6" | "theorem7"
    bool wuf_exists = false;
    std::optional<SetFamily> witness_family;
    Value branchwidth = 0;
    DecompositionTree witness_tree;
    bool consistent = true;
    bool vacuous = false;      // theorem 7 with the hypothesis bw = k+1 unmet
    std::string violated_claim = "none";
};

// Theorem 6 reading: a weak ultrafilter of order k+1 forces bw(X) <= k.
TheoremVerdict check_theorem6(const ConnectivitySystem& system, Value k,
                              const SearchConfig& config);
// Theorem 7 reading: bw(X) = k+1 forces nonexistence at order k+1.
TheoremVerdict check_theorem7(const ConnectivitySystem& system, Value k,
                              const SearchConfig& config);

struct MatrixCell {
    TheoremVerdict theorem6;
    TheoremVerdict theorem7;
};

// Every k in [0, max f] x both FE readings x require_fp on/off.
std::vector<MatrixCell> run_matrix(const ConnectivitySystem& system);

enum class GeneratorKind { RandomGraphCut, RandomWeightedGraphCut, RandomCutRank };

struct GeneratorConfig {
    GeneratorKind kind = GeneratorKind::RandomGraphCut;
    int vertices = 4;
    int edges = 5;          // ignored by cut-rank (density 1/2)
    std::uint64_t seed = 0;
    int count = 1;
};

std::vector<ConnectivitySystem> generate(const GeneratorConfig& config);

struct FuzzCellStats {
    FeMode fe_mode = FeMode::Conditional;
    bool require_fp = false;
    Value k = 0;
    std::size_t theorem6_violations = 0;
    std::size_t theorem7_violations = 0;
};

struct FuzzReport {
    std::size_t corpus_size = 0;
    std::vector<FuzzCellStats> cells; // aggregated per (fe_mode, require_fp, k)
    std::size_t findings = 0;
    std::filesystem::path findings_dir;
};

// Runs the interpretation matrix over a corpus, serializing every violating
// verdict (instance + family + decomposition + verdict) under findings_dir.
// Violations are findings, not failures.
FuzzReport fuzz(const std::vector<ConnectivitySystem>& corpus,
                const std::filesystem::path& findings_dir,
                std::optional<std::uint64_t> seed = std::nullopt, int jobs = 1);

Json verdict_to_json(const TheoremVerdict& verdict, const ConnectivitySystem& system);
Json matrix_to_json(const std::vector<MatrixCell>& matrix, const ConnectivitySystem& system);
std::string matrix_to_text(const std::vector<MatrixCell>& matrix);
Json fuzz_report_to_json(const FuzzReport& report);

} // namespace csys
