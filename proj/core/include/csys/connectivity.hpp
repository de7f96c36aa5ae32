#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csys/ground_set.hpp"

namespace csys {

// f(A) = number of vertices touching at least one edge of A and at least one
// edge of the complement. Ground set = edges.
struct GraphCutSpec {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges; // vertex index pairs
};

// f(A) = total weight of edges between A and its complement. Ground set = vertices.
struct WeightedGraphCutSpec {
    std::vector<std::pair<int, int>> edges;
    std::vector<Value> weights; // non-negative, one per edge
};

// f(A) = GF(2) rank of the adjacency submatrix rows A x columns X\A.
// Ground set = vertices; rows packed as bitmasks.
struct CutRankSpec {
    std::vector<Mask> rows;
};

// Explicit value for every subset, indexed by mask.
struct TableSpec {
    std::vector<Value> values;
};

using FunctionSpec = std::variant<GraphCutSpec, WeightedGraphCutSpec, CutRankSpec, TableSpec>;

struct Violation {
    std::vector<Mask> sets;    // the offending subset(s)
    std::vector<Value> values; // the function values involved
    std::string detail;
};

struct CheckReport {
    std::string check;
    bool pass = true;
    std::vector<Violation> violations; // capped; see violation_count for the total
    std::size_t violation_count = 0;
};

class ConnectivitySystem {
public:
    ConnectivitySystem(GroundSet ground, FunctionSpec spec, std::string name = "");

    const GroundSet& ground() const { return ground_; }
    const FunctionSpec& spec() const { return spec_; }
    const std::string& name() const { return name_; }
    int size() const { return ground_.size(); }
    Mask full_mask() const { return ground_.full_mask(); }

    Value evaluate(Mask subset) const;
    bool is_k_efficient(Mask subset, Value k) const { return evaluate(subset) <= k; }

    // All subsets A with f(A) <= k, in canonical order. Complement-closed by symmetry.
    std::vector<Mask> enumerate_k_efficient(Value k) const;

    Value max_value() const; // max of f over all subsets (exhaustive, n <= 16)

    CheckReport verify_symmetry() const;       // f(A) = f(X\A), all 2^n subsets
    CheckReport verify_submodularity() const;  // f(A)+f(B) >= f(A&B)+f(A|B), all pairs
    CheckReport verify_lemma2() const;         // f(A) >= f(0) = f(X); f(A)+f(B) >= f(A\B)+f(B\A)

    void clear_cache() const { cache_.assign(cache_.size(), kUnset); }

private:
    Value compute(Mask subset) const;

    static constexpr Value kUnset = -1;
    GroundSet ground_;
    FunctionSpec spec_;
    std::string name_;
    std::vector<Mask> incidence_;      // GraphCut: per-vertex mask of incident edges
    mutable std::vector<Value> cache_; // idempotent-write memo, one slot per subset
};

} // namespace csys
