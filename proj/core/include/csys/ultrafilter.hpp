#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csys/connectivity.hpp"
#include "csys/instance_io.hpp"

namespace csys {

inline constexpr int kMaxSearchSize = 12;        // search universe <= 2^n, n <= 12
inline constexpr int kMaxBruteUniverse = 16;     // brute-force family enumeration cap

// Collection of distinct subsets of a shared ground set, kept in canonical
// order (size, then lexicographic on member indices).
struct SetFamily {
    std::vector<Mask> members;

    void normalize();
    bool contains(Mask m) const;
    bool operator==(const SetFamily& other) const { return members == other.members; }
};

bool family_less(const SetFamily& a, const SetFamily& b);

enum class FeMode { Conditional, Unconditional };
enum class AxiomSet { WeakUltrafilter, UltrafilterFs, Tangle, Classical };

struct SearchConfig {
    Value order_k = 0;
    FeMode fe_mode = FeMode::Conditional;
    bool require_fp = false;
    AxiomSet axiom_set = AxiomSet::WeakUltrafilter;
};

struct AxiomEntry {
    std::string id;
    bool pass = true;
    std::vector<std::vector<Mask>> witnesses; // each witness: the offending set(s)
};

struct AxiomReport {
    std::vector<AxiomEntry> entries;
    bool overall = true;
};

// Axiom ids: FB, FH, WIS, FW, FE, FP, FS (order axioms); F1..F4 (classical);
// T1 (one side per pair), T2 (triple intersection), T3 (no empty set).
AxiomEntry check_axiom(const SetFamily& family, const ConnectivitySystem& system, Value k,
                       const std::string& axiom, FeMode fe_mode = FeMode::Conditional);

AxiomReport is_weak_ultrafilter(const SetFamily& family, const ConnectivitySystem& system,
                                Value k, const SearchConfig& config);

// Def 3 style check on a plain ground set: (F1) intersection closure,
// (F2) upward closure, (F3) empty set excluded, and with `ultra` also
// (F4) one of A, X\A for every subset.
AxiomReport check_classical(const SetFamily& family, const GroundSet& ground, bool ultra);

// Tangle axioms over the k-efficient universe: exactly one side of every
// k-efficient complementary pair, every triple of members intersects, and
// the empty set is excluded.
AxiomReport check_tangle(const SetFamily& family, const ConnectivitySystem& system, Value k);

// Backtracking over complementary pairs of k-efficient sets. Returns a
// family passing the configured axiom set, or nothing when none exists.
std::optional<SetFamily> search(const ConnectivitySystem& system, Value k,
                                const SearchConfig& config);

struct EnumerationResult {
    std::vector<SetFamily> families; // canonical order, truncated to the limit
    std::size_t total = 0;
};

EnumerationResult enumerate_families(const ConnectivitySystem& system, Value k,
                                     const SearchConfig& config, std::size_t limit);

// Definitional oracle: test every subset of the k-efficient universe.
std::vector<SetFamily> brute_force_enumerate(const ConnectivitySystem& system, Value k,
                                             const SearchConfig& config);

std::optional<SetFamily> search_tangle(const ConnectivitySystem& system, Value k);

struct OrderScan {
    std::vector<char> exists_at_k;  // indexed by k, 0..max f
    Value max_order = 0;            // largest k+1 with a successful search; 0 when none
};

OrderScan max_order(const ConnectivitySystem& system, const SearchConfig& config);

// {"members": [[labels], ...]}
SetFamily family_from_json(const Json& doc, const GroundSet& ground);
Json family_to_json(const SetFamily& family, const GroundSet& ground);

Json axiom_report_to_json(const AxiomReport& report, const GroundSet& ground);
Json certificate_to_json(const SetFamily& family, const ConnectivitySystem& system, Value k,
                         const SearchConfig& config);
Json search_config_to_json(const SearchConfig& config);

} // namespace csys
