#include "csys/ultrafilter.hpp"

#include <algorithm>

namespace csys {

namespace {

constexpr std::size_t kWitnessCap = 32;

void add_witness(AxiomEntry& entry, std::vector<Mask> sets) {
    entry.pass = false;
    if (entry.witnesses.size() < kWitnessCap) entry.witnesses.push_back(std::move(sets));
}

std::vector<char> membership(const SetFamily& family, int n) {
    std::vector<char> present(std::size_t{1} << n, 0);
    for (Mask m : family.members) present[m] = 1;
    return present;
}

} // namespace

void SetFamily::normalize() {
    std::sort(members.begin(), members.end(), canonical_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool SetFamily::contains(Mask m) const {
    return std::find(members.begin(), members.end(), m) != members.end();
}

bool family_less(const SetFamily& a, const SetFamily& b) {
    return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                        b.members.begin(), b.members.end(), canonical_less);
}

AxiomEntry check_axiom(const SetFamily& family, const ConnectivitySystem& system, Value k,
                       const std::string& axiom, FeMode fe_mode) {
    const int n = system.size();
    if (n > kMaxGroundSize)
        throw CapacityError("axiom checks require n <= " + std::to_string(kMaxGroundSize));
    const Mask full = system.full_mask();
    const auto present = membership(family, n);
    AxiomEntry entry{.id = axiom};

    if (axiom == "FB") {
        for (Mask a : family.members)
            if (system.evaluate(a) > k) add_witness(entry, {a});
    } else if (axiom == "FH") {
        for (Mask a : family.members) {
            for (Mask b = a;; b = (b + 1) | a) { // supersets of a
                if (b != a && system.evaluate(b) <= k && !present[b]) add_witness(entry, {a, b});
                if (b == full) break;
            }
        }
    } else if (axiom == "WIS") {
        for (Mask a : family.members)
            for (Mask b : family.members)
                if (system.evaluate(a & b) <= k && (a & b) == 0) add_witness(entry, {a, b});
    } else if (axiom == "FW") {
        if (present[0]) add_witness(entry, {0});
    } else if (axiom == "FE") {
        for (Mask a = 0;; ++a) {
            const bool in_scope =
                fe_mode == FeMode::Unconditional || system.evaluate(a) <= k;
            if (in_scope && !present[a] && !present[full & ~a]) add_witness(entry, {a});
            if (a == full) break;
        }
    } else if (axiom == "FP") {
        for (Mask a : family.members)
            if (set_size(a) == 1) add_witness(entry, {a});
    } else if (axiom == "FS") {
        for (Mask a : family.members)
            for (Mask b : family.members)
                if (system.evaluate(a & b) <= k && !present[a & b]) add_witness(entry, {a, b});
    } else {
        throw InputError("unknown axiom id '" + axiom + "'");
    }
    return entry;
}

AxiomReport is_weak_ultrafilter(const SetFamily& family, const ConnectivitySystem& system,
                                Value k, const SearchConfig& config) {
    AxiomReport report;
    std::vector<std::string> axioms{"FB", "FH", "WIS", "FW", "FE"};
    if (config.require_fp) axioms.push_back("FP");
    if (config.axiom_set == AxiomSet::UltrafilterFs) axioms.push_back("FS");
    for (const auto& id : axioms) {
        report.entries.push_back(check_axiom(family, system, k, id, config.fe_mode));
        report.overall = report.overall && report.entries.back().pass;
    }
    return report;
}

AxiomReport check_classical(const SetFamily& family, const GroundSet& ground, bool ultra) {
    const int n = ground.size();
    if (n > kMaxGroundSize)
        throw CapacityError("classical filter checks require n <= " + std::to_string(kMaxGroundSize));
    const Mask full = ground.full_mask();
    const auto present = membership(family, n);
    AxiomReport report;

    AxiomEntry f1{.id = "F1"};
    for (Mask a : family.members)
        for (Mask b : family.members)
            if (!present[a & b]) add_witness(f1, {a, b});
    AxiomEntry f2{.id = "F2"};
    for (Mask a : family.members) {
        for (Mask b = a;; b = (b + 1) | a) {
            if (b != a && !present[b]) add_witness(f2, {a, b});
            if (b == full) break;
        }
    }
    AxiomEntry f3{.id = "F3"};
    if (present[0]) add_witness(f3, {0});

    report.entries = {std::move(f1), std::move(f2), std::move(f3)};
    if (ultra) {
        AxiomEntry f4{.id = "F4"};
        for (Mask a = 0;; ++a) {
            if (!present[a] && !present[full & ~a]) add_witness(f4, {a});
            if (a == full) break;
        }
        report.entries.push_back(std::move(f4));
    }
    for (const auto& e : report.entries) report.overall = report.overall && e.pass;
    return report;
}

AxiomReport check_tangle(const SetFamily& family, const ConnectivitySystem& system, Value k) {
    const int n = system.size();
    if (n > kMaxGroundSize)
        throw CapacityError("tangle checks require n <= " + std::to_string(kMaxGroundSize));
    const Mask full = system.full_mask();
    const auto present = membership(family, n);
    AxiomReport report;

    AxiomEntry t1{.id = "T1"}; // exactly one side of every k-efficient pair
    for (Mask a : family.members)
        if (system.evaluate(a) > k) add_witness(t1, {a});
    for (Mask a = 0;; ++a) {
        if (system.evaluate(a) <= k) {
            const Mask c = full & ~a;
            if (present[a] + present[c] != 1 && a != c) add_witness(t1, {a});
        }
        if (a == full) break;
    }
    AxiomEntry t2{.id = "T2"}; // every triple of members intersects
    for (Mask a : family.members)
        for (Mask b : family.members)
            for (Mask c : family.members)
                if ((a & b & c) == 0) add_witness(t2, {a, b, c});
    AxiomEntry t3{.id = "T3"};
    if (present[0]) add_witness(t3, {0});

    report.entries = {std::move(t1), std::move(t2), std::move(t3)};
    for (const auto& e : report.entries) report.overall = report.overall && e.pass;
    return report;
}

namespace {

// Backtracking over complementary pairs of k-efficient sets. Each pair gets
// at least one member (FE applies to every pair left after the fast path),
// tangles get exactly one. Pruning is sound only; candidates are verified
// against the full axiom suite before being reported.
class FamilySearch {
public:
    FamilySearch(const ConnectivitySystem& system, Value k, const SearchConfig& config)
        : system_(system), k_(k), config_(config), full_(system.full_mask()) {
        if (system.size() > kMaxSearchSize)
            throw CapacityError("family search requires n <= " + std::to_string(kMaxSearchSize));
        universe_ = system.enumerate_k_efficient(k);
        status_.assign(std::size_t{1} << system.size(), kOut);
        for (Mask m : universe_) status_[m] = kUnknown;

        if (config.axiom_set != AxiomSet::Tangle && config.fe_mode == FeMode::Unconditional)
            infeasible_ = system.max_value() > k;

        std::vector<char> seen(std::size_t{1} << system.size(), 0);
        for (Mask m : universe_) {
            const Mask c = full_ & ~m;
            if (seen[m] || seen[c]) continue;
            seen[m] = seen[c] = 1;
            pairs_.push_back({m, c});
        }
        std::sort(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
            const Value fa = system_.evaluate(a.lo), fb = system_.evaluate(b.lo);
            if (fa != fb) return fa < fb;
            return canonical_less(std::min(a.lo, a.hi), std::min(b.lo, b.hi));
        });
        // Try the side holding element 0 first; the principal family is the
        // usual witness and this order reaches it without backtracking.
        for (auto& p : pairs_)
            if (system.size() > 0 && !(p.lo & 1u)) std::swap(p.lo, p.hi);
    }

    // Visits every family satisfying the configured axiom set. Returns false
    // from the callback to stop early.
    void run(const std::function<bool(const SetFamily&)>& emit) {
        if (infeasible_) return;
        emit_ = &emit;
        stopped_ = false;
        chosen_.clear();
        descend(0);
    }

private:
    static constexpr char kUnknown = 0, kIn = 1, kOut = 2;

    struct Pair {
        Mask lo, hi;
    };

    bool violates_on_add(Mask a) const {
        if (a == 0) return true; // FW / T3
        if (config_.axiom_set == AxiomSet::Tangle) {
            for (Mask b : chosen_) {
                if ((a & b) == 0) return true;
                for (Mask c : chosen_)
                    if ((a & b & c) == 0) return true;
            }
            return false;
        }
        if (config_.require_fp && set_size(a) == 1) return true;
        for (Mask b : chosen_) // WIS
            if ((a & b) == 0 && system_.evaluate(0) <= k_) return true;
        // FH: a superset already excluded forces a out.
        for (Mask s = a;; s = (s + 1) | a) {
            if (s != a && status_[s] == kOut && system_.evaluate(s) <= k_) return true;
            if (s == full_) break;
        }
        return false;
    }

    bool violates_on_exclude(Mask s) const {
        if (config_.axiom_set == AxiomSet::Tangle) return false;
        if (system_.evaluate(s) > k_) return false;
        for (Mask a : chosen_) // FH: s is a superset of an included member
            if (a != s && (a & s) == a) return true;
        return false;
    }

    void descend(std::size_t index) {
        if (stopped_) return;
        if (index == pairs_.size()) {
            SetFamily family{chosen_};
            family.normalize();
            const bool ok = config_.axiom_set == AxiomSet::Tangle
                                ? check_tangle(family, system_, k_).overall
                                : is_weak_ultrafilter(family, system_, k_, config_).overall;
            if (ok && !(*emit_)(family)) stopped_ = true;
            return;
        }
        const auto [lo, hi] = pairs_[index];
        try_state(index, {lo}, {hi});
        try_state(index, {hi}, {lo});
        if (config_.axiom_set != AxiomSet::Tangle) try_state(index, {lo, hi}, {});
    }

    void try_state(std::size_t index, std::initializer_list<Mask> in,
                   std::initializer_list<Mask> out) {
        if (stopped_) return;
        for (Mask m : in)
            if (violates_on_add(m)) return;
        for (Mask m : out)
            if (violates_on_exclude(m)) return;
        for (Mask m : in) {
            status_[m] = kIn;
            chosen_.push_back(m);
        }
        for (Mask m : out) status_[m] = kOut;
        descend(index + 1);
        for (Mask m : in) {
            status_[m] = kUnknown;
            chosen_.pop_back();
        }
        for (Mask m : out) status_[m] = kUnknown;
    }

    const ConnectivitySystem& system_;
    Value k_;
    SearchConfig config_;
    Mask full_;
    bool infeasible_ = false;
    std::vector<Mask> universe_;
    std::vector<Pair> pairs_;
    std::vector<char> status_;
    std::vector<Mask> chosen_;
    const std::function<bool(const SetFamily&)>* emit_ = nullptr;
    bool stopped_ = false;
};

} // namespace

std::optional<SetFamily> search(const ConnectivitySystem& system, Value k,
                                const SearchConfig& config) {
    FamilySearch engine(system, k, config);
    std::optional<SetFamily> found;
    engine.run([&](const SetFamily& family) {
        found = family;
        return false;
    });
    return found;
}

EnumerationResult enumerate_families(const ConnectivitySystem& system, Value k,
                                     const SearchConfig& config, std::size_t limit) {
    FamilySearch engine(system, k, config);
    std::vector<SetFamily> all;
    engine.run([&](const SetFamily& family) {
        all.push_back(family);
        return true;
    });
    std::sort(all.begin(), all.end(), family_less);
    EnumerationResult result;
    result.total = all.size();
    if (all.size() > limit) all.resize(limit);
    result.families = std::move(all);
    return result;
}

std::vector<SetFamily> brute_force_enumerate(const ConnectivitySystem& system, Value k,
                                             const SearchConfig& config) {
    const auto universe = system.enumerate_k_efficient(k);
    if (universe.size() > kMaxBruteUniverse)
        throw CapacityError("brute-force enumeration requires a k-efficient universe of at most " +
                            std::to_string(kMaxBruteUniverse) + " sets");
    std::vector<SetFamily> out;
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << universe.size()); ++pick) {
        SetFamily family;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (pick & (std::uint32_t{1} << i)) family.members.push_back(universe[i]);
        family.normalize();
        const bool ok = config.axiom_set == AxiomSet::Tangle
                            ? check_tangle(family, system, k).overall
                            : is_weak_ultrafilter(family, system, k, config).overall;
        if (ok) out.push_back(std::move(family));
    }
    std::sort(out.begin(), out.end(), family_less);
    return out;
}

std::optional<SetFamily> search_tangle(const ConnectivitySystem& system, Value k) {
    SearchConfig config;
    config.order_k = k;
    config.axiom_set = AxiomSet::Tangle;
    return search(system, k, config);
}

OrderScan max_order(const ConnectivitySystem& system, const SearchConfig& config) {
    OrderScan scan;
    const Value top = system.max_value();
    for (Value k = 0; k <= top; ++k) {
        const bool exists = search(system, k, config).has_value();
        scan.exists_at_k.push_back(exists ? 1 : 0);
        if (exists) scan.max_order = k + 1;
    }
    return scan;
}

SetFamily family_from_json(const Json& doc, const GroundSet& ground) {
    if (!doc.is_object() || !doc.contains("members") || !doc["members"].is_array())
        throw ParseError("family file needs key 'members' holding an array of label arrays");
    SetFamily family;
    const Json& members = doc["members"];
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!members[i].is_array())
            throw ParseError("key 'members' index " + std::to_string(i) + " must be an array");
        try {
            family.members.push_back(ground.mask_of(members[i].get<std::vector<std::string>>()));
        } catch (const InputError& e) {
            throw ParseError("key 'members' index " + std::to_string(i) + ": " + e.what());
        }
    }
    family.normalize();
    return family;
}

Json family_to_json(const SetFamily& family, const GroundSet& ground) {
    Json members = Json::array();
    for (Mask m : family.members) members.push_back(ground.names_of(m));
    return Json{{"members", std::move(members)}};
}

Json axiom_report_to_json(const AxiomReport& report, const GroundSet& ground) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json witnesses = Json::array();
        for (const auto& w : e.witnesses) {
            Json sets = Json::array();
            for (Mask m : w) sets.push_back(ground.names_of(m));
            witnesses.push_back(std::move(sets));
        }
        entries.push_back({{"id", e.id}, {"pass", e.pass}, {"witnesses", std::move(witnesses)}});
    }
    return entries;
}

Json search_config_to_json(const SearchConfig& config) {
    static const char* kAxiomSets[] = {"weak-ultrafilter", "ultrafilter-fs", "tangle", "classical"};
    return Json{
        {"order_k", config.order_k},
        {"fe_mode", config.fe_mode == FeMode::Conditional ? "conditional" : "unconditional"},
        {"require_fp", config.require_fp},
        {"axiom_set", kAxiomSets[static_cast<int>(config.axiom_set)]},
    };
}

Json certificate_to_json(const SetFamily& family, const ConnectivitySystem& system, Value k,
                         const SearchConfig& config) {
    const AxiomReport report = config.axiom_set == AxiomSet::Tangle
                                   ? check_tangle(family, system, k)
                                   : is_weak_ultrafilter(family, system, k, config);
    Json doc;
    doc["order"] = k + 1;
    doc["config"] = search_config_to_json(config);
    doc["family"] = family_to_json(family, system.ground())["members"];
    doc["axioms"] = axiom_report_to_json(report, system.ground());
    doc["overall"] = report.overall;
    return doc;
}

} // namespace csys
