#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "csys/ultrafilter.hpp"
#include "test_support.hpp"

using namespace csys;
using namespace csys::testing;

namespace {

SetFamily family_of(std::initializer_list<Mask> masks) {
    SetFamily f{std::vector<Mask>(masks)};
    f.normalize();
    return f;
}

// {A : f(A) <= k and x0 in A}, the canonical conditional-mode witness.
SetFamily principal_family(const ConnectivitySystem& sys, Value k, int element = 0) {
    SetFamily f;
    for (Mask m = 0; m <= sys.full_mask(); ++m) {
        if ((m & (Mask{1} << element)) && sys.evaluate(m) <= k) f.members.push_back(m);
        if (sys.full_mask() == 0) break;
    }
    f.normalize();
    return f;
}

bool passes(const SetFamily& f, const ConnectivitySystem& sys, Value k, FeMode mode,
            bool fp = false) {
    SearchConfig config;
    config.order_k = k;
    config.fe_mode = mode;
    config.require_fp = fp;
    return is_weak_ultrafilter(f, sys, k, config).overall;
}

} // namespace

TEST_CASE("single axiom checks on the two-element system") {
    auto sys = two_element_table();
    const Mask a = 0b01, x = 0b11;
    auto w = family_of({x, a});
    for (const char* id : {"FB", "FH", "WIS", "FW", "FE"})
        CHECK(check_axiom(w, sys, 1, id, FeMode::Conditional).pass);

    SUBCASE("FW fails on the empty set") {
        auto entry = check_axiom(family_of({0, x}), sys, 1, "FW", FeMode::Conditional);
        CHECK_FALSE(entry.pass);
        CHECK(entry.witnesses.front().front() == 0);
    }
    SUBCASE("FE fails on the empty family") {
        auto entry = check_axiom(family_of({}), sys, 1, "FE", FeMode::Conditional);
        CHECK_FALSE(entry.pass);
        CHECK(entry.witnesses.front().front() == 0); // neither empty nor X present
    }
    SUBCASE("FB flags an inefficient member") {
        auto entry = check_axiom(family_of({a}), sys, 0, "FB", FeMode::Conditional);
        CHECK_FALSE(entry.pass);
    }
    SUBCASE("FP flags singletons") {
        auto entry = check_axiom(w, sys, 1, "FP", FeMode::Conditional);
        CHECK_FALSE(entry.pass);
        CHECK(entry.witnesses.front().front() == a);
    }
    SUBCASE("unknown axiom id") {
        CHECK_THROWS_AS(check_axiom(w, sys, 1, "XX", FeMode::Conditional), InputError);
    }
}

TEST_CASE("weak ultrafilter conjunction") {
    auto sys = two_element_table();
    auto w = family_of({0b11, 0b01});
    CHECK(passes(w, sys, 1, FeMode::Conditional));

    auto triangle = triangle_graph_cut();
    const Mask x = triangle.full_mask();
    CHECK(passes(family_of({x}), triangle, 1, FeMode::Conditional));
    CHECK_FALSE(passes(family_of({x}), triangle, 1, FeMode::Unconditional));

    SearchConfig uncond;
    uncond.fe_mode = FeMode::Unconditional;
    auto report = is_weak_ultrafilter(family_of({x}), triangle, 1, uncond);
    bool fe_failed = false;
    for (const auto& e : report.entries)
        if (e.id == "FE") fe_failed = !e.pass;
    CHECK(fe_failed);
}

TEST_CASE("classical filters") {
    GroundSet ground({"a", "b"});
    CHECK(check_classical(family_of({0b01, 0b11}), ground, true).overall);

    auto only_x = check_classical(family_of({0b11}), ground, true);
    CHECK_FALSE(only_x.overall); // F4 fails at {a}
    for (const auto& e : only_x.entries)
        if (e.id != "F4") CHECK(e.pass);

    auto bad = check_classical(family_of({0b01, 0b10, 0b11}), ground, false);
    bool f1_failed = false;
    for (const auto& e : bad.entries)
        if (e.id == "F1") f1_failed = !e.pass;
    CHECK(f1_failed); // {a} and {b} intersect to the missing empty set

    // A principal family is an ultrafilter on any nonempty ground set.
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        GroundSet g(labels);
        SetFamily principal;
        for (Mask m = 0; m <= g.full_mask(); ++m)
            if (m & 1u) principal.members.push_back(m);
        principal.normalize();
        CHECK(check_classical(principal, g, true).overall);
    }
}

TEST_CASE("search on small systems") {
    auto sys = two_element_table();
    SearchConfig cond;
    auto found = search(sys, 1, cond);
    REQUIRE(found.has_value());
    CHECK(passes(*found, sys, 1, FeMode::Conditional));

    auto triangle = triangle_graph_cut();
    SUBCASE("unconditional fast path") {
        SearchConfig uncond;
        uncond.fe_mode = FeMode::Unconditional;
        CHECK_FALSE(search(triangle, 1, uncond).has_value());
        auto at_two = search(triangle, 2, uncond);
        REQUIRE(at_two.has_value());
        CHECK(passes(*at_two, triangle, 2, FeMode::Unconditional));
    }
    SUBCASE("conditional witness at k=1 is {X}") {
        auto w = search(triangle, 1, cond);
        REQUIRE(w.has_value());
        CHECK(w->members == std::vector<Mask>{triangle.full_mask()});
    }
}

TEST_CASE("enumerate equals the brute-force oracle") {
    std::vector<ConnectivitySystem> systems;
    systems.push_back(two_element_table());
    systems.push_back(triangle_graph_cut());
    systems.push_back(constant_zero_table(3));
    GeneratorConfig gc;
    gc.kind = GeneratorKind::RandomWeightedGraphCut;
    gc.vertices = 3;
    gc.edges = 3;
    gc.seed = 5;
    gc.count = 4;
    for (auto& sys : generate(gc)) systems.push_back(std::move(sys));

    for (const auto& sys : systems) {
        for (Value k = 0; k <= sys.max_value(); ++k) {
            for (FeMode mode : {FeMode::Conditional, FeMode::Unconditional}) {
                for (bool fp : {false, true}) {
                    if (sys.enumerate_k_efficient(k).size() > kMaxBruteUniverse) continue;
                    SearchConfig config;
                    config.order_k = k;
                    config.fe_mode = mode;
                    config.require_fp = fp;
                    auto fast = enumerate_families(sys, k, config, 100000);
                    auto slow = brute_force_enumerate(sys, k, config);
                    CHECK(fast.total == slow.size());
                    CHECK(fast.families == slow);
                    CHECK(search(sys, k, config).has_value() == !slow.empty());
                }
            }
        }
    }
}

TEST_CASE("enumeration details") {
    auto sys = two_element_table();
    SearchConfig cond;
    auto result = enumerate_families(sys, 1, cond, 100);
    auto has = [&](std::initializer_list<Mask> masks) {
        return std::find(result.families.begin(), result.families.end(), family_of(masks)) !=
               result.families.end();
    };
    CHECK(has({0b11, 0b01}));
    CHECK(has({0b11, 0b10}));

    SUBCASE("limit truncates but keeps the total") {
        auto limited = enumerate_families(sys, 1, cond, 1);
        CHECK(limited.families.size() == 1);
        CHECK(limited.total == result.total);
        CHECK(limited.families.front() == result.families.front());
    }
    SUBCASE("triangle conditional k=1 has exactly {X}") {
        auto triangle = triangle_graph_cut();
        auto r = enumerate_families(triangle, 1, cond, 100);
        REQUIRE(r.total == 1);
        CHECK(r.families.front().members == std::vector<Mask>{triangle.full_mask()});
    }
    SUBCASE("below f(empty) only the empty family qualifies") {
        ConnectivitySystem lifted = table2(2, 3, 3, 2);
        SearchConfig config;
        auto slow = brute_force_enumerate(lifted, 1, config);
        REQUIRE(slow.size() == 1);
        CHECK(slow.front().members.empty());
        auto fast = enumerate_families(lifted, 1, config, 10);
        CHECK(fast.families == slow);
    }
}

TEST_CASE("unconditional existence equivalence") {
    GeneratorConfig gc;
    gc.kind = GeneratorKind::RandomGraphCut;
    gc.vertices = 5;
    gc.edges = 6;
    gc.seed = 17;
    gc.count = 10;
    SearchConfig uncond;
    uncond.fe_mode = FeMode::Unconditional;
    for (const auto& sys : generate(gc)) {
        const Value top = sys.max_value();
        for (Value k = 0; k <= top; ++k) {
            const bool exists = search(sys, k, uncond).has_value();
            CHECK(exists == (top <= k));
        }
    }
}

TEST_CASE("conditional principal witness") {
    std::vector<ConnectivitySystem> systems{triangle_graph_cut(), k4_graph_cut(),
                                            two_element_table()};
    for (const auto& sys : systems) {
        for (Value k = sys.evaluate(0); k <= sys.max_value(); ++k) {
            auto principal = principal_family(sys, k);
            CHECK(passes(principal, sys, k, FeMode::Conditional));
        }
    }
}

TEST_CASE("derived exclusivity of complements") {
    auto sys = triangle_graph_cut();
    SearchConfig cond;
    for (Value k = sys.evaluate(0); k <= sys.max_value(); ++k) {
        auto result = enumerate_families(sys, k, cond, 100000);
        for (const auto& f : result.families)
            for (Mask m : f.members)
                CHECK_FALSE(f.contains(sys.ground().complement(m)));
    }
}

TEST_CASE("tangle search") {
    auto triangle = triangle_graph_cut();
    auto t = search_tangle(triangle, 1);
    REQUIRE(t.has_value());
    CHECK(t->members == std::vector<Mask>{triangle.full_mask()});
    CHECK(check_tangle(*t, triangle, 1).overall);

    SUBCASE("constant zero admits a tangle at k=0") {
        auto zero = constant_zero_table(4);
        auto tz = search_tangle(zero, 0);
        REQUIRE(tz.has_value());
        CHECK(check_tangle(*tz, zero, 0).overall);
    }
    SUBCASE("every tangle passes the conditional weak ultrafilter axioms") {
        GeneratorConfig gc;
        gc.kind = GeneratorKind::RandomWeightedGraphCut;
        gc.vertices = 4;
        gc.edges = 5;
        gc.seed = 29;
        gc.count = 6;
        for (const auto& sys : generate(gc)) {
            for (Value k = 0; k <= sys.max_value(); ++k) {
                auto found = search_tangle(sys, k);
                if (found) CHECK(passes(*found, sys, k, FeMode::Conditional));
            }
        }
    }
}

TEST_CASE("max order scans") {
    SearchConfig uncond;
    uncond.fe_mode = FeMode::Unconditional;

    auto triangle = triangle_graph_cut();
    auto scan = max_order(triangle, uncond);
    CHECK(scan.exists_at_k == std::vector<char>{0, 0, 1});
    CHECK(scan.max_order == 3);

    auto pair = two_element_table();
    auto scan2 = max_order(pair, uncond);
    CHECK(scan2.exists_at_k == std::vector<char>{0, 1});
    CHECK(scan2.max_order == 2);

    auto zero = constant_zero_table(3);
    auto scan3 = max_order(zero, uncond);
    CHECK(scan3.exists_at_k == std::vector<char>{1});
    CHECK(scan3.max_order == 1);
}

TEST_CASE("family JSON round trip") {
    auto sys = triangle_graph_cut();
    const Json doc = {{"members", Json::array({Json::array({"a-b"}), Json::array()})}};
    auto family = family_from_json(doc, sys.ground());
    CHECK(family.members == std::vector<Mask>{0, 0b001});

    const Json out = family_to_json(family, sys.ground());
    CHECK(family_from_json(out, sys.ground()) == family);

    CHECK_THROWS_AS(family_from_json({{"members", {{"zz"}}}}, sys.ground()), ParseError);
    CHECK_THROWS_AS(family_from_json(Json::array(), sys.ground()), ParseError);
}

TEST_CASE("certificates") {
    auto triangle = triangle_graph_cut();
    SearchConfig cond;
    cond.order_k = 1;
    auto w = search(triangle, 1, cond);
    REQUIRE(w.has_value());
    const Json cert = certificate_to_json(*w, triangle, 1, cond);
    CHECK(cert["order"] == 2);
    CHECK(cert["overall"] == true);
    CHECK(cert["family"].size() == 1);
    CHECK(cert["config"]["fe_mode"] == "conditional");
}

TEST_CASE("dualized search respects FS when requested") {
    auto zero = constant_zero_table(3);
    SearchConfig fs;
    fs.axiom_set = AxiomSet::UltrafilterFs;
    auto found = search(zero, 0, fs);
    REQUIRE(found.has_value());
    CHECK(is_weak_ultrafilter(*found, zero, 0, fs).overall);
    // FS forces intersection membership, so the witness is intersection closed.
    for (Mask a : found->members)
        for (Mask b : found->members) CHECK(found->contains(a & b));
}
