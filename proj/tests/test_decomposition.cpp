#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "csys/decomposition.hpp"
#include "test_support.hpp"

using namespace csys;
using namespace csys::testing;

namespace {

DecompositionTree three_leaf_star() {
    DecompositionTree t;
    t.node_count = 4;
    t.leaf_element = {0, 1, 2, -1};
    t.edges = {{0, 3}, {1, 3}, {2, 3}};
    return t;
}

// Two internal nodes; {0,1} on one side, {2,3} on the other.
DecompositionTree four_leaf_caterpillar() {
    DecompositionTree t;
    t.node_count = 6;
    t.leaf_element = {0, 1, 2, 3, -1, -1};
    t.edges = {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}};
    return t;
}

std::string tree_signature(const DecompositionTree& t, int n) {
    // Multiset of canonical leaf-side masks, one per edge; identifies a
    // leaf-labeled tree up to isomorphism.
    GroundSet ground(std::vector<std::string>(
        [&] {
            std::vector<std::string> labels;
            for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
            return labels;
        }()));
    std::multiset<Mask> cuts;
    const Mask full = ground.full_mask();
    for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
        const Mask side = edge_side_set(t, e, ground);
        cuts.insert(std::min(side, full & ~side));
    }
    std::string sig;
    for (Mask m : cuts) sig += std::to_string(m) + ",";
    return sig;
}

} // namespace

TEST_CASE("edge side sets") {
    auto star = three_leaf_star();
    GroundSet ground({"x", "y", "z"});
    CHECK(edge_side_set(star, 0, ground) == 0b001);
    CHECK(edge_side_set(star, 1, ground) == 0b010);
    CHECK_THROWS_AS(edge_side_set(star, 9, ground), InputError);

    auto cat = four_leaf_caterpillar();
    GroundSet ground4({"x", "y", "z", "w"});
    CHECK(edge_side_set(cat, 4, ground4) == 0b0011);
    for (int e = 0; e < 5; ++e) {
        const Mask side = edge_side_set(cat, e, ground4);
        CHECK((side | ground4.complement(side)) == ground4.full_mask());
        CHECK((side & ground4.complement(side)) == 0);
    }
}

TEST_CASE("edge widths on the triangle") {
    auto sys = triangle_graph_cut();
    auto star = three_leaf_star();
    for (int e = 0; e < 3; ++e) CHECK(width_of_edge(star, sys, e) == 2);

    // Width is independent of which component is taken.
    for (int e = 0; e < 3; ++e) {
        const Mask side = edge_side_set(star, e, sys.ground());
        CHECK(sys.evaluate(side) == sys.evaluate(sys.ground().complement(side)));
    }
}

TEST_CASE("width of tree") {
    auto sys = triangle_graph_cut();
    auto report = width_of_tree(three_leaf_star(), sys);
    CHECK(report.width == 2);
    CHECK(report.records.size() == 3);

    SUBCASE("two-element tree") {
        ConnectivitySystem pair = table2(0, 1, 1, 0);
        DecompositionTree t;
        t.node_count = 2;
        t.leaf_element = {0, 1};
        t.edges = {{0, 1}};
        CHECK(width_of_tree(t, pair).width == 1);
    }
    SUBCASE("one-element tree has no edges") {
        ConnectivitySystem solo(GroundSet({"a"}), TableSpec{{5, 5}});
        DecompositionTree t;
        t.node_count = 1;
        t.leaf_element = {0};
        CHECK(width_of_tree(t, solo).width == 5);
    }
    SUBCASE("mismatched tree is rejected") {
        CHECK_THROWS_AS(width_of_tree(four_leaf_caterpillar(), sys), InputError);
    }
}

TEST_CASE("tree enumeration counts") {
    CHECK(all_trees(3).size() == 1);
    CHECK(all_trees(4).size() == 3);
    CHECK(all_trees(5).size() == 15);
    CHECK(all_trees(6).size() == 105);
    CHECK_THROWS_AS(all_trees(2), CapacityError);
    CHECK_THROWS_AS(all_trees(8), CapacityError);
}

TEST_CASE("enumerated trees are valid and pairwise distinct") {
    for (int n = 3; n <= 5; ++n) {
        std::set<std::string> signatures;
        enumerate_all_trees(n, [&](const DecompositionTree& t) {
            t.validate(n);
            signatures.insert(tree_signature(t, n));
        });
        CHECK(signatures.size() == all_trees(n).size());
    }
}

TEST_CASE("exact branch-width basics") {
    CHECK(exact_branchwidth(triangle_graph_cut()).width == 2);
    CHECK(exact_branchwidth(table2(0, 1, 1, 0)).width == 1);
    CHECK(exact_branchwidth(constant_zero_table(5)).width == 0);

    SUBCASE("degenerate sizes") {
        ConnectivitySystem solo(GroundSet({"a"}), TableSpec{{4, 4}});
        auto r = exact_branchwidth(solo);
        CHECK(r.width == 4);
        CHECK(r.witness.edges.empty());
        ConnectivitySystem none(GroundSet(std::vector<std::string>{}), TableSpec{{7}});
        CHECK(exact_branchwidth(none).width == 7);
    }
    SUBCASE("witness reproduces the returned width") {
        for (auto sys : {triangle_graph_cut(), k4_graph_cut()}) {
            auto r = exact_branchwidth(sys);
            r.witness.validate(sys.size());
            CHECK(width_of_tree(r.witness, sys).width == r.width);
        }
    }
}

TEST_CASE("DP equals the enumeration oracle") {
    auto k4 = k4_graph_cut();
    CHECK(exact_branchwidth(k4).width == brute_force_branchwidth(k4));
    CHECK(brute_force_branchwidth(triangle_graph_cut()) == 2);
    CHECK(brute_force_branchwidth(constant_zero_table(5)) == 0);

    GeneratorConfig gc;
    gc.kind = GeneratorKind::RandomWeightedGraphCut;
    gc.seed = 3;
    gc.count = 8;
    for (int v = 4; v <= 6; ++v) {
        gc.vertices = v;
        gc.edges = std::min(v + 2, v * (v - 1) / 2);
        for (const auto& sys : generate(gc))
            CHECK(exact_branchwidth(sys).width == brute_force_branchwidth(sys));
    }
}

TEST_CASE("branch-width sits between the singleton max and the subset max") {
    GeneratorConfig gc;
    gc.kind = GeneratorKind::RandomCutRank;
    gc.vertices = 6;
    gc.seed = 21;
    gc.count = 6;
    for (const auto& sys : generate(gc)) {
        Value singleton_max = 0;
        for (int i = 0; i < sys.size(); ++i)
            singleton_max = std::max(singleton_max, sys.evaluate(Mask{1} << i));
        const Value bw = exact_branchwidth(sys).width;
        CHECK(singleton_max <= bw);
        CHECK(bw <= sys.max_value());
        CHECK(bw >= sys.evaluate(0));
    }
}

TEST_CASE("decomposition JSON round trip") {
    auto sys = k4_graph_cut();
    auto r = exact_branchwidth(sys);
    const Json doc = decomposition_to_json(r.witness, sys);
    CHECK(doc["width"].get<Value>() == r.width);

    auto rebuilt = decomposition_from_json(doc, sys.ground());
    CHECK(width_of_tree(rebuilt, sys).width == r.width);

    auto check = check_decomposition(doc, sys);
    CHECK(check.pass);

    SUBCASE("tampered width is caught") {
        Json bad = doc;
        bad["width"] = r.width + 1;
        CHECK_FALSE(check_decomposition(bad, sys).pass);
    }
    SUBCASE("tampered edge record is caught") {
        Json bad = doc;
        bad["edge_widths"][0]["width"] = bad["edge_widths"][0]["width"].get<Value>() + 1;
        CHECK_FALSE(check_decomposition(bad, sys).pass);
    }
    SUBCASE("missing leaf is caught") {
        Json bad = doc;
        bad["tree"] = Json{{"leaf", "v0-v1"}};
        CHECK_FALSE(check_decomposition(bad, sys).pass);
    }
}

TEST_CASE("degenerate decomposition JSON") {
    ConnectivitySystem pair = table2(0, 1, 1, 0);
    auto r = exact_branchwidth(pair);
    const Json doc = decomposition_to_json(r.witness, pair);
    CHECK(check_decomposition(doc, pair).pass);

    ConnectivitySystem solo(GroundSet({"a"}), TableSpec{{3, 3}});
    auto rs = exact_branchwidth(solo);
    CHECK(check_decomposition(decomposition_to_json(rs.witness, solo), solo).pass);
}
