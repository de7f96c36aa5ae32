#include "csys/decomposition.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace csys {

int DecompositionTree::leaf_count() const {
    return static_cast<int>(std::count_if(leaf_element.begin(), leaf_element.end(),
                                          [](int e) { return e >= 0; }));
}

int DecompositionTree::degree(int node) const {
    int d = 0;
    for (auto [u, v] : edges)
        if (u == node || v == node) ++d;
    return d;
}

void DecompositionTree::validate(int ground_size) const {
    if (static_cast<int>(leaf_element.size()) != node_count)
        throw InputError("decomposition tree: leaf map size does not match node count");
    if (leaf_count() != ground_size)
        throw InputError("decomposition tree: leaf count does not match ground set size");
    if (static_cast<int>(edges.size()) != (node_count == 0 ? 0 : node_count - 1))
        throw InputError("decomposition tree: edge count is not node count minus one");

    std::vector<char> mapped(static_cast<std::size_t>(std::max(ground_size, 1)), 0);
    for (int node = 0; node < node_count; ++node) {
        const int elem = leaf_element[static_cast<std::size_t>(node)];
        const int d = degree(node);
        if (elem >= 0) {
            if (elem >= ground_size || mapped[static_cast<std::size_t>(elem)])
                throw InputError("decomposition tree: leaf map is not a bijection");
            mapped[static_cast<std::size_t>(elem)] = 1;
            if (node_count > 1 && d != 1)
                throw InputError("decomposition tree: leaf node has degree != 1");
        } else if (d != 3) {
            throw InputError("decomposition tree: internal node has degree != 3");
        }
    }

    // Connectivity; acyclicity follows from the edge count.
    if (node_count > 0) {
        std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const int at = stack.back();
            stack.pop_back();
            for (auto [u, v] : edges) {
                const int other = (u == at) ? v : (v == at ? u : -1);
                if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
                    seen[static_cast<std::size_t>(other)] = 1;
                    stack.push_back(other);
                }
            }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw InputError("decomposition tree: not connected");
    }
}

Mask edge_side_set(const DecompositionTree& tree, int edge, const GroundSet& ground) {
    if (edge < 0 || edge >= static_cast<int>(tree.edges.size()))
        throw InputError("unknown tree edge index " + std::to_string(edge));
    const auto [a, b] = tree.edges[static_cast<std::size_t>(edge)];
    const int start = std::min(a, b), blocked = std::max(a, b);

    Mask side = 0;
    std::vector<char> seen(static_cast<std::size_t>(tree.node_count), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        const int elem = tree.leaf_element[static_cast<std::size_t>(at)];
        if (elem >= 0) side |= Mask{1} << elem;
        for (std::size_t e = 0; e < tree.edges.size(); ++e) {
            if (static_cast<int>(e) == edge) continue;
            auto [u, v] = tree.edges[e];
            const int other = (u == at) ? v : (v == at ? u : -1);
            if (other >= 0 && other != blocked && !seen[static_cast<std::size_t>(other)]) {
                seen[static_cast<std::size_t>(other)] = 1;
                stack.push_back(other);
            }
        }
    }
    (void)ground;
    return side;
}

Value width_of_edge(const DecompositionTree& tree, const ConnectivitySystem& system, int edge) {
    return system.evaluate(edge_side_set(tree, edge, system.ground()));
}

WidthReport width_of_tree(const DecompositionTree& tree, const ConnectivitySystem& system) {
    tree.validate(system.size());
    WidthReport report;
    if (tree.edges.empty()) {
        report.width = system.evaluate(system.full_mask());
        return report;
    }
    report.width = 0;
    for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
        const Mask side = edge_side_set(tree, e, system.ground());
        const Value w = system.evaluate(side);
        report.records.push_back({e, side, w});
        report.width = std::max(report.width, w);
    }
    return report;
}

namespace {

class WitnessBuilder {
public:
    WitnessBuilder(const std::vector<Mask>& choice) : choice_(choice) {}

    // Returns the node anchoring subset S; for |S| >= 2 an internal node of
    // degree 2 so far (the caller adds the third edge).
    int build(Mask s, DecompositionTree& t) {
        if (set_size(s) == 1) {
            const int node = t.node_count++;
            t.leaf_element.push_back(std::countr_zero(s));
            return node;
        }
        const Mask a = choice_[s];
        const int left = build(a, t);
        const int right = build(s ^ a, t);
        const int node = t.node_count++;
        t.leaf_element.push_back(-1);
        t.edges.emplace_back(node, left);
        t.edges.emplace_back(node, right);
        return node;
    }

private:
    const std::vector<Mask>& choice_;
};

} // namespace

BranchwidthResult exact_branchwidth(const ConnectivitySystem& system) {
    const int n = system.size();
    if (n > kMaxDpSize)
        throw CapacityError("branch-width DP requires n <= " + std::to_string(kMaxDpSize));

    if (n < 2) {
        DecompositionTree t;
        if (n == 1) {
            t.node_count = 1;
            t.leaf_element = {0};
        }
        return {system.evaluate(system.full_mask()), std::move(t)};
    }

    const Mask full = system.full_mask();
    std::vector<Value> best(std::size_t{1} << n, 0);
    std::vector<Mask> choice(std::size_t{1} << n, 0);

    std::vector<Mask> by_size(std::size_t{1} << n);
    for (Mask m = 0; m <= full; ++m) by_size[m] = m;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](Mask a, Mask b) { return set_size(a) < set_size(b); });

    for (Mask s : by_size) {
        const int sz = set_size(s);
        if (sz <= 1) {
            if (sz == 1) best[s] = system.evaluate(s);
            continue;
        }
        const Mask anchor = Mask{1} << std::countr_zero(s);
        Value inner = -1;
        Mask pick = 0;
        // Unordered partitions S = A + B; A carries the lowest element of S.
        for (Mask a = (s - 1) & s; a; a = (a - 1) & s) {
            if (!(a & anchor)) continue;
            const Value cand = std::max(best[a], best[s ^ a]);
            if (inner < 0 || cand < inner || (cand == inner && canonical_less(a, pick))) {
                inner = cand;
                pick = a;
            }
        }
        best[s] = std::max(system.evaluate(s), inner);
        choice[s] = pick;
        if (s == full) best[s] = inner; // bw(X) itself has no f(X) term
    }

    BranchwidthResult result;
    result.width = best[full];
    WitnessBuilder builder(choice);
    DecompositionTree& t = result.witness;
    const Mask top = choice[full];
    const int left = builder.build(top, t);
    const int right = builder.build(full ^ top, t);
    t.edges.emplace_back(left, right);
    t.validate(n);
    return result;
}

namespace {

void extend_trees(DecompositionTree base, int next, int n,
                  const std::function<void(const DecompositionTree&)>& visit) {
    if (next == n) {
        visit(base);
        return;
    }
    const std::size_t edge_count = base.edges.size();
    for (std::size_t e = 0; e < edge_count; ++e) {
        DecompositionTree t = base;
        const auto [u, v] = t.edges[e];
        const int mid = t.node_count++;
        t.leaf_element.push_back(-1);
        const int leaf = t.node_count++;
        t.leaf_element.push_back(next);
        t.edges[e] = {u, mid};
        t.edges.emplace_back(mid, v);
        t.edges.emplace_back(mid, leaf);
        extend_trees(std::move(t), next + 1, n, visit);
    }
}

} // namespace

void enumerate_all_trees(int n, const std::function<void(const DecompositionTree&)>& visit) {
    if (n < kMinEnumSize || n > kMaxEnumSize)
        throw CapacityError("tree enumeration requires " + std::to_string(kMinEnumSize) +
                            " <= n <= " + std::to_string(kMaxEnumSize));
    DecompositionTree star;
    star.node_count = 4;
    star.leaf_element = {0, 1, 2, -1};
    star.edges = {{0, 3}, {1, 3}, {2, 3}};
    extend_trees(std::move(star), 3, n, visit);
}

std::vector<DecompositionTree> all_trees(int n) {
    std::vector<DecompositionTree> out;
    enumerate_all_trees(n, [&](const DecompositionTree& t) { out.push_back(t); });
    return out;
}

Value brute_force_branchwidth(const ConnectivitySystem& system) {
    Value best = -1;
    enumerate_all_trees(system.size(), [&](const DecompositionTree& t) {
        const Value w = width_of_tree(t, system).width;
        if (best < 0 || w < best) best = w;
    });
    return best;
}

namespace {

Json render_node(const DecompositionTree& tree, const GroundSet& ground, int node, int from) {
    const int elem = tree.leaf_element[static_cast<std::size_t>(node)];
    if (elem >= 0) return Json{{"leaf", ground.label(elem)}};
    Json children = Json::array();
    for (auto [u, v] : tree.edges) {
        const int other = (u == node) ? v : (v == node ? u : -1);
        if (other >= 0 && other != from)
            children.push_back(render_node(tree, ground, other, node));
    }
    return Json{{"children", std::move(children)}};
}

int parse_node(const Json& node, const GroundSet& ground, DecompositionTree& t,
               std::vector<char>& used) {
    if (!node.is_object()) throw ParseError("decomposition node must be an object");
    if (node.contains("leaf")) {
        const int elem = ground.index_of(node["leaf"].get<std::string>());
        if (used[static_cast<std::size_t>(elem)])
            throw ParseError("decomposition repeats leaf '" + ground.label(elem) + "'");
        used[static_cast<std::size_t>(elem)] = 1;
        const int id = t.node_count++;
        t.leaf_element.push_back(elem);
        return id;
    }
    if (!node.contains("children") || !node["children"].is_array() || node["children"].size() != 2)
        throw ParseError("decomposition internal node needs key 'children' with two entries");
    const int a = parse_node(node["children"][0], ground, t, used);
    const int b = parse_node(node["children"][1], ground, t, used);
    const int id = t.node_count++;
    t.leaf_element.push_back(-1);
    t.edges.emplace_back(id, a);
    t.edges.emplace_back(id, b);
    return id;
}

} // namespace

Json decomposition_to_json(const DecompositionTree& tree, const ConnectivitySystem& system) {
    const WidthReport report = width_of_tree(tree, system);
    Json doc;
    doc["width"] = report.width;
    Json cuts = Json::array();
    for (const auto& rec : report.records)
        cuts.push_back({{"side", system.ground().names_of(rec.side)}, {"width", rec.width}});
    doc["edge_widths"] = std::move(cuts);

    if (tree.node_count == 0) {
        doc["tree"] = nullptr;
    } else if (tree.edges.empty()) {
        doc["tree"] = render_node(tree, system.ground(), 0, -1);
    } else {
        const auto [a, b] = tree.edges[0];
        doc["tree"] = Json{{"children", Json::array({
                               render_node(tree, system.ground(), std::min(a, b), std::max(a, b)),
                               render_node(tree, system.ground(), std::max(a, b), std::min(a, b)),
                           })}};
    }
    return doc;
}

DecompositionTree decomposition_from_json(const Json& doc, const GroundSet& ground) {
    if (!doc.contains("tree")) throw ParseError("missing key 'tree'");
    const Json& root = doc["tree"];
    DecompositionTree t;
    if (root.is_null()) {
        t.validate(ground.size());
        return t;
    }
    std::vector<char> used(static_cast<std::size_t>(std::max(ground.size(), 1)), 0);
    if (root.contains("leaf")) {
        parse_node(root, ground, t, used);
    } else {
        if (!root.contains("children") || root["children"].size() != 2)
            throw ParseError("decomposition root must join two subtrees");
        // The root is a virtual edge midpoint; smooth it into a plain edge.
        const int a = parse_node(root["children"][0], ground, t, used);
        const int b = parse_node(root["children"][1], ground, t, used);
        t.edges.emplace_back(a, b);
    }
    t.validate(ground.size());
    return t;
}

DecompositionCheck check_decomposition(const Json& doc, const ConnectivitySystem& system) {
    DecompositionCheck result;
    auto fail = [&](std::string msg) {
        result.pass = false;
        result.problems.push_back(std::move(msg));
    };

    DecompositionTree tree;
    try {
        tree = decomposition_from_json(doc, system.ground());
    } catch (const Error& e) {
        fail(e.what());
        return result;
    }
    const WidthReport recomputed = width_of_tree(tree, system);

    if (!doc.contains("width") || doc["width"].get<Value>() != recomputed.width)
        fail("stated width does not match the recomputed width " +
             std::to_string(recomputed.width));

    std::multiset<std::pair<Mask, Value>> actual;
    const Mask full = system.full_mask();
    for (const auto& rec : recomputed.records)
        actual.insert({std::min(rec.side, full & ~rec.side), rec.width});

    const Json cuts = doc.value("edge_widths", Json::array());
    if (cuts.size() != recomputed.records.size())
        fail("edge_widths lists " + std::to_string(cuts.size()) + " cuts, tree has " +
             std::to_string(recomputed.records.size()) + " edges");
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        Mask side;
        try {
            side = system.ground().mask_of(cuts[i].at("side").get<std::vector<std::string>>());
        } catch (const std::exception& e) {
            fail("edge_widths index " + std::to_string(i) + ": " + e.what());
            continue;
        }
        const Value claimed = cuts[i].at("width").get<Value>();
        if (system.evaluate(side) != claimed) {
            fail("edge_widths index " + std::to_string(i) + ": stated width " +
                 std::to_string(claimed) + " != f(side) = " +
                 std::to_string(system.evaluate(side)));
            continue;
        }
        const auto key = std::make_pair(std::min(side, full & ~side), claimed);
        auto it = actual.find(key);
        if (it == actual.end())
            fail("edge_widths index " + std::to_string(i) + ": cut is not an edge of the tree");
        else
            actual.erase(it);
    }
    return result;
}

} // namespace csys
