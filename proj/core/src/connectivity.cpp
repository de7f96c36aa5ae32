#include "csys/connectivity.hpp"

#include <algorithm>

namespace csys {

namespace {

int gf2_rank(std::vector<Mask> rows) {
    int rank = 0;
    for (int bit = 0; bit < kMaxGroundSize; ++bit) {
        const Mask pivot_bit = Mask{1} << bit;
        auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                                  [&](Mask r) { return r & pivot_bit; });
        if (pivot == rows.end()) continue;
        std::swap(*pivot, rows[static_cast<std::size_t>(rank)]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) != rank && (rows[i] & pivot_bit))
                rows[i] ^= rows[static_cast<std::size_t>(rank)];
        }
        ++rank;
        if (rank == static_cast<int>(rows.size())) break;
    }
    return rank;
}

void record(CheckReport& report, Violation v) {
    report.pass = false;
    ++report.violation_count;
    if (report.violations.size() < 64) report.violations.push_back(std::move(v));
}

} // namespace

ConnectivitySystem::ConnectivitySystem(GroundSet ground, FunctionSpec spec, std::string name)
    : ground_(std::move(ground)), spec_(std::move(spec)), name_(std::move(name)) {
    cache_.assign(std::size_t{1} << ground_.size(), kUnset);
    if (const auto* gc = std::get_if<GraphCutSpec>(&spec_)) {
        if (static_cast<int>(gc->edges.size()) != ground_.size())
            throw InputError("graph-cut edge count does not match ground set size");
        incidence_.assign(gc->vertices.size(), 0);
        for (std::size_t e = 0; e < gc->edges.size(); ++e) {
            auto [u, v] = gc->edges[e];
            if (u < 0 || v < 0 || u >= static_cast<int>(gc->vertices.size()) ||
                v >= static_cast<int>(gc->vertices.size()))
                throw InputError("graph-cut edge endpoint out of range");
            incidence_[static_cast<std::size_t>(u)] |= Mask{1} << e;
            incidence_[static_cast<std::size_t>(v)] |= Mask{1} << e;
        }
    } else if (const auto* wc = std::get_if<WeightedGraphCutSpec>(&spec_)) {
        if (wc->weights.size() != wc->edges.size())
            throw InputError("weighted-graph-cut weight count does not match edge count");
        for (std::size_t e = 0; e < wc->edges.size(); ++e) {
            auto [u, v] = wc->edges[e];
            if (u < 0 || v < 0 || u >= ground_.size() || v >= ground_.size())
                throw InputError("weighted-graph-cut edge endpoint out of range");
            if (wc->weights[e] < 0) throw InputError("negative edge weight");
        }
    } else if (const auto* cr = std::get_if<CutRankSpec>(&spec_)) {
        if (static_cast<int>(cr->rows.size()) != ground_.size())
            throw InputError("cut-rank matrix size does not match ground set size");
        for (int i = 0; i < ground_.size(); ++i) {
            if (cr->rows[static_cast<std::size_t>(i)] & (Mask{1} << i))
                throw InputError("cut-rank adjacency has a nonzero diagonal entry");
            for (int j = 0; j < ground_.size(); ++j) {
                const bool ij = cr->rows[static_cast<std::size_t>(i)] >> j & 1u;
                const bool ji = cr->rows[static_cast<std::size_t>(j)] >> i & 1u;
                if (ij != ji) throw InputError("cut-rank adjacency is not symmetric");
            }
        }
    } else if (const auto* tb = std::get_if<TableSpec>(&spec_)) {
        if (tb->values.size() != cache_.size())
            throw InputError("table must define a value for all 2^n subsets");
        for (Value v : tb->values)
            if (v < 0) throw InputError("table values must be natural numbers");
    }
}

Value ConnectivitySystem::compute(Mask subset) const {
    const Mask comp = ground_.complement(subset);
    if (const auto* gc = std::get_if<GraphCutSpec>(&spec_)) {
        Value boundary = 0;
        for (Mask inc : incidence_)
            if ((inc & subset) && (inc & comp)) ++boundary;
        return boundary;
    }
    if (const auto* wc = std::get_if<WeightedGraphCutSpec>(&spec_)) {
        Value total = 0;
        for (std::size_t e = 0; e < wc->edges.size(); ++e) {
            auto [u, v] = wc->edges[e];
            const bool cu = subset >> u & 1u;
            const bool cv = subset >> v & 1u;
            if (cu != cv) total += wc->weights[e];
        }
        return total;
    }
    if (const auto* cr = std::get_if<CutRankSpec>(&spec_)) {
        std::vector<Mask> rows;
        for (int i = 0; i < ground_.size(); ++i)
            if (subset & (Mask{1} << i)) rows.push_back(cr->rows[static_cast<std::size_t>(i)] & comp);
        return gf2_rank(std::move(rows));
    }
    return std::get<TableSpec>(spec_).values[subset];
}

Value ConnectivitySystem::evaluate(Mask subset) const {
    if (subset & ~full_mask()) throw InputError("subset contains members outside the ground set");
    Value& slot = cache_[subset];
    if (slot == kUnset) slot = compute(subset);
    return slot;
}

std::vector<Mask> ConnectivitySystem::enumerate_k_efficient(Value k) const {
    std::vector<Mask> out;
    for (Mask m = 0; m <= full_mask(); ++m) {
        if (evaluate(m) <= k) out.push_back(m);
        if (full_mask() == 0) break;
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Value ConnectivitySystem::max_value() const {
    Value best = 0;
    for (Mask m = 0; m <= full_mask(); ++m) {
        best = std::max(best, evaluate(m));
        if (full_mask() == 0) break;
    }
    return best;
}

CheckReport ConnectivitySystem::verify_symmetry() const {
    if (size() > kMaxGroundSize)
        throw CapacityError("symmetry check requires n <= " + std::to_string(kMaxGroundSize));
    CheckReport report{.check = "symmetry"};
    for (Mask a = 0; a <= full_mask(); ++a) {
        const Value fa = evaluate(a), fc = evaluate(ground_.complement(a));
        if (fa != fc)
            record(report, {{a, ground_.complement(a)}, {fa, fc}, "f(A) != f(X\\A)"});
        if (full_mask() == 0) break;
    }
    return report;
}

CheckReport ConnectivitySystem::verify_submodularity() const {
    if (size() > kMaxPairwiseSize)
        throw CapacityError("submodularity check requires n <= " + std::to_string(kMaxPairwiseSize));
    CheckReport report{.check = "submodularity"};
    for (Mask a = 0; a <= full_mask(); ++a) {
        for (Mask b = 0; b <= full_mask(); ++b) {
            const Value fa = evaluate(a), fb = evaluate(b);
            const Value fi = evaluate(a & b), fu = evaluate(a | b);
            if (fa + fb < fi + fu)
                record(report, {{a, b}, {fa, fb, fi, fu}, "f(A)+f(B) < f(A&B)+f(A|B)"});
            if (full_mask() == 0) break;
        }
        if (full_mask() == 0) break;
    }
    return report;
}

CheckReport ConnectivitySystem::verify_lemma2() const {
    if (size() > kMaxPairwiseSize)
        throw CapacityError("lemma-2 check requires n <= " + std::to_string(kMaxPairwiseSize));
    CheckReport report{.check = "lemma2"};
    const Value fe = evaluate(0), fx = evaluate(full_mask());
    if (fe != fx) record(report, {{0, full_mask()}, {fe, fx}, "f(empty) != f(X)"});
    for (Mask a = 0; a <= full_mask(); ++a) {
        const Value fa = evaluate(a);
        if (fa < fe) record(report, {{a}, {fa, fe}, "f(A) < f(empty)"});
        if (full_mask() == 0) break;
    }
    for (Mask a = 0; a <= full_mask(); ++a) {
        for (Mask b = 0; b <= full_mask(); ++b) {
            const Value fa = evaluate(a), fb = evaluate(b);
            const Value fd1 = evaluate(a & ~b), fd2 = evaluate(b & ~a);
            if (fa + fb < fd1 + fd2)
                record(report, {{a, b}, {fa, fb, fd1, fd2}, "f(A)+f(B) < f(A\\B)+f(B\\A)"});
            if (full_mask() == 0) break;
        }
        if (full_mask() == 0) break;
    }
    return report;
}

} // namespace csys
