#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "perilink/engine.hpp"

namespace perilink {

namespace {

std::vector<ParityWeight> box_nodes(std::size_t n, Int lo, Int hi) {
    std::vector<ParityWeight> nodes;
    for (const Weight& w : dominant_weights_in_box(n, lo, hi))
        for (int eps = 0; eps <= 1; ++eps) nodes.emplace_back(w, eps);
    return nodes;
}

void check_census_box(Int lo, Int hi) {
    if (lo > -1 || hi < 0) throw std::invalid_argument("census box must contain -1 and 0");
}

CensusReport assemble(std::size_t n, const SearchOptions& options, Int lo, Int hi, std::vector<std::optional<CensusRow>> slots,
                      const std::vector<std::optional<BudgetExhausted>>& failures) {
    for (const auto& f : failures)
        if (f) throw *f;
    CensusReport report{options.p, n, lo, hi, {}, {}};
    std::set<ParityWeight> reps;
    for (auto& s : slots) {
        reps.insert(s->representative);
        report.rows.push_back(std::move(*s));
    }
    report.representatives.assign(reps.begin(), reps.end());
    return report;
}

SearchOptions row_options(const SearchOptions& options, Int lo, Int hi) {
    SearchOptions o = options;
    o.box = std::pair{lo, hi};
    return o;
}

}  // namespace

bool CensusReport::four_blocks() const {
    std::set<ParityWeight> expected;
    for (int d = 0; d <= 1; ++d)
        for (int s = 0; s <= 1; ++s) expected.insert(canonical_representative(Sector{d, s}, n));
    if (std::set<ParityWeight>(representatives.begin(), representatives.end()) != expected) return false;
    return std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) {
        return sector(r.key) == sector(r.representative) && r.representative == canonical_representative_of(r.key);
    });
}

CensusReport block_census_serial(std::size_t n, const SearchOptions& options, Int lo, Int hi) {
    check_census_box(lo, hi);
    const SearchOptions o = row_options(options, lo, hi);
    const auto nodes = box_nodes(n, lo, hi);
    std::vector<std::optional<CensusRow>> slots(nodes.size());
    std::vector<std::optional<BudgetExhausted>> failures(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        try {
            Certificate c = reduce(nodes[k], o);
            slots[k] = CensusRow{nodes[k], c.end, std::move(c)};
        } catch (const BudgetExhausted& e) {
            failures[k] = e;
        }
    }
    return assemble(n, options, lo, hi, std::move(slots), failures);
}

CensusReport block_census(std::size_t n, const SearchOptions& options, Int lo, Int hi) {
    check_census_box(lo, hi);
    const SearchOptions o = row_options(options, lo, hi);
    const auto nodes = box_nodes(n, lo, hi);
    std::vector<std::optional<CensusRow>> slots(nodes.size());
    std::vector<std::optional<BudgetExhausted>> failures(nodes.size());
    std::vector<std::string> errors(nodes.size());
    const auto count = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const auto u = static_cast<std::size_t>(k);
        try {
            Certificate c = reduce(nodes[u], o);
            slots[u] = CensusRow{nodes[u], c.end, std::move(c)};
        } catch (const BudgetExhausted& e) {
            failures[u] = e;
        } catch (const std::exception& e) {
            errors[u] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw std::runtime_error(e);
    return assemble(n, options, lo, hi, std::move(slots), failures);
}

BoxGraph move_graph_in_box(std::size_t n, Int p, Int lo, Int hi, EligibilityMode mode, IrreducibilityCache* cache) {
    BoxGraph g;
    g.nodes = box_nodes(n, lo, hi);
    std::unordered_map<ParityWeight, std::size_t, ParityWeightHash> index;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) index.emplace(g.nodes[k], k);
    LinkageContext ctx{p, mode, -1, cache};
    std::vector<std::vector<GraphEdge>> local(g.nodes.size());
    const auto count = static_cast<std::ptrdiff_t>(g.nodes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const auto u = static_cast<std::size_t>(k);
        for (const auto& nb : neighbors(g.nodes[u], ctx)) {
            auto it = index.find(nb.target);
            if (it != index.end()) local[u].push_back({u, it->second, nb.move});
        }
    }
    for (auto& l : local) {
        std::sort(l.begin(), l.end(), [](const GraphEdge& x, const GraphEdge& y) { return x.to < y.to; });
        g.edges.insert(g.edges.end(), l.begin(), l.end());
    }
    return g;
}

std::vector<std::vector<ParityWeight>> components_in_box(std::size_t n, Int p, Int lo, Int hi, EligibilityMode mode,
                                                         IrreducibilityCache* cache) {
    const BoxGraph g = move_graph_in_box(n, p, lo, hi, mode, cache);
    std::vector<std::size_t> parent(g.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) {
        const auto a = find(e.from), b = find(e.to);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::vector<ParityWeight>> groups;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) groups[find(k)].push_back(g.nodes[k]);
    std::vector<std::vector<ParityWeight>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return out;
}

}  // namespace perilink
