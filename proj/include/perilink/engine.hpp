#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perilink/certificate.hpp"

namespace perilink {

// Called for every edge the search generates, including recipe shortcuts.
// Census runs call it from several threads at once.
using EdgeObserver = std::function<void(const ParityWeight& from, const ParityWeight& to, const Move& first_step)>;

struct SearchOptions {
    Int p = 3;
    EligibilityMode mode = EligibilityMode::nonstrict;
    std::size_t budget = 200'000;  // expanded nodes per reduce call
    Int excursion_cap = -1;
    // Search box before inflation; defaults to the start's own range joined with [-1, 0].
    std::optional<std::pair<Int, Int>> box;
    Int top_margin = -1;     // added above box.second; negative: 2p + n
    Int bottom_margin = -1;  // taken below box.first; negative: p
    bool use_recipes = true;
    IrreducibilityCache* cache = nullptr;
    EdgeObserver on_edge;
};

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(ParityWeight start, std::size_t expanded);
    const ParityWeight& start() const { return start_; }
    std::size_t expanded() const { return expanded_; }

private:
    ParityWeight start_;
    std::size_t expanded_;
};

// Verified chain from pw to canonical_representative_of(pw). Deterministic
// for fixed inputs. BudgetExhausted says nothing about linkage itself.
Certificate reduce(const ParityWeight& pw, const SearchOptions& options);

struct CensusRow {
    ParityWeight key;
    ParityWeight representative;
    Certificate certificate;
};

struct CensusReport {
    Int p = 3;
    std::size_t n = 2;
    Int lo = 0;
    Int hi = 0;
    std::vector<CensusRow> rows;  // weights in lexicographic order, parity 0 before 1
    std::vector<ParityWeight> representatives;  // sorted, distinct

    // Exactly the four canonical representatives, each row matching its key's sector.
    bool four_blocks() const;
};

// Runs reduce on every dominant weight of the box with both parities and
// throws the first BudgetExhausted in row order. Needs lo <= -1 and hi >= 0.
CensusReport block_census_serial(std::size_t n, const SearchOptions& options, Int lo, Int hi);
CensusReport block_census(std::size_t n, const SearchOptions& options, Int lo, Int hi);

struct GraphEdge {
    std::size_t from;
    std::size_t to;
    Move move;
};

// Move graph restricted to the box: nodes in order, edges sorted by (from, to).
struct BoxGraph {
    std::vector<ParityWeight> nodes;
    std::vector<GraphEdge> edges;
};

BoxGraph move_graph_in_box(std::size_t n, Int p, Int lo, Int hi, EligibilityMode mode = EligibilityMode::nonstrict,
                           IrreducibilityCache* cache = nullptr);

// Connected components of the box graph, each sorted, ordered by first node.
// Can be finer than the true blocks since chains may need to leave the box.
std::vector<std::vector<ParityWeight>> components_in_box(std::size_t n, Int p, Int lo, Int hi,
                                                         EligibilityMode mode = EligibilityMode::nonstrict,
                                                         IrreducibilityCache* cache = nullptr);

// Graphviz text: nodes labelled "weight|parity", filled by sector, edges by move kind.
std::string to_dot(const BoxGraph& graph);

}  // namespace perilink
