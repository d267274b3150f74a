#include <map>
#include <queue>
#include <unordered_map>

#include "perilink/engine.hpp"
#include "perilink/recipes.hpp"

namespace perilink {

namespace {

bool is_shift_recipe(RecipeId id) {
    return id == RecipeId::lem7_2_n_even || id == RecipeId::lem7_2_n_odd || id == RecipeId::lem7_2_p_lt_n_odd ||
           id == RecipeId::lem7_2_p_lt_n_even;
}

struct Candidate {
    RecipeId id;
    RecipeParams params;
    bool reversed;
};

// Recipes whose source (or, reversed, whose shifted target) is w.
std::vector<Candidate> recipe_candidates(const Weight& w, Int p) {
    std::vector<Candidate> out;
    const std::size_t n = w.rank();
    if (auto shape = match_omega(w)) {
        std::vector<RecipeParams> forms{{shape->a, shape->i, n, p}};
        if (shape->i == n - 1) forms.push_back({shape->a + 1, n, n, p});
        for (RecipeId id : all_recipes()) {
            if (id == RecipeId::prop3_3_greedy) continue;
            for (const auto& q : forms)
                if (!hypothesis_failure(id, q)) out.push_back({id, q, false});
        }
        for (RecipeId id : all_recipes()) {
            if (!is_shift_recipe(id)) continue;
            for (std::size_t i = 0; i <= 1; ++i)
                for (Int a = shape->a - 2; a <= shape->a + 2; ++a) {
                    RecipeParams q{a, i, n, p};
                    if (hypothesis_failure(id, q)) continue;
                    if (recipe_target(id, q) == w) out.push_back({id, q, true});
                }
        }
    }
    bool flat_tail = w.entry(1) > w.entry(2);
    for (std::size_t k = 3; k <= n && flat_tail; ++k) flat_tail = w.entry(k) == w.entry(2);
    if (flat_tail) {
        RecipeParams q{w.entry(2), static_cast<std::size_t>(w.entry(1) - w.entry(2)), n, p};
        if (!hypothesis_failure(RecipeId::prop3_3_greedy, q)) out.push_back({RecipeId::prop3_3_greedy, q, false});
    }
    return out;
}

// Same moves, replayed from the other parity.
Certificate with_start_parity(Certificate c, int parity) {
    if (c.start.parity != parity) {
        c.start.parity = 1 - c.start.parity;
        c.end.parity = 1 - c.end.parity;
    }
    return c;
}

struct Key {
    std::vector<Int> m;
    Int top;
    Int deg;
    ParityWeight node;

    friend bool operator>(const Key& x, const Key& y) {
        return std::tie(x.m, x.top, x.deg, x.node) > std::tie(y.m, y.top, y.deg, y.node);
    }
};

Key key_of(const ParityWeight& pw) {
    const Weight& w = pw.weight;
    return {m_vector(w), std::abs(w.entry(1)), std::abs(degree(w)), pw};
}

struct Link {
    ParityWeight parent;
    std::vector<Move> steps;
};

class Search {
public:
    Search(const ParityWeight& start, const SearchOptions& opt) : start_(start), opt_(opt) {
        const Weight& w = start.weight;
        const std::size_t n = w.rank();
        auto [lo, hi] = opt.box.value_or(std::pair<Int, Int>{std::min<Int>(w.entry(n), -1), std::max<Int>(w.entry(1), 0)});
        const Int top_margin = opt.top_margin < 0 ? 2 * opt.p + static_cast<Int>(n) : opt.top_margin;
        const Int bottom_margin = opt.bottom_margin < 0 ? opt.p : opt.bottom_margin;
        top_ = checked_add(std::max(hi, w.entry(1)), top_margin);
        bottom_ = checked_sub(std::min(lo, w.entry(n)), bottom_margin);
    }

    Certificate run() {
        if (!is_dominant(start_.weight)) throw std::invalid_argument("reduce needs a dominant weight");
        const ParityWeight goal = canonical_representative_of(start_);
        LinkageContext ctx{opt_.p, opt_.mode, opt_.excursion_cap, opt_.cache};
        std::priority_queue<Key, std::vector<Key>, std::greater<>> frontier;
        frontier.push(key_of(start_));
        parents_.emplace(start_, std::nullopt);
        std::size_t expanded = 0;
        while (!frontier.empty()) {
            const ParityWeight node = frontier.top().node;
            frontier.pop();
            if (node == goal) return finish(goal);
            if (expanded++ >= opt_.budget) break;
            for (const auto& nb : neighbors(node, ctx)) visit(node, nb.target, {nb.move}, frontier);
            if (opt_.use_recipes) {
                for (const auto& c : recipe_candidates(node.weight, opt_.p)) {
                    const Certificate* cert = macro(c);
                    if (!cert || cert->steps.empty()) continue;
                    const Certificate edge = with_start_parity(*cert, node.parity);
                    visit(node, edge.end, edge.steps, frontier);
                }
            }
        }
        throw BudgetExhausted(start_, expanded);
    }

private:
    bool in_box(const Weight& w) const { return w.entry(1) <= top_ && w.entry(w.rank()) >= bottom_; }

    void visit(const ParityWeight& from, const ParityWeight& to, std::vector<Move> steps,
               std::priority_queue<Key, std::vector<Key>, std::greater<>>& frontier) {
        if (opt_.on_edge) opt_.on_edge(from, to, steps.front());
        if (!in_box(to.weight) || parents_.contains(to)) return;
        parents_.emplace(to, Link{from, std::move(steps)});
        frontier.push(key_of(to));
    }

    const Certificate* macro(const Candidate& c) {
        const auto key = std::make_tuple(static_cast<int>(c.id), c.params.a, c.params.i, c.reversed);
        auto it = macros_.find(key);
        if (it == macros_.end()) {
            std::optional<Certificate> cert;
            try {
                cert = run_recipe(c.id, c.params, opt_.mode, opt_.cache);
                if (c.reversed) cert = reverse_certificate(*cert);
            } catch (const ClaimFailed&) {
                cert.reset();
            }
            it = macros_.emplace(key, std::move(cert)).first;
        }
        return it->second ? &*it->second : nullptr;
    }

    Certificate finish(const ParityWeight& goal) {
        std::vector<std::vector<Move>> segments;
        ParityWeight at = goal;
        while (const auto& link = parents_.at(at)) {
            segments.push_back(link->steps);
            at = link->parent;
        }
        Certificate c{opt_.p, start_, {}, goal, opt_.mode};
        for (auto s = segments.rbegin(); s != segments.rend(); ++s) c.steps.insert(c.steps.end(), s->begin(), s->end());
        const Verification v = verify_certificate(c);
        if (!v.ok) throw std::logic_error("reduce built a chain that does not verify: " + v.reason);
        return c;
    }

    ParityWeight start_;
    const SearchOptions& opt_;
    Int top_ = 0;
    Int bottom_ = 0;
    std::unordered_map<ParityWeight, std::optional<Link>, ParityWeightHash> parents_;
    std::map<std::tuple<int, Int, std::size_t, bool>, std::optional<Certificate>> macros_;
};

}  // namespace

BudgetExhausted::BudgetExhausted(ParityWeight start, std::size_t expanded)
    : std::runtime_error("search budget exhausted after " + std::to_string(expanded) + " nodes from " +
                         start.to_string()),
      start_(std::move(start)),
      expanded_(expanded) {}

Certificate reduce(const ParityWeight& pw, const SearchOptions& options) {
    require_odd_prime(options.p);
    if (options.budget < 1) throw std::invalid_argument("budget must be at least 1");
    return Search(pw, options).run();
}

}  // namespace perilink
