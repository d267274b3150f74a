#include "perilink/moves.hpp"

#include <algorithm>
#include <set>

namespace perilink {

namespace {

constexpr std::string_view kKindNames[] = {"even_reflection", "donkin_jump", "odd_up_2e",
                                           "odd_up_pair",     "odd_down_2e", "odd_down_pair"};

constexpr std::string_view kFailureNames[] = {"IndexOutOfRange",   "RankMismatch",   "SourceNotDominant",
                                              "ResultNotDominant", "NotEligible",    "NotEvenLinked",
                                              "PairNotEqual",      "MissingTarget"};

void require_index(std::size_t i, std::size_t lo, std::size_t hi, const char* what) {
    if (i < lo || i > hi)
        throw PreconditionViolated(MoveFailure::index_out_of_range,
                                   std::string(what) + " index " + std::to_string(i) + " outside " +
                                       std::to_string(lo) + ".." + std::to_string(hi));
}

Weight require_dominant_result(Weight w, const Move& m) {
    if (!is_dominant(w))
        throw PreconditionViolated(MoveFailure::result_not_dominant, m.to_string() + " gives " + w.to_string());
    return w;
}

void require_eligible(const Weight& lower, const Move& m, const LinkageContext& ctx) {
    if (!ctx.eligible(lower))
        throw PreconditionViolated(MoveFailure::not_eligible,
                                   m.to_string() + ": lower weight " + lower.to_string() + " not eligible");
}

void require_equal_pair(const Weight& w, std::size_t i, const Move& m) {
    if (w.entry(i) != w.entry(i + 1))
        throw PreconditionViolated(MoveFailure::pair_not_equal, m.to_string() + " on " + w.to_string());
}

// Target weight of m from w, with every precondition checked.
Weight move_target(const Weight& w, const Move& m, const LinkageContext& ctx) {
    const std::size_t n = w.rank();
    if (!is_dominant(w)) throw PreconditionViolated(MoveFailure::source_not_dominant, w.to_string());
    switch (m.kind) {
    case MoveKind::even_reflection:
        require_index(m.reflection.i, 1, n, "reflection i");
        require_index(m.reflection.j, m.reflection.i + 1, n, "reflection j");
        {
            Weight target = require_dominant_result(dot_reflect(w, m.reflection, ctx.p), m);
            // A reflection image can change the defect; such a step is not a linkage.
            if (!even_linked(w, target, ctx.p))
                throw PreconditionViolated(MoveFailure::not_even_linked, m.to_string() + " from " + w.to_string());
            return target;
        }
    case MoveKind::donkin_jump: {
        if (!m.target) throw PreconditionViolated(MoveFailure::missing_target, "donkin_jump without target");
        if (m.target->rank() != n) throw PreconditionViolated(MoveFailure::rank_mismatch, m.to_string());
        Weight target = require_dominant_result(*m.target, m);
        if (!even_linked(w, target, ctx.p))
            throw PreconditionViolated(MoveFailure::not_even_linked, w.to_string() + " vs " + target.to_string());
        return target;
    }
    case MoveKind::odd_up_2e: {
        require_index(m.index, 1, n, "odd_up_2e j");
        Weight target = require_dominant_result(w.shifted(m.index, 2), m);
        require_eligible(w, m, ctx);
        return target;
    }
    case MoveKind::odd_up_pair: {
        require_index(m.index, 1, n - 1, "odd_up_pair i");
        require_equal_pair(w, m.index, m);
        Weight target = require_dominant_result(w.shifted(m.index, 1).shifted(m.index + 1, 1), m);
        require_eligible(w, m, ctx);
        return target;
    }
    case MoveKind::odd_down_2e: {
        require_index(m.index, 1, n, "odd_down_2e j");
        Weight target = require_dominant_result(w.shifted(m.index, -2), m);
        require_eligible(target, m, ctx);
        return target;
    }
    case MoveKind::odd_down_pair: {
        require_index(m.index, 1, n - 1, "odd_down_pair i");
        require_equal_pair(w, m.index, m);
        Weight target = require_dominant_result(w.shifted(m.index, -1).shifted(m.index + 1, -1), m);
        require_eligible(target, m, ctx);
        return target;
    }
    }
    throw std::logic_error("unknown move kind");
}

void sort_steps(std::vector<WeightStep>& steps) {
    std::sort(steps.begin(), steps.end(), [](const WeightStep& x, const WeightStep& y) {
        if (x.weight != y.weight) return x.weight < y.weight;
        return x.move < y.move;
    });
}

}  // namespace

std::string_view kind_name(MoveKind kind) { return kKindNames[static_cast<int>(kind)]; }

MoveKind kind_from_name(std::string_view name) {
    for (int k = 0; k < 6; ++k)
        if (kKindNames[k] == name) return static_cast<MoveKind>(k);
    throw std::invalid_argument("unknown move kind " + std::string(name));
}

std::string_view failure_name(MoveFailure f) { return kFailureNames[static_cast<int>(f)]; }

PreconditionViolated::PreconditionViolated(MoveFailure reason, const std::string& detail)
    : std::runtime_error(std::string(failure_name(reason)) + ": " + detail), reason_(reason) {}

NotEligible::NotEligible(const Weight& w)
    : std::runtime_error("weight " + w.to_string() + " is not eligible for odd moves"), weight_(w) {}

Move Move::even(Reflection r) {
    Move m;
    m.kind = MoveKind::even_reflection;
    m.reflection = r;
    return m;
}

Move Move::jump(Weight target) {
    Move m;
    m.kind = MoveKind::donkin_jump;
    m.target = std::move(target);
    return m;
}

Move Move::up_2e(std::size_t j) {
    Move m;
    m.kind = MoveKind::odd_up_2e;
    m.index = j;
    return m;
}

Move Move::up_pair(std::size_t i) {
    Move m;
    m.kind = MoveKind::odd_up_pair;
    m.index = i;
    return m;
}

Move Move::down_2e(std::size_t j) {
    Move m;
    m.kind = MoveKind::odd_down_2e;
    m.index = j;
    return m;
}

Move Move::down_pair(std::size_t i) {
    Move m;
    m.kind = MoveKind::odd_down_pair;
    m.index = i;
    return m;
}

bool Move::is_odd() const { return kind != MoveKind::even_reflection && kind != MoveKind::donkin_jump; }

std::string Move::to_string() const {
    std::string s(kind_name(kind));
    switch (kind) {
    case MoveKind::even_reflection:
        return s + "(" + std::to_string(reflection.i) + "," + std::to_string(reflection.j) + ",k=" +
               std::to_string(reflection.k) + ")";
    case MoveKind::donkin_jump:
        return s + "(" + (target ? target->to_string() : std::string("?")) + ")";
    default:
        return s + "(" + std::to_string(index) + ")";
    }
}

std::vector<WeightStep> odd_up_moves(const Weight& w, const LinkageContext& ctx) {
    if (!is_dominant(w)) throw std::invalid_argument("odd_up_moves needs a dominant weight, got " + w.to_string());
    if (!ctx.eligible(w)) throw NotEligible(w);
    std::vector<WeightStep> out;
    const std::size_t n = w.rank();
    for (std::size_t j = 1; j <= n; ++j) {
        Weight t = w.shifted(j, 2);
        if (is_dominant(t)) out.push_back({std::move(t), Move::up_2e(j)});
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (w.entry(i) != w.entry(i + 1)) continue;
        Weight t = w.shifted(i, 1).shifted(i + 1, 1);
        if (is_dominant(t)) out.push_back({std::move(t), Move::up_pair(i)});
    }
    sort_steps(out);
    return out;
}

std::vector<WeightStep> odd_down_moves(const Weight& w, const LinkageContext& ctx) {
    if (!is_dominant(w)) throw std::invalid_argument("odd_down_moves needs a dominant weight, got " + w.to_string());
    std::vector<WeightStep> out;
    const std::size_t n = w.rank();
    for (std::size_t j = 1; j <= n; ++j) {
        Weight t = w.shifted(j, -2);
        if (is_dominant(t) && ctx.eligible(t)) out.push_back({std::move(t), Move::down_2e(j)});
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (w.entry(i) != w.entry(i + 1)) continue;
        Weight t = w.shifted(i, -1).shifted(i + 1, -1);
        if (is_dominant(t) && ctx.eligible(t)) out.push_back({std::move(t), Move::down_pair(i)});
    }
    sort_steps(out);
    return out;
}

std::vector<Neighbor> neighbors(const ParityWeight& pw, const LinkageContext& ctx) {
    const Weight& w = pw.weight;
    std::vector<Neighbor> out;
    std::set<Weight> seen;
    for (auto& e : even_neighbors(w, ctx.p, ctx.excursion_cap)) {
        if (seen.insert(e.weight).second) out.push_back({ParityWeight(e.weight, pw.parity), Move::even(e.reflection)});
    }
    std::vector<WeightStep> odd;
    if (ctx.eligible(w)) odd = odd_up_moves(w, ctx);
    for (auto& s : odd_down_moves(w, ctx)) odd.push_back(std::move(s));
    sort_steps(odd);
    for (auto& s : odd) {
        if (seen.insert(s.weight).second) out.push_back({ParityWeight(s.weight, 1 - pw.parity), s.move});
    }
    return out;
}

ParityWeight apply_move(const ParityWeight& pw, const Move& m, const LinkageContext& ctx) {
    Weight target = move_target(pw.weight, m, ctx);
    return ParityWeight(std::move(target), m.is_odd() ? 1 - pw.parity : pw.parity);
}

Move inverse_move(const Move& m, const Weight& source) {
    switch (m.kind) {
    case MoveKind::even_reflection: return m;
    case MoveKind::donkin_jump: return Move::jump(source);
    case MoveKind::odd_up_2e: return Move::down_2e(m.index);
    case MoveKind::odd_up_pair: return Move::down_pair(m.index);
    case MoveKind::odd_down_2e: return Move::up_2e(m.index);
    case MoveKind::odd_down_pair: return Move::up_pair(m.index);
    }
    throw std::logic_error("unknown move kind");
}

}  // namespace perilink
