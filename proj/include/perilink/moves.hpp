#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "perilink/affine.hpp"
#include "perilink/jantzen.hpp"
#include "perilink/weight.hpp"

namespace perilink {

// Parameters shared by move generation and application.
struct LinkageContext {
    Int p = 3;
    EligibilityMode mode = EligibilityMode::nonstrict;
    Int excursion_cap = -1;  // negative: default_excursion_cap of each source
    IrreducibilityCache* cache = nullptr;

    // Odd moves need the lower weight of the pair to pass this check.
    bool eligible(const Weight& w) const { return f0_member(w, p, mode, cache); }
};

enum class MoveKind { even_reflection, donkin_jump, odd_up_2e, odd_up_pair, odd_down_2e, odd_down_pair };

std::string_view kind_name(MoveKind kind);
MoveKind kind_from_name(std::string_view name);

struct Move {
    MoveKind kind = MoveKind::even_reflection;
    Reflection reflection;         // even_reflection only
    std::size_t index = 0;         // j of the 2e kinds, i of the pair kinds
    std::optional<Weight> target;  // donkin_jump only

    static Move even(Reflection r);
    static Move jump(Weight target);
    static Move up_2e(std::size_t j);
    static Move up_pair(std::size_t i);
    static Move down_2e(std::size_t j);
    static Move down_pair(std::size_t i);

    bool is_odd() const;
    std::string to_string() const;

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

enum class MoveFailure {
    index_out_of_range,
    rank_mismatch,
    source_not_dominant,
    result_not_dominant,
    not_eligible,
    not_even_linked,
    pair_not_equal,
    missing_target,
};

std::string_view failure_name(MoveFailure f);

class PreconditionViolated : public std::runtime_error {
public:
    PreconditionViolated(MoveFailure reason, const std::string& detail);
    MoveFailure reason() const { return reason_; }

private:
    MoveFailure reason_;
};

class NotEligible : public std::runtime_error {
public:
    explicit NotEligible(const Weight& w);
    const Weight& weight() const { return weight_; }

private:
    Weight weight_;
};

struct WeightStep {
    Weight weight;
    Move move;
};

struct Neighbor {
    ParityWeight target;
    Move move;
};

// Raising odd moves; throws NotEligible when w itself is not eligible.
std::vector<WeightStep> odd_up_moves(const Weight& w, const LinkageContext& ctx);
// Lowering odd moves; candidates whose lower weight is not eligible are dropped.
std::vector<WeightStep> odd_down_moves(const Weight& w, const LinkageContext& ctx);

// Even moves first, then odd; each group sorted by target. Duplicate targets
// keep their first move.
std::vector<Neighbor> neighbors(const ParityWeight& pw, const LinkageContext& ctx);

// Throws PreconditionViolated naming the failed check.
ParityWeight apply_move(const ParityWeight& pw, const Move& m, const LinkageContext& ctx);

// Move undoing m when applied to the weight m produced from `source`.
Move inverse_move(const Move& m, const Weight& source);

}  // namespace perilink
