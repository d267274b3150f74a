#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "perilink/certificate.hpp"

namespace perilink {

enum class RecipeId {
    prop5_2_even,
    prop5_2_odd,
    lem5_3,
    lem5_4,
    prop6_1_odd,
    prop6_1_even,
    prop6_2_odd,
    prop6_2_even,
    prop6_3_odd,
    prop6_3_even,
    lem7_2_n_even,
    lem7_2_n_odd,
    lem7_2_p_lt_n_odd,
    lem7_2_p_lt_n_even,
    prop3_4_reduction,
    prop3_3_greedy,
};

const std::vector<RecipeId>& all_recipes();
std::string_view recipe_name(RecipeId id);
RecipeId recipe_from_name(std::string_view name);

// Descent recipes must end strictly below their start in m-order; the others
// move between omega shapes and must land on a fixed shifted weight.
bool is_descent_recipe(RecipeId id);

struct RecipeParams {
    Int a = 0;
    std::size_t i = 0;
    std::size_t n = 2;
    Int p = 3;
};

std::string to_string(const RecipeParams& params);

class HypothesisViolated : public std::invalid_argument {
public:
    HypothesisViolated(RecipeId id, std::string clause);
    const std::string& clause() const { return clause_; }

private:
    std::string clause_;
};

class ClaimFailed : public std::runtime_error {
public:
    ClaimFailed(std::size_t step, std::string claim, Certificate partial);
    std::size_t step() const { return step_; }
    const std::string& claim() const { return claim_; }
    const Certificate& partial() const { return partial_; }

private:
    std::size_t step_;
    std::string claim_;
    Certificate partial_;
};

// First violated hypothesis clause, or nullopt when the recipe applies.
std::optional<std::string> hypothesis_failure(RecipeId id, const RecipeParams& params);

Weight recipe_source(RecipeId id, const RecipeParams& params);
// Fixed end weight of the shift recipes; nullopt for descent recipes.
std::optional<Weight> recipe_target(RecipeId id, const RecipeParams& params);

// Builds the chain, re-checking every stated claim as it goes. The start has parity 0.
Certificate run_recipe(RecipeId id, const RecipeParams& params, EligibilityMode mode = EligibilityMode::nonstrict,
                       IrreducibilityCache* cache = nullptr);

struct RecipeGrid {
    Int a_lo = 0;
    Int a_hi = -1;
    std::size_t n_lo = 2;
    std::size_t n_hi = 1;
    std::vector<Int> primes;
    std::vector<RecipeId> recipes;  // empty: every recipe

    static RecipeGrid standard();  // a in [-2,2], n in [2,7], p in {3,5,7}
};

enum class RecipeStatus { succeeded, claim_failed, verification_failed, end_check_failed };

std::string_view status_name(RecipeStatus s);

struct RecipeRow {
    RecipeId id;
    RecipeParams params;
    RecipeStatus status = RecipeStatus::succeeded;
    std::string detail;
    std::size_t failing_step = 0;
    std::optional<Certificate> certificate;  // partial for failed rows
};

struct RecipeCounts {
    RecipeId id;
    std::size_t applicable = 0;
    std::size_t succeeded = 0;
    std::size_t failed = 0;
};

struct RecipeReport {
    std::vector<RecipeRow> rows;
    std::vector<RecipeCounts> counts;  // recipes with at least one applicable row

    std::size_t failures() const;
};

// Runs and verifies every applicable (recipe, a, i, n, p); rows follow the
// grid order. The parallel version returns the same report.
RecipeReport verify_all_recipes_serial(const RecipeGrid& grid, EligibilityMode mode = EligibilityMode::nonstrict);
RecipeReport verify_all_recipes(const RecipeGrid& grid, EligibilityMode mode = EligibilityMode::nonstrict);

// Single row of the report, with all checks applied.
RecipeRow check_recipe(RecipeId id, const RecipeParams& params, EligibilityMode mode, IrreducibilityCache* cache);

}  // namespace perilink
