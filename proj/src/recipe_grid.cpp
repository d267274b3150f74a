#include "perilink/recipes.hpp"

namespace perilink {

namespace {

std::vector<std::pair<RecipeId, RecipeParams>> applicable_cases(const RecipeGrid& grid) {
    std::vector<std::pair<RecipeId, RecipeParams>> cases;
    const auto& ids = grid.recipes.empty() ? all_recipes() : grid.recipes;
    for (RecipeId id : ids)
        for (Int p : grid.primes)
            for (std::size_t n = grid.n_lo; n <= grid.n_hi; ++n)
                for (std::size_t i = 0; i <= n; ++i)
                    for (Int a = grid.a_lo; a <= grid.a_hi; ++a) {
                        RecipeParams q{a, i, n, p};
                        if (!hypothesis_failure(id, q)) cases.emplace_back(id, q);
                    }
    return cases;
}

RecipeReport assemble(std::vector<RecipeRow> rows) {
    RecipeReport report;
    for (const RecipeRow& row : rows) {
        if (report.counts.empty() || report.counts.back().id != row.id) report.counts.push_back({row.id, 0, 0, 0});
        auto& c = report.counts.back();
        ++c.applicable;
        if (row.status == RecipeStatus::succeeded) {
            ++c.succeeded;
        } else {
            ++c.failed;
        }
    }
    report.rows = std::move(rows);
    return report;
}

}  // namespace

RecipeGrid RecipeGrid::standard() { return {-2, 2, 2, 7, {3, 5, 7}, {}}; }

std::string_view status_name(RecipeStatus s) {
    switch (s) {
    case RecipeStatus::succeeded: return "succeeded";
    case RecipeStatus::claim_failed: return "claim_failed";
    case RecipeStatus::verification_failed: return "verification_failed";
    case RecipeStatus::end_check_failed: return "end_check_failed";
    }
    return "unknown";
}

std::size_t RecipeReport::failures() const {
    std::size_t f = 0;
    for (const auto& c : counts) f += c.failed;
    return f;
}

RecipeRow check_recipe(RecipeId id, const RecipeParams& params, EligibilityMode mode, IrreducibilityCache* cache) {
    RecipeRow row{id, params, RecipeStatus::succeeded, {}, 0, std::nullopt};
    std::optional<Certificate> made;
    try {
        made = run_recipe(id, params, mode, cache);
    } catch (const ClaimFailed& e) {
        row.status = RecipeStatus::claim_failed;
        row.detail = e.claim();
        row.failing_step = e.step();
        row.certificate = e.partial();
        return row;
    } catch (const std::exception& e) {
        row.status = RecipeStatus::claim_failed;
        row.detail = e.what();
        return row;
    }
    const Certificate& cert = *made;
    row.certificate = cert;
    const Verification v = verify_certificate(cert);
    if (!v.ok) {
        row.status = RecipeStatus::verification_failed;
        row.detail = v.reason;
        row.failing_step = v.failing_step;
        return row;
    }
    const Weight& start = cert.start.weight;
    const Weight& end = cert.end.weight;
    if (is_descent_recipe(id)) {
        if (m_compare(end, start) != std::strong_ordering::less) {
            row.status = RecipeStatus::end_check_failed;
            row.detail = "end " + end.to_string() + " not below start in m-order";
        }
    } else if (end != *recipe_target(id, params)) {
        row.status = RecipeStatus::end_check_failed;
        row.detail = "end " + end.to_string() + " differs from the stated shift";
    }
    if (row.status != RecipeStatus::succeeded) row.failing_step = cert.steps.size();
    return row;
}

RecipeReport verify_all_recipes_serial(const RecipeGrid& grid, EligibilityMode mode) {
    const auto cases = applicable_cases(grid);
    IrreducibilityCache cache;
    std::vector<RecipeRow> rows;
    rows.reserve(cases.size());
    for (const auto& [id, q] : cases) rows.push_back(check_recipe(id, q, mode, &cache));
    return assemble(std::move(rows));
}

RecipeReport verify_all_recipes(const RecipeGrid& grid, EligibilityMode mode) {
    const auto cases = applicable_cases(grid);
    IrreducibilityCache cache;
    std::vector<std::optional<RecipeRow>> slots(cases.size());
    const auto count = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const auto& [id, q] = cases[static_cast<std::size_t>(k)];
        slots[static_cast<std::size_t>(k)] = check_recipe(id, q, mode, &cache);
    }
    std::vector<RecipeRow> rows;
    rows.reserve(slots.size());
    for (auto& s : slots) rows.push_back(std::move(*s));
    return assemble(std::move(rows));
}

}  // namespace perilink
