#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "perilink/jantzen.hpp"

using namespace perilink;

TEST_CASE("cpb decomposition") {
    CHECK(decompose_cpb(4, 3) == CpbDecomposition{1, 0, 1});
    CHECK(decompose_cpb(3, 3) == CpbDecomposition{1, 1, 0});
    CHECK(decompose_cpb(2, 3) == CpbDecomposition{2, 0, 0});
    for (Int p : {3, 5, 7})
        for (Int d = 1; d < 500; ++d) {
            const auto x = decompose_cpb(d, p);
            CHECK(x.c > 0);
            CHECK(x.c < p);
            CHECK(x.c * checked_pow(p, x.s) + x.b * checked_pow(p, x.s + 1) == d);
        }
}

TEST_CASE("chain condition examples") {
    CHECK_FALSE(star_condition(Weight{3, 0}, 3, 1, 2));
    CHECK(star_condition(Weight{2, 0, 0}, 3, 1, 3));
    // b = 0 holds trivially.
    CHECK(star_condition(Weight{1, 0}, 3, 1, 2));
    CHECK(star_condition(Weight{5, 0}, 7, 1, 2));
}

TEST_CASE("irreducibility verdicts") {
    const auto v = even_irreducible(Weight{3, 0}, 3);
    CHECK_FALSE(v.irreducible);
    CHECK(v.failing_pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}});
    CHECK(even_irreducible(Weight{2, 0, 0}, 3).irreducible);
    CHECK_THROWS_AS(even_irreducible(Weight{0, 1}, 3), std::invalid_argument);
}

TEST_CASE("chain condition agrees with the subset oracle") {
    for (Int p : {3, 5}) {
        for (std::size_t n = 2; n <= 6; ++n) {
            const Int span = n <= 4 ? 3 * p : 2 * p;
            for (const auto& w : dominant_weights_in_box(n, 0, span)) {
                if (w.entry(n) != 0) continue;
                const auto v = even_irreducible(w, p);
                for (std::size_t u = 1; u <= n; ++u)
                    for (std::size_t t = u + 1; t <= n; ++t)
                        REQUIRE(star_condition(w, p, u, t) == oracle::star_condition(w, p, u, t));
                REQUIRE(v.irreducible == oracle::irreducible(w, p));
            }
        }
    }
}

TEST_CASE("small spread gives irreducible") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        const Int p = oracle::random_prime(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
        const Weight w = oracle::random_dominant(rng, n, -p, p);
        if (d_interval(w, 1, n) <= p) CHECK(even_irreducible(w, p).irreducible);
    }
}

TEST_CASE("F0 membership") {
    for (EligibilityMode m : {EligibilityMode::strict, EligibilityMode::nonstrict}) {
        CHECK(f0_member(Weight{0, 0, -1, -2}, 5, m));
        CHECK_FALSE(f0_member(Weight{3, 0}, 3, m));
    }
    CHECK_FALSE(f0_member(Weight{2, 0}, 3, EligibilityMode::strict));
    CHECK(f0_member(Weight{2, 0}, 3, EligibilityMode::nonstrict));
    CHECK_THROWS_AS(f0_member(Weight{0, 1}, 3), std::invalid_argument);
}

TEST_CASE("fast screen examples") {
    CHECK(fast_f0_screen(Weight{1, 0, 0}, 5) == std::optional<bool>(true));
    for (Int a = -2; a <= 2; ++a)
        for (std::size_t n = 2; n <= 6; ++n)
            for (std::size_t t = 1; t < n; ++t) {
                std::vector<Int> e(n, a);
                for (std::size_t k = 0; k < t; ++k) e[k] = a + 1;
                CHECK(fast_f0_screen(Weight(e), 7) == std::optional<bool>(true));
            }
    const auto box = dominant_weights_in_box(4, 0, 12);
    CHECK(std::any_of(box.begin(), box.end(), [](const Weight& w) { return !fast_f0_screen(w, 3); }));
}

TEST_CASE("fast screen never contradicts the exhaustive check") {
    std::size_t verdicts = 0;
    for (Int p : {3, 5, 7})
        for (std::size_t n = 2; n <= 5; ++n)
            for (const auto& w : dominant_weights_in_box(n, -2, 2 * p)) {
                const auto fast = fast_f0_screen(w, p);
                if (!fast) continue;
                ++verdicts;
                REQUIRE(*fast == oracle::irreducible(w, p));
            }
    CHECK(verdicts > 0);
}

TEST_CASE("good filtration factors") {
    CHECK(good_filtration_factors(Weight{0, 0}) == std::vector<Weight>{Weight{1, 1}});
    CHECK(good_filtration_factors(Weight{1, 0, 0}) == std::vector<Weight>{Weight{1, 1, 1}, Weight{2, 1, 0}});
    CHECK(good_filtration_factors(Weight{1, 0}) == std::vector<Weight>{Weight{2, 1}});
}

TEST_CASE("irreducibility cache") {
    IrreducibilityCache cache;
    CHECK_FALSE(cache.lookup(3, Weight{3, 0}));
    CHECK_FALSE(cache.irreducible(3, Weight{3, 0}));
    CHECK(cache.lookup(3, Weight{3, 0}) == std::optional<bool>(false));
    CHECK_FALSE(cache.lookup(5, Weight{3, 0}));

    // Concurrent fills agree with direct evaluation.
    const auto ws = dominant_weights_in_box(4, -2, 3);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&] {
            for (const auto& w : ws) cache.irreducible(5, w);
        });
    for (auto& th : pool) th.join();
    for (const auto& w : ws) CHECK(cache.lookup(5, w) == std::optional<bool>(even_irreducible(w, 5).irreducible));

    const auto path = std::filesystem::temp_directory_path() / "perilink_cache_test.jsonl";
    std::filesystem::remove(path);
    CHECK(IrreducibilityCache{}.load(path) == 0);
    cache.save(path);
    IrreducibilityCache loaded;
    CHECK(loaded.load(path) == cache.size());
    CHECK(loaded.lookup(3, Weight{3, 0}) == std::optional<bool>(false));
    std::filesystem::remove(path);
}
