#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "perilink/affine.hpp"

using namespace perilink;

TEST_CASE("defect") {
    CHECK(defect(Weight{2, 0}, 3) == 1);
    CHECK(defect(Weight{0, 0}, 3) == 0);
    for (Int p : {3, 5, 7}) CHECK(defect(Weight{p - 1, p - 1, 0}, p) == 0);
    CHECK(defect(Weight{8, 0}, 3) == 2);
    CHECK(defect(Weight{4, 2, 0}, 3) == 1);
    CHECK_THROWS_AS(defect(Weight{0, 1}, 3), std::domain_error);
}

TEST_CASE("defect agrees with the scanning oracle") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 5000; ++t) {
        const Int p = oracle::random_prime(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
        const Weight w = oracle::random_dominant(rng, n, -30, 30);
        CHECK(defect(w, p) == oracle::defect(w, p));
    }
}

TEST_CASE("dot reflection examples") {
    CHECK(dot_reflect(Weight{2, 0, 0, -1}, Reflection{1, 4, 1}, 5) == Weight{1, 0, 0, 0});
    CHECK(dot_reflect(Weight{2, 0}, Reflection{1, 2, 1}, 3) == Weight{2, 0});
    CHECK(dot_reflect(Weight{4, 3, 2, 1, 0}, Reflection{2, 5, 1}, 5) == Weight{4, 2, 2, 1, 1});
    CHECK_THROWS_AS(dot_reflect(Weight{1, 0}, Reflection{2, 1, 0}, 3), std::out_of_range);
    CHECK_THROWS_AS(dot_reflect(Weight{1, 0}, Reflection{1, 3, 0}, 3), std::out_of_range);
}

TEST_CASE("dot reflection is a degree-preserving involution") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10000; ++t) {
        const Int p = oracle::random_prime(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
        std::vector<Int> e(n);
        for (auto& x : e) x = std::uniform_int_distribution<Int>(-50, 50)(rng);
        const Weight w(e);
        const std::size_t i = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        const std::size_t j = std::uniform_int_distribution<std::size_t>(i + 1, n)(rng);
        const Reflection r{i, j, std::uniform_int_distribution<Int>(-6, 6)(rng)};
        const Weight image = dot_reflect(w, r, p);
        CHECK(dot_reflect(image, r, p) == w);
        CHECK(degree(image) == degree(w));
    }
}

TEST_CASE("even linkage examples") {
    CHECK(even_linked(Weight{3, 0}, Weight{3, 0}, 3));
    CHECK(even_linked(Weight{3, 0}, Weight{2, 1}, 3));
    CHECK_FALSE(even_linked(Weight{0, 0}, Weight{1, 1}, 3));
    CHECK_THROWS_AS(even_linked(Weight{0, 0}, Weight{0, 0, 0}, 3), std::invalid_argument);
}

TEST_CASE("even linkage agrees with the permutation oracle") {
    std::mt19937_64 rng(3);
    int linked = 0;
    for (int t = 0; t < 4000; ++t) {
        const Int p = std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 5;
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
        const Weight a = oracle::random_dominant(rng, n, -6, 6);
        const Weight b = oracle::random_dominant(rng, n, -6, 6);
        const bool got = even_linked(a, b, p);
        CHECK(got == oracle::even_linked(a, b, p));
        linked += got;
    }
    CHECK(linked > 50);
}

TEST_CASE("reflections preserve Donkin invariants at defect zero") {
    std::mt19937_64 rng(4);
    int checked = 0;
    for (int t = 0; t < 10000; ++t) {
        const Int p = oracle::random_prime(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
        const Weight w = oracle::random_dominant(rng, n, -15, 15);
        const std::size_t i = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        const std::size_t j = std::uniform_int_distribution<std::size_t>(i + 1, n)(rng);
        const Int k = std::uniform_int_distribution<Int>(-3, 3)(rng);
        const Weight image = dot_reflect(w, Reflection{i, j, k}, p);
        if (!is_dominant(image) || defect(w, p) != 0 || defect(image, p) != 0) continue;
        ++checked;
        CHECK(even_linked(w, image, p));
    }
    CHECK(checked > 1000);
}

TEST_CASE("a reflection can change the defect") {
    // Same dot orbit, different Donkin classes.
    const Weight image = dot_reflect(Weight{2, 0}, Reflection{1, 2, 2}, 3);
    CHECK(image == Weight{5, -3});
    CHECK(defect(Weight{2, 0}, 3) == 1);
    CHECK(defect(image, 3) == 2);
    CHECK_FALSE(even_linked(Weight{2, 0}, image, 3));
    CHECK_FALSE(oracle::even_linked(Weight{2, 0}, image, 3));
}

TEST_CASE("even linkage is an equivalence relation") {
    std::mt19937_64 rng(5);
    // Small boxes keep linked triples frequent.
    for (Int p : {3, 5}) {
        for (std::size_t n = 2; n <= 4; ++n) {
            const auto ws = dominant_weights_in_box(n, -2, 3);
            for (const auto& a : ws) CHECK(even_linked(a, a, p));
            for (int t = 0; t < 3000; ++t) {
                std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
                const Weight& a = ws[pick(rng)];
                const Weight& b = ws[pick(rng)];
                const Weight& c = ws[pick(rng)];
                CHECK(even_linked(a, b, p) == even_linked(b, a, p));
                if (even_linked(a, b, p) && even_linked(b, c, p)) CHECK(even_linked(a, c, p));
            }
        }
    }
}

TEST_CASE("even neighbors") {
    const auto has = [](const std::vector<EvenNeighbor>& v, const Weight& w, const Reflection& r) {
        return std::any_of(v.begin(), v.end(), [&](const EvenNeighbor& e) { return e.weight == w && e.reflection == r; });
    };
    CHECK(has(even_neighbors(Weight{3, 0}, 3, 1), Weight{2, 1}, Reflection{1, 2, 1}));
    CHECK(has(even_neighbors(Weight{0, 0}, 3, 2), Weight{2, -2}, Reflection{1, 2, 1}));
    // Lowest alcove: nothing distinct and dominant within a small cap.
    for (Int p : {5, 7})
        for (std::size_t i = 1; 2 * i + 1 <= static_cast<std::size_t>(p); ++i) {
            const Weight w = omega(0, i, i + 2);
            const Int cap = p - d_interval(w, 1, w.rank()) - 1;
            if (cap >= 0) CHECK(even_neighbors(w, p, cap).empty());
        }
    std::mt19937_64 rng(6);
    for (int t = 0; t < 300; ++t) {
        const Int p = oracle::random_prime(rng);
        const Weight w = oracle::random_dominant(rng, std::uniform_int_distribution<std::size_t>(2, 5)(rng), -8, 8);
        const auto nb = even_neighbors(w, p);
        for (const auto& e : nb) {
            CHECK(e.weight != w);
            CHECK(is_dominant(e.weight));
            CHECK(dot_reflect(w, e.reflection, p) == e.weight);
            CHECK(even_linked(w, e.weight, p));
        }
    }
}
