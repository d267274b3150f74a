#include "perilink/recipes.hpp"

#include <algorithm>
#include <array>

namespace perilink {

namespace {

struct RecipeInfo {
    RecipeId id;
    std::string_view name;
    bool descent;
};

constexpr std::array<RecipeInfo, 16> kRecipes{{
    {RecipeId::prop5_2_even, "prop5_2_even", true},
    {RecipeId::prop5_2_odd, "prop5_2_odd", true},
    {RecipeId::lem5_3, "lem5_3", true},
    {RecipeId::lem5_4, "lem5_4", true},
    {RecipeId::prop6_1_odd, "prop6_1_odd", true},
    {RecipeId::prop6_1_even, "prop6_1_even", true},
    {RecipeId::prop6_2_odd, "prop6_2_odd", true},
    {RecipeId::prop6_2_even, "prop6_2_even", true},
    {RecipeId::prop6_3_odd, "prop6_3_odd", true},
    {RecipeId::prop6_3_even, "prop6_3_even", true},
    {RecipeId::lem7_2_n_even, "lem7_2_n_even", false},
    {RecipeId::lem7_2_n_odd, "lem7_2_n_odd", false},
    {RecipeId::lem7_2_p_lt_n_odd, "lem7_2_p_lt_n_odd", false},
    {RecipeId::lem7_2_p_lt_n_even, "lem7_2_p_lt_n_even", false},
    {RecipeId::prop3_4_reduction, "prop3_4_reduction", true},
    {RecipeId::prop3_3_greedy, "prop3_3_greedy", true},
}};

const RecipeInfo& info(RecipeId id) { return kRecipes[static_cast<std::size_t>(id)]; }

std::string str(Int x) { return std::to_string(x); }

// Applies moves one at a time and turns every rejected step or false claim
// into ClaimFailed with the chain built so far.
class ChainBuilder {
public:
    ChainBuilder(Weight start, Int p, EligibilityMode mode, IrreducibilityCache* cache)
        : ctx_{p, mode, -1, cache}, cert_{p, ParityWeight(start, 0), {}, ParityWeight(start, 0), mode} {}

    const Weight& w() const { return cert_.end.weight; }
    Int at(std::size_t k) const { return w().entry(k); }
    std::size_t n() const { return w().rank(); }

    void expect(bool ok, const std::string& claim) const {
        if (!ok) fail(claim + " at " + w().to_string());
    }

    void expect_d(std::size_t k, std::size_t l, Int value) const {
        if (l > n() || k >= l) fail("d_{" + str(k) + "," + str(l) + "} indices out of range at " + w().to_string());
        const Int d = d_interval(w(), k, l);
        if (d != value)
            fail("d_{" + str(k) + "," + str(l) + "} = " + str(value) + " (found " + str(d) + ") at " + w().to_string());
    }

    void up2(std::size_t j) { step(Move::up_2e(j)); }
    void pair(std::size_t i) { step(Move::up_pair(i)); }
    void down2(std::size_t j) { step(Move::down_2e(j)); }
    void down_pair(std::size_t i) { step(Move::down_pair(i)); }
    void reflect(std::size_t i, std::size_t j, Int k) { step(Move::even(Reflection{i, j, k})); }

    // Slides a block of three equal entries starting at x to the left, one
    // raising pair at a time, until it merges into the plateau of value a.
    void merge_triple(std::size_t x, Int a) {
        while (at(x) < a) {
            expect(x + 2 <= n() && at(x) == at(x + 1) && at(x + 1) == at(x + 2),
                   "three equal entries at positions " + str(x) + ".." + str(x + 2));
            pair(x);
            --x;
        }
    }

    const Certificate& certificate() const { return cert_; }

    [[noreturn]] void fail(const std::string& claim) const { throw ClaimFailed(cert_.steps.size(), claim, cert_); }

private:
    void step(const Move& m) {
        ParityWeight next = cert_.end;
        try {
            next = apply_move(cert_.end, m, ctx_);
        } catch (const PreconditionViolated& e) {
            fail(m.to_string() + " from " + w().to_string() + " rejected: " + e.what());
        }
        if (m.is_odd()) {
            const bool up = m.kind == MoveKind::odd_up_2e || m.kind == MoveKind::odd_up_pair;
            const Weight& lower = up ? cert_.end.weight : next.weight;
            if (fast_f0_screen(lower, ctx_.p) == false)
                fail("closed-form screen rejects the lower weight " + lower.to_string() + " of " + m.to_string());
        }
        cert_.steps.push_back(m);
        cert_.end = std::move(next);
    }

    LinkageContext ctx_;
    Certificate cert_;
};

struct Split {
    Int low;   // n mod p
    Int high;  // n div p
};

Split split(std::size_t n, Int p) { return {static_cast<Int>(n) % p, static_cast<Int>(n) / p}; }

std::optional<std::string> section5_common(const RecipeParams& q) {
    const Int n = static_cast<Int>(q.n), i = static_cast<Int>(q.i);
    if (q.p < n) return "p >= n";
    if (i < 2) return "i >= 2";
    if (i > (q.p - 1) / 2) return "i <= (p-1)/2";
    return std::nullopt;
}

std::optional<std::string> section6_common(const RecipeParams& q) {
    const Int n = static_cast<Int>(q.n), i = static_cast<Int>(q.i);
    if (q.p > n) return "p <= n";
    if (i < 2) return "i >= 2";
    if (i > (q.p - 1) / 2) return "i <= (p-1)/2";
    return std::nullopt;
}

std::optional<std::string> hypotheses(RecipeId id, const RecipeParams& q) {
    if (!is_odd_prime(q.p)) return "p odd prime";
    if (q.n < 2) return "n >= 2";
    if (q.i > q.n) return "i <= n";
    const Int n = static_cast<Int>(q.n), i = static_cast<Int>(q.i), p = q.p;
    const Split s = split(q.n, p);
    switch (id) {
    case RecipeId::prop5_2_even:
    case RecipeId::prop5_2_odd: {
        if (auto f = section5_common(q)) return f;
        if (p < n + 1) return "p >= n + 1";
        if (i > p - n + 1) return "i <= p - n + 1";
        const bool even = (n - i) % 2 == 0;
        if (id == RecipeId::prop5_2_even && !even) return "n - i even";
        if (id == RecipeId::prop5_2_odd && even) return "n - i odd";
        if (i == n && n < 3) return "n >= 3 when i = n";
        return std::nullopt;
    }
    case RecipeId::lem5_3:
    case RecipeId::lem5_4: {
        if (auto f = section5_common(q)) return f;
        const Int t = i - p + n;
        if (id == RecipeId::lem5_3) {
            if (t < 2) return "t = i - p + n >= 2";
            if (t % 2 != 0) return "t = i - p + n even";
        } else {
            if (t < 3) return "t = i - p + n >= 3";
            if (t % 2 == 0) return "t = i - p + n odd";
        }
        return std::nullopt;
    }
    case RecipeId::prop6_1_odd:
    case RecipeId::prop6_1_even: {
        if (auto f = section6_common(q)) return f;
        if (s.low < i + 1 || s.low > p - i + 1) return "i + 1 <= n mod p <= p - i + 1";
        const bool odd = (s.low - i) % 2 != 0;
        if (id == RecipeId::prop6_1_odd && !odd) return "(n mod p) - i odd";
        if (id == RecipeId::prop6_1_even && odd) return "(n mod p) - i even";
        return std::nullopt;
    }
    case RecipeId::prop6_2_odd:
    case RecipeId::prop6_2_even: {
        if (auto f = section6_common(q)) return f;
        if (s.low < p - i + 2) return "n mod p >= p - i + 2";
        const bool odd = (s.low - i) % 2 != 0;
        if (id == RecipeId::prop6_2_odd && !odd) return "(n mod p) - i odd";
        if (id == RecipeId::prop6_2_even && odd) return "(n mod p) - i even";
        return std::nullopt;
    }
    case RecipeId::prop6_3_odd:
    case RecipeId::prop6_3_even: {
        if (auto f = section6_common(q)) return f;
        if (s.low > i) return "n mod p <= i";
        const bool odd = (i - s.low) % 2 != 0;
        if (id == RecipeId::prop6_3_odd && !odd) return "i - (n mod p) odd";
        if (id == RecipeId::prop6_3_even && odd) return "i - (n mod p) even";
        return std::nullopt;
    }
    case RecipeId::lem7_2_n_even:
        if (n % 2 != 0) return "n even";
        if (i > 1) return "i in {0, 1}";
        if (i == 1 && p <= n) return "p > n when i = 1";
        return std::nullopt;
    case RecipeId::lem7_2_n_odd:
        if (n % 2 == 0) return "n odd";
        if (i > 1) return "i in {0, 1}";
        if (i == 0 && p <= n) return "p > n when i = 0";
        return std::nullopt;
    case RecipeId::lem7_2_p_lt_n_odd:
        if (p >= n) return "p < n";
        if (s.low % 2 == 0) return "n mod p odd";
        if (i != 1) return "i = 1";
        return std::nullopt;
    case RecipeId::lem7_2_p_lt_n_even:
        if (p > n) return "p <= n";
        if (s.low % 2 != 0) return "n mod p even";
        if (i != 1) return "i = 1";
        return std::nullopt;
    case RecipeId::prop3_4_reduction: {
        if (p > 2 * n - 1) return "p <= 2n - 1";
        const Int j = (p + 1) / 2;
        if (i < j) return "i >= (p+1)/2";
        if (j > n - 1) return "(p+1)/2 <= n - 1";
        return std::nullopt;
    }
    case RecipeId::prop3_3_greedy:
        if (i < 1) return "i >= 1";
        if (i + n - 1 > p) return "i + n - 1 <= p";
        if (i == 1 && n == 2) return "start not omega-shaped";
        return std::nullopt;
    }
    return "unknown recipe";
}

void prop5_2_odd_chain(ChainBuilder& b, Int a, std::size_t i, std::size_t n, Int p) {
    (void)a;
    const Int raise = (p - static_cast<Int>(n) - static_cast<Int>(i) + 2) / 2;
    for (Int k = 0; k < raise; ++k) b.up2(1);
    b.expect_d(1, n, p + 1);
    b.reflect(1, n, 1);
    b.pair(n - 1);
    for (Int k = 1; k < raise; ++k) b.down2(1);
}

void build_prop5_2_even(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    if (i == n) {
        // omega^a_{-n} equals omega^(a-1)_{-(n-1)}, which has n - i odd
        prop5_2_odd_chain(b, a - 1, n - 1, n, p);
        return;
    }
    const std::size_t pairs = (n - i) / 2;
    if (static_cast<Int>(n + i) - 1 < p) {
        for (std::size_t k = 1; k <= pairs; ++k) b.pair(2 * k - 1);
    } else {
        b.pair(1);
        b.expect_d(1, n, p + 1);
        b.expect_d(2, n, p);
        for (std::size_t k = 2; k <= pairs; ++k) b.pair(2 * k - 1);
    }
    for (std::size_t k = 1; k <= i; ++k) b.up2(n - i + k);
}

void build_lem5_3(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    (void)a;
    const auto s = static_cast<std::size_t>((static_cast<Int>(i + n) - p) / 2);
    b.pair(1);
    b.expect_d(2, n - s + 1, p + 1);
    b.reflect(2, n - s + 1, 1);
    b.expect_d(1, n - s, p);
    if (s == 1) {
        b.pair(n - 1);
    } else {
        for (std::size_t j = n - s + 2; j <= n; ++j) b.up2(j);
    }
}

void build_lem5_4(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    const auto s = static_cast<std::size_t>((static_cast<Int>(i + n) - p - 1) / 2);
    b.up2(1);
    b.expect_d(1, n - s - 1, p);
    b.pair(2);
    b.expect_d(3, n - s + 1, p + 1);
    b.reflect(3, n - s + 1, 1);
    b.expect_d(1, n - s - 1, p);
    b.expect_d(2, n - s, p);
    b.pair(n - s);
    b.expect_d(1, n - s - 1, p);
    b.expect_d(2, n - s + 1, p);
    b.pair(n - s - 1);
    b.expect_d(1, n - s, p);
    b.expect_d(2, n - s + 1, p);
    for (std::size_t j = n - s + 2; j <= n; ++j) b.up2(j);
    b.merge_triple(n - s - 2, a);
    b.expect(b.w() == Weight([&] {
                 std::vector<Int> e{a + 2, a + 1};
                 for (std::size_t k = 0; k < n - i; ++k) e.push_back(a);
                 for (std::size_t k = 1; k + 2 <= i; ++k) e.push_back(a - static_cast<Int>(k));
                 return e;
             }()),
             "chain reaches (a+2)(a+1)a^(n-i)(a-1)...(a-i+2)");
    for (std::size_t k = 1; 2 * k <= n - i; ++k) b.pair(2 * k + 1);
}

// (a+2)(a+1)^(1+2j) ... grows by raising pairs at 3, 5, ...; `count` pairs.
void grow_shoulder(ChainBuilder& b, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) b.pair(2 * j + 3);
}

// From (a+2)(a+1)a^(n-2): pairs up to (a+2)(a+1)^(p-2)a^(n-p+1), then one reflection.
void shoulder_reflection_ending(ChainBuilder& b, Int p) {
    grow_shoulder(b, static_cast<std::size_t>((p - 3) / 2));
    b.expect_d(1, static_cast<std::size_t>(p), p + 1);
    b.reflect(1, static_cast<std::size_t>(p), 1);
}

void build_prop6_2_even(ChainBuilder& b, const RecipeParams& q);

void build_prop6_1_odd(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    (void)a;
    const Split s = split(n, p);
    const Int r = (p - static_cast<Int>(i) - s.low + 2) / 2;
    for (Int k = 0; k < r; ++k) b.up2(1);
    b.expect_d(1, n, (s.high + 1) * p + 1);
    b.reflect(1, n, s.high + 1);
    b.pair(n - 1);
    for (Int k = 1; k < r; ++k) b.down2(1);
}

void build_prop6_1_even(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    const Split s = split(n, p);
    const Int r = (p - static_cast<Int>(i) - s.low + 1) / 2;
    if (r == 0) {
        // No room to raise the first entry before reflecting; the chain that
        // handles larger n mod p already works from n mod p = p - i + 1.
        build_prop6_2_even(b, q);
        return;
    }
    b.pair(1);
    for (Int k = 0; k < r; ++k) b.up2(1);
    b.expect_d(1, n, (s.high + 1) * p + 1);
    b.reflect(1, n, s.high + 1);
    b.pair(n - 1);
    b.merge_triple(n - 2, a);
    for (Int k = 1; k < r; ++k) b.down2(1);
    if (i == 2) {
        shoulder_reflection_ending(b, p);
        return;
    }
    const auto tip = static_cast<std::size_t>(s.low) - i + 4;
    grow_shoulder(b, (tip - 2) / 2);
    b.expect_d(tip, n - i + 3, s.high * p + 1);
    b.reflect(tip, n - i + 3, s.high);
}

void build_prop6_2_odd(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    (void)a;
    const Split s = split(n, p);
    const auto r = static_cast<std::size_t>((static_cast<Int>(i) - (p - s.low)) / 2);
    b.up2(1);
    b.expect_d(1, n - r, (s.high + 1) * p + 1);
    b.reflect(1, n - r, s.high + 1);
    b.pair(n - r - 1);
    for (std::size_t j = n - r + 1; j <= n; ++j) b.up2(j);
}

void build_prop6_2_even(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    const Split s = split(n, p);
    const auto r = static_cast<std::size_t>((static_cast<Int>(i) - (p - s.low) + 1) / 2);
    b.pair(1);
    b.up2(1);
    b.expect_d(1, n - r, (s.high + 1) * p + 1);
    b.reflect(1, n - r, s.high + 1);
    if (r + 1 < i) b.pair(n - r - 1);
    for (std::size_t j = n - r + 1; j <= n; ++j) b.up2(j);
    b.merge_triple(n - r - 2, a);
    if (i == 2) {
        shoulder_reflection_ending(b, p);
        return;
    }
    const auto tip = static_cast<std::size_t>(s.low) - i + 4;
    grow_shoulder(b, (tip - 2) / 2);
    b.expect_d(tip, n - i + 3, s.high * p + 1);
    b.reflect(tip, n - i + 3, s.high);
}

void build_prop6_3_even(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    (void)a;
    const Split s = split(n, p);
    const auto r = static_cast<std::size_t>((static_cast<Int>(i) + s.low - 2) / 2);
    b.pair(1);
    b.expect_d(2, n - r, s.high * p + 1);
    b.reflect(2, n - r, s.high);
    if (s.low < static_cast<Int>(i)) {
        // A second reflection along e_1 - e_(n-r) would leave the dominant
        // chamber here; raising the doubled entry and the tail finishes instead.
        b.pair(n - r - 1);
        for (std::size_t j = n - r + 1; j <= n; ++j) b.up2(j);
    } else {
        for (std::size_t j = 2; j <= i; ++j) b.up2(n - i + j);
    }
}

void build_prop6_3_odd(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    const Split s = split(n, p);
    const auto r = static_cast<std::size_t>((static_cast<Int>(i) + s.low - 1) / 2);
    b.pair(1);
    b.pair(1);
    b.expect_d(2, n - r, s.high * p + 1);
    b.reflect(2, n - r, s.high);
    // When n mod p = i - 1 the doubled entry already sits in the a-plateau.
    if (r + 1 < i) b.pair(n - r - 1);
    for (std::size_t j = n - r + 1; j <= n; ++j) b.up2(j);
    b.merge_triple(n - r - 2, a);
    // With n mod p = i - 1, or i - 3 and n >= 2p, the last raising pair
    // would start outside F0; the shoulder then ends right before position p
    // and a reflection finishes instead.
    const Int t = s.low;
    if (t + 1 == static_cast<Int>(i) || (t + 3 == static_cast<Int>(i) && s.high > 1)) {
        shoulder_reflection_ending(b, p);
        return;
    }
    const auto count = static_cast<std::size_t>((p + s.low - static_cast<Int>(i)) / 2);
    grow_shoulder(b, count);
    if (s.high > 1) {
        b.pair(2 * count + 3);
        const auto tip = static_cast<std::size_t>(p + s.low) - i + 4;
        b.expect_d(tip, n - i + 3, (s.high - 1) * p + 1);
        b.reflect(tip, n - i + 3, s.high - 1);
    }
}

void build_lem7_2_n_even(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    (void)a;
    if (i == 0) {
        for (std::size_t k = 1; k < n; k += 2) b.pair(k);
        return;
    }
    const Int up = (p - static_cast<Int>(n) + 1) / 2;
    for (Int k = 0; k < up; ++k) b.up2(1);
    b.expect_d(1, n, p + 1);
    b.reflect(1, n, 1);
    for (Int k = 0; k + 1 < up; ++k) b.down2(1);
    for (std::size_t k = 2; k + 1 < n; k += 2) b.pair(k);
}

void build_lem7_2_n_odd(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    (void)a;
    (void)p;
    if (i == 1) {
        for (std::size_t v = 0; 2 * v + 3 <= n; ++v) b.down_pair(n - 2 - 2 * v);
        return;
    }
    for (std::size_t j = 1; j <= n; ++j) b.up2(j);
}

// (a+1)a^(n-1) up to omega^(a+1)_{-1} (n even) or omega^(a+1)_0 (n odd).
void finish_from_single_raise(ChainBuilder& b, std::size_t n) {
    for (std::size_t k = 2; k + 1 <= n - (n % 2 == 0 ? 1 : 0); k += 2) b.pair(k);
}

void build_lem7_2_p_lt_n_odd(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    (void)a;
    (void)i;
    const Split s = split(n, p);
    const auto r = static_cast<std::size_t>((s.low + 1) / 2);
    for (std::size_t j = 0; j < r; ++j) b.pair(2 * j + 1);
    b.expect_d(2 * r, n, s.high * p + 1);
    b.reflect(2 * r, n, s.high);
    for (std::size_t j = r - 1; j >= 1; --j) b.down_pair(2 * j);
    finish_from_single_raise(b, n);
}

void build_lem7_2_p_lt_n_even(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    (void)a;
    (void)i;
    const Split s = split(n, p);
    const Int r = (p + 1 - s.low) / 2;
    for (Int k = 0; k < r; ++k) b.up2(1);
    b.expect_d(1, n, (s.high + 1) * p + 1);
    b.reflect(1, n, s.high + 1);
    for (Int k = 1; k < r; ++k) b.down2(1);
    finish_from_single_raise(b, n);
}

void build_prop3_4(ChainBuilder& b, const RecipeParams& q) {
    const auto [a, i, n, p] = q;
    (void)a;
    (void)i;
    const Weight start = b.w();
    const auto j = static_cast<std::size_t>((p + 1) / 2);
    b.expect_d(n - j, n, p + 1);
    b.reflect(n - j, n, 1);
    b.expect(dominance_leq(b.w(), start) && b.w() != start, "reflected weight strictly below the start in dominance order");
}

void build_prop3_3_greedy(ChainBuilder& b, const RecipeParams& q) {
    const Int p = q.p;
    const std::size_t n = q.n;
    LinkageContext ctx{p, EligibilityMode::nonstrict, -1, nullptr};
    for (;;) {
        // Raising moves at positions past the first shrink m; take the smallest result.
        std::optional<WeightStep> best;
        b.expect(d_interval(b.w(), 1, n) <= p, "d_{1,n} <= p along the greedy chain");
        for (auto& s : odd_up_moves(b.w(), ctx)) {
            if (s.move.index < 2) continue;
            if (!best || m_compare(s.weight, best->weight) == std::strong_ordering::less) best = s;
        }
        if (!best) break;
        const auto before = m_vector(b.w());
        if (best->move.kind == MoveKind::odd_up_2e) {
            b.up2(best->move.index);
        } else {
            b.pair(best->move.index);
        }
        b.expect(m_vector(b.w()) < before, "m strictly decreases at each greedy step");
    }
    b.expect(match_omega(b.w()).has_value(), "greedy chain ends at an omega-shaped weight");
}

}  // namespace

const std::vector<RecipeId>& all_recipes() {
    static const std::vector<RecipeId> ids = [] {
        std::vector<RecipeId> v;
        for (const auto& r : kRecipes) v.push_back(r.id);
        return v;
    }();
    return ids;
}

std::string_view recipe_name(RecipeId id) { return info(id).name; }

RecipeId recipe_from_name(std::string_view name) {
    for (const auto& r : kRecipes)
        if (r.name == name) return r.id;
    throw std::invalid_argument("unknown recipe " + std::string(name));
}

bool is_descent_recipe(RecipeId id) { return info(id).descent; }

std::string to_string(const RecipeParams& q) {
    return "a=" + str(q.a) + " i=" + str(static_cast<Int>(q.i)) + " n=" + str(static_cast<Int>(q.n)) +
           " p=" + str(q.p);
}

HypothesisViolated::HypothesisViolated(RecipeId id, std::string clause)
    : std::invalid_argument(std::string(recipe_name(id)) + " hypothesis violated: " + clause), clause_(std::move(clause)) {}

ClaimFailed::ClaimFailed(std::size_t step, std::string claim, Certificate partial)
    : std::runtime_error("claim failed after step " + std::to_string(step) + ": " + claim),
      step_(step),
      claim_(std::move(claim)),
      partial_(std::move(partial)) {}

std::optional<std::string> hypothesis_failure(RecipeId id, const RecipeParams& params) { return hypotheses(id, params); }

Weight recipe_source(RecipeId id, const RecipeParams& q) {
    if (id == RecipeId::prop3_3_greedy) {
        std::vector<Int> e(q.n, q.a);
        e[0] = checked_add(q.a, static_cast<Int>(q.i));
        return Weight(std::move(e));
    }
    return omega(q.a, q.i, q.n);
}

std::optional<Weight> recipe_target(RecipeId id, const RecipeParams& q) {
    const bool n_even = q.n % 2 == 0;
    switch (id) {
    case RecipeId::lem7_2_n_even:
        return omega(q.a + 1, q.i, q.n);
    case RecipeId::lem7_2_n_odd:
        return q.i == 1 ? omega(q.a - 1, 0, q.n) : omega(q.a + 2, 0, q.n);
    case RecipeId::lem7_2_p_lt_n_odd:
    case RecipeId::lem7_2_p_lt_n_even:
        return n_even ? omega(q.a + 1, 1, q.n) : omega(q.a + 1, 0, q.n);
    default:
        return std::nullopt;
    }
}

Certificate run_recipe(RecipeId id, const RecipeParams& params, EligibilityMode mode, IrreducibilityCache* cache) {
    if (auto clause = hypotheses(id, params)) throw HypothesisViolated(id, *clause);
    const Weight start = recipe_source(id, params);
    ChainBuilder b(start, params.p, mode, cache);
    switch (id) {
    case RecipeId::prop5_2_even: build_prop5_2_even(b, params); break;
    case RecipeId::prop5_2_odd: prop5_2_odd_chain(b, params.a, params.i, params.n, params.p); break;
    case RecipeId::lem5_3: build_lem5_3(b, params); break;
    case RecipeId::lem5_4: build_lem5_4(b, params); break;
    case RecipeId::prop6_1_odd: build_prop6_1_odd(b, params); break;
    case RecipeId::prop6_1_even: build_prop6_1_even(b, params); break;
    case RecipeId::prop6_2_odd: build_prop6_2_odd(b, params); break;
    case RecipeId::prop6_2_even: build_prop6_2_even(b, params); break;
    case RecipeId::prop6_3_odd: build_prop6_3_odd(b, params); break;
    case RecipeId::prop6_3_even: build_prop6_3_even(b, params); break;
    case RecipeId::lem7_2_n_even: build_lem7_2_n_even(b, params); break;
    case RecipeId::lem7_2_n_odd: build_lem7_2_n_odd(b, params); break;
    case RecipeId::lem7_2_p_lt_n_odd: build_lem7_2_p_lt_n_odd(b, params); break;
    case RecipeId::lem7_2_p_lt_n_even: build_lem7_2_p_lt_n_even(b, params); break;
    case RecipeId::prop3_4_reduction: build_prop3_4(b, params); break;
    case RecipeId::prop3_3_greedy: build_prop3_3_greedy(b, params); break;
    }
    if (is_descent_recipe(id)) {
        b.expect(m_compare(b.w(), start) == std::strong_ordering::less, "end strictly below the start in m-order");
    } else {
        const Weight target = *recipe_target(id, params);
        b.expect(b.w() == target, "end equals " + target.to_string());
    }
    return b.certificate();
}

}  // namespace perilink
