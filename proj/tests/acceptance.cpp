// Acceptance run: prints one PASS/FAIL line per criterion, exits 1 if any fail.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "perilink/engine.hpp"
#include "perilink/recipes.hpp"

using namespace perilink;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

std::vector<Certificate> pool;  // every certificate from criteria 1 and 5
std::atomic<std::size_t> edges_seen{0};
std::atomic<std::size_t> edges_crossing{0};

Weight random_dominant(std::mt19937_64& rng, std::size_t n, Int lo, Int hi) {
    std::uniform_int_distribution<Int> dist(lo, hi);
    std::vector<Int> e(n);
    for (auto& x : e) x = dist(rng);
    std::sort(e.begin(), e.end(), std::greater<>());
    return Weight(e);
}

Int random_prime(std::mt19937_64& rng) {
    static const Int primes[] = {3, 5, 7, 11, 13};
    return primes[std::uniform_int_distribution<std::size_t>(0, 4)(rng)];
}

Outcome census() {
    Outcome out;
    std::size_t rows = 0;
    for (Int p : {3, 5, 7})
        for (std::size_t n : {2, 3, 4}) {
            SearchOptions o;
            o.p = p;
            o.on_edge = [](const ParityWeight& from, const ParityWeight& to, const Move&) {
                ++edges_seen;
                if (sector(from) != sector(to)) ++edges_crossing;
            };
            const std::string tag = "(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")";
            try {
                const CensusReport r = block_census(n, o, -2, 2);
                if (r.representatives.size() != 4 || !r.four_blocks()) {
                    out.pass = false;
                    out.note += " " + tag + " has " + std::to_string(r.representatives.size()) + " representatives";
                }
                for (const auto& row : r.rows) {
                    if (!verify_certificate(row.certificate).ok || row.certificate.start != row.key) {
                        out.pass = false;
                        out.note += " " + tag + " bad certificate for " + row.key.to_string();
                    }
                    pool.push_back(row.certificate);
                }
                rows += r.rows.size();
            } catch (const BudgetExhausted& e) {
                out.pass = false;
                out.note += " " + tag + " budget exhausted at " + e.start().to_string();
            }
        }
    out.note = std::to_string(rows) + " rows over 9 (p,n) cases" + out.note;
    return out;
}

Outcome screen_agreement() {
    std::size_t verdicts = 0, disagreements = 0;
    for (Int p : {3, 5})
        for (std::size_t n = 2; n <= 5; ++n)
            for (Int base : {-1, 0, 1})
                for (const auto& w : dominant_weights_in_box(n, base, base + 3 * p)) {
                    if (w.entry(n) != base) continue;
                    const auto fast = fast_f0_screen(w, p);
                    if (!fast) continue;
                    ++verdicts;
                    if (*fast != even_irreducible(w, p).irreducible) ++disagreements;
                }
    return {disagreements == 0 && verdicts > 0,
            std::to_string(verdicts) + " screen verdicts, " + std::to_string(disagreements) + " disagreements"};
}

Outcome known_verdicts() {
    Outcome out;
    if (even_irreducible(Weight{3, 0}, 3).irreducible) out = {false, "(3,0) judged irreducible at p=3;"};
    if (!even_irreducible(Weight{2, 0, 0}, 3).irreducible) out = {false, out.note + " (2,0,0) judged reducible at p=3;"};
    std::mt19937_64 rng(31);
    std::size_t failures = 0;
    for (int t = 0; t < 1000; ++t) {
        const Int p = random_prime(rng);
        const auto n = std::uniform_int_distribution<std::size_t>(2, static_cast<std::size_t>(p))(rng);
        const Int a = std::uniform_int_distribution<Int>(-20, 20)(rng);
        std::vector<Int> e(n, a);
        e[0] = a + 1;
        const Weight w(e);
        // d_{1,n} = n <= p by construction.
        if (d_interval(w, 1, n) > p || !even_irreducible(w, p).irreducible) ++failures;
    }
    if (failures) out.pass = false;
    out.note += "1000 samples of (a+1,a,...,a), " + std::to_string(failures) + " failures";
    return out;
}

Outcome two_level_weights() {
    std::size_t cases = 0, failures = 0;
    for (Int p : {3, 5, 7})
        for (Int a = -3; a <= 3; ++a)
            for (std::size_t n = 2; n <= 6; ++n)
                for (std::size_t t = 1; t < n; ++t) {
                    std::vector<Int> e(n, a);
                    std::fill(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(t), a + 1);
                    const Weight w(e);
                    ++cases;
                    if (!even_irreducible(w, p).irreducible || defect(w, p) != 0) ++failures;
                }
    return {failures == 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
}

Outcome recipes() {
    const RecipeReport r = verify_all_recipes(RecipeGrid::standard());
    std::size_t bad = 0;
    for (const auto& row : r.rows) {
        if (row.certificate) pool.push_back(*row.certificate);
        if (row.status != RecipeStatus::succeeded) {
            ++bad;
            continue;
        }
        const Certificate& c = *row.certificate;
        const bool end_ok = is_descent_recipe(row.id) ? m_compare(c.end.weight, c.start.weight) == std::strong_ordering::less
                                                      : c.end.weight == *recipe_target(row.id, row.params);
        if (!end_ok || !verify_certificate(c).ok) ++bad;
    }
    return {bad == 0 && !r.rows.empty(),
            std::to_string(r.rows.size()) + " applicable rows, " + std::to_string(bad) + " failures"};
}

Outcome structural_laws() {
    std::mt19937_64 rng(47);
    std::size_t violations = 0;
    auto random_reflection = [&](std::size_t n) {
        const auto i = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        const auto j = std::uniform_int_distribution<std::size_t>(i + 1, n)(rng);
        return Reflection{i, j, std::uniform_int_distribution<Int>(-4, 4)(rng)};
    };

    for (int t = 0; t < 10000; ++t) {
        const Int p = random_prime(rng);
        const auto n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
        std::vector<Int> e(n);
        for (auto& x : e) x = std::uniform_int_distribution<Int>(-40, 40)(rng);
        const Weight w(e);
        const Reflection r = random_reflection(n);
        if (dot_reflect(dot_reflect(w, r, p), r, p) != w) ++violations;
    }

    // Literal claim: every dominant reflection image passes even_linked.
    std::size_t sound = 0, unsound = 0, unsound_defect_zero = 0;
    std::string example;
    while (sound < 10000) {
        const Int p = random_prime(rng);
        const auto n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
        const Weight w = random_dominant(rng, n, -12, 12);
        const Weight image = dot_reflect(w, random_reflection(n), p);
        if (!is_dominant(image)) continue;
        ++sound;
        if (!even_linked(w, image, p)) {
            ++unsound;
            if (defect(w, p) == 0 && defect(image, p) == 0) ++unsound_defect_zero;
            if (example.empty())
                example = w.to_string() + " -> " + image.to_string() + " at p=" + std::to_string(p);
        }
    }
    violations += unsound;

    std::size_t triples = 0;
    for (Int p : {3, 5})
        for (std::size_t n = 2; n <= 4; ++n) {
            const auto ws = dominant_weights_in_box(n, -2, 3);
            std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
            for (const auto& a : ws)
                if (!even_linked(a, a, p)) ++violations;
            for (int t = 0; t < 2000; ++t) {
                const Weight &a = ws[pick(rng)], &b = ws[pick(rng)], &c = ws[pick(rng)];
                const bool ab = even_linked(a, b, p), bc = even_linked(b, c, p);
                if (ab != even_linked(b, a, p)) ++violations;
                if (ab && bc) {
                    ++triples;
                    if (!even_linked(a, c, p)) ++violations;
                }
            }
        }

    std::size_t pairs = 0;
    while (pairs < 10000) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
        const Weight hi = random_dominant(rng, n, -6, 6);
        Weight lo = hi;
        const int steps = std::uniform_int_distribution<int>(0, 5)(rng);
        for (int s = 0; s < steps; ++s) {
            const auto i = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
            const auto j = std::uniform_int_distribution<std::size_t>(i + 1, n)(rng);
            const Weight next = lo.transferred(j, i, 1);
            if (is_dominant(next)) lo = next;
        }
        ++pairs;
        if (!dominance_leq(lo, hi)) {
            ++violations;
            continue;
        }
        const auto cmp = m_compare(lo, hi);
        if (lo == hi ? cmp != std::strong_ordering::equal : cmp != std::strong_ordering::less) ++violations;
    }

    violations += edges_crossing;
    return {violations == 0 && edges_seen > 0,
            "involution 10000; reflection soundness " + std::to_string(unsound) + "/10000 images not even-linked (" +
                std::to_string(unsound_defect_zero) + " with both defects 0" + (example.empty() ? "" : ", e.g. " + example) +
                "); " + std::to_string(triples) + " linked triples, " +
                std::to_string(pairs) + " dominance pairs, " + std::to_string(edges_seen.load()) + " census edges; " +
                std::to_string(violations) + " violations"};
}

// Changes exactly one field; returns false when the chosen field cannot change.
bool tamper(Certificate& c, std::mt19937_64& rng) {
    auto bump = [&](ParityWeight& pw) {
        const auto k = std::uniform_int_distribution<std::size_t>(1, pw.weight.rank())(rng);
        const Int delta = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
        pw.weight = pw.weight.shifted(k, delta * std::uniform_int_distribution<Int>(1, 3)(rng));
    };
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: bump(c.start); return true;
    case 1: c.start.parity ^= 1; return true;
    case 2: bump(c.end); return true;
    case 3: c.end.parity ^= 1; return true;
    default: break;
    }
    if (c.steps.empty()) return false;
    Move& m = c.steps[std::uniform_int_distribution<std::size_t>(0, c.steps.size() - 1)(rng)];
    const Move before = m;
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: {
        static const MoveKind kinds[] = {MoveKind::even_reflection, MoveKind::odd_up_2e, MoveKind::odd_up_pair,
                                         MoveKind::odd_down_2e, MoveKind::odd_down_pair};
        const MoveKind k = kinds[std::uniform_int_distribution<int>(0, 4)(rng)];
        if (k == m.kind) return false;
        if (k == MoveKind::even_reflection) {
            m = Move::even(Reflection{1, 2, 0});
        } else {
            const std::size_t idx = m.kind == MoveKind::even_reflection ? m.reflection.i : m.index;
            m = Move::up_2e(idx);
            m.kind = k;
        }
        break;
    }
    case 1:
        if (m.kind == MoveKind::even_reflection)
            m.reflection.k += std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
        else if (m.kind == MoveKind::donkin_jump)
            return false;
        else
            m.index = m.index > 1 && std::uniform_int_distribution<int>(0, 1)(rng) ? m.index - 1 : m.index + 1;
        break;
    default:
        if (m.kind == MoveKind::even_reflection)
            m.reflection.j = m.reflection.j > m.reflection.i + 1 ? m.reflection.j - 1 : m.reflection.j + 1;
        else
            return false;
    }
    return !(m == before);
}

Outcome integrity() {
    std::size_t unverified = 0;
    for (const auto& c : pool)
        if (!verify_certificate(c).ok) ++unverified;
    std::mt19937_64 rng(59);
    std::size_t mutations = 0, accepted = 0;
    while (mutations < 1000) {
        Certificate c = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        if (!tamper(c, rng)) continue;
        ++mutations;
        if (verify_certificate(c).ok) ++accepted;
    }
    return {unverified == 0 && accepted == 0 && !pool.empty(),
            std::to_string(pool.size()) + " certificates, " + std::to_string(unverified) + " unverified; " +
                std::to_string(mutations) + " tamperings, " + std::to_string(accepted) + " accepted"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"four-block census", census},
        {"fast screen matches exhaustive check", screen_agreement},
        {"known irreducibility verdicts", known_verdicts},
        {"two-level weights irreducible with defect 0", two_level_weights},
        {"recipe replay", recipes},
        {"structural laws", structural_laws},
        {"certificate integrity", integrity},
    };
    bool all = true;
    int number = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d %s: %s (%s; %.1fs)\n", ++number, c.name, o.pass ? "PASS" : "FAIL", o.note.c_str(), secs);
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
