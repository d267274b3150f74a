#include "perilink/jantzen.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>

#include <json.hpp>

#include "perilink/affine.hpp"

namespace perilink {

CpbDecomposition decompose_cpb(Int d, Int p) {
    require_odd_prime(p);
    if (d <= 0) throw std::invalid_argument("decompose_cpb needs d > 0, got " + std::to_string(d));
    CpbDecomposition out;
    Int rest = d;
    while (rest % p == 0) {
        rest /= p;
        ++out.s;
    }
    out.c = rest % p;
    out.b = rest / p;
    return out;
}

namespace {

// Chooses chain[r] for r = 1..b; chain[0] = u and chain[b+1] = v are fixed.
// With skip_first the segment (u, chain[1]) is free, otherwise (chain[b], v) is.
bool extend_chain(const Weight& w, Int q, std::vector<std::size_t>& chain, std::size_t r, std::size_t b, bool skip_first) {
    const std::size_t v = chain[b + 1];
    if (r == b + 1) {
        return !skip_first || d_interval(w, chain[b], v) == q;
    }
    const bool constrained = skip_first ? r >= 2 : true;
    for (std::size_t x = chain[r - 1] + 1; x + (b - r) < v; ++x) {
        if (constrained && d_interval(w, chain[r - 1], x) != q) continue;
        chain[r] = x;
        if (extend_chain(w, q, chain, r + 1, b, skip_first)) return true;
    }
    return false;
}

}  // namespace

bool star_condition(const Weight& w, Int p, std::size_t u, std::size_t v) {
    if (!(1 <= u && u < v && v <= w.rank())) throw std::out_of_range("star_condition needs 1 <= u < v <= n");
    const CpbDecomposition cpb = decompose_cpb(d_interval(w, u, v), p);
    if (cpb.b == 0) return true;
    if (cpb.b > static_cast<Int>(v - u - 1)) return false;
    const auto b = static_cast<std::size_t>(cpb.b);
    const Int q = checked_pow(p, cpb.s + 1);
    std::vector<std::size_t> chain(b + 2);
    chain[0] = u;
    chain[b + 1] = v;
    return extend_chain(w, q, chain, 1, b, false) || extend_chain(w, q, chain, 1, b, true);
}

IrreducibilityVerdict even_irreducible(const Weight& w, Int p) {
    if (!is_dominant(w)) throw std::invalid_argument("even_irreducible needs a dominant weight, got " + w.to_string());
    IrreducibilityVerdict verdict;
    for (std::size_t u = 1; u <= w.rank(); ++u)
        for (std::size_t v = u + 1; v <= w.rank(); ++v)
            if (!star_condition(w, p, u, v)) verdict.failing_pairs.emplace_back(u, v);
    verdict.irreducible = verdict.failing_pairs.empty();
    return verdict;
}

std::optional<bool> IrreducibilityCache::lookup(Int p, const Weight& w) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(Key{p, w});
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void IrreducibilityCache::insert(Int p, const Weight& w, bool irreducible) {
    std::unique_lock lock(mutex_);
    table_.insert_or_assign(Key{p, w}, irreducible);
}

bool IrreducibilityCache::irreducible(Int p, const Weight& w) {
    if (auto hit = lookup(p, w)) return *hit;
    const bool verdict = even_irreducible(w, p).irreducible;
    insert(p, w, verdict);
    return verdict;
}

std::size_t IrreducibilityCache::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

std::size_t IrreducibilityCache::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return 0;
    std::size_t count = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto record = nlohmann::json::parse(line);
        insert(record.at("p").get<Int>(), Weight(record.at("lambda").get<std::vector<Int>>()),
               record.at("irreducible").get<bool>());
        ++count;
    }
    return count;
}

void IrreducibilityCache::save(const std::filesystem::path& path) const {
    std::vector<std::pair<Key, bool>> rows;
    {
        std::shared_lock lock(mutex_);
        rows.assign(table_.begin(), table_.end());
    }
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        if (x.first.p != y.first.p) return x.first.p < y.first.p;
        return x.first.w < y.first.w;
    });
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + path.string());
    for (const auto& [key, irreducible] : rows) {
        nlohmann::ordered_json record;
        record["p"] = key.p;
        record["lambda"] = std::vector<Int>(key.w.entries().begin(), key.w.entries().end());
        record["irreducible"] = irreducible;
        out << record.dump() << '\n';
    }
}

bool f0_member(const Weight& w, Int p, EligibilityMode mode, IrreducibilityCache* cache) {
    if (!is_dominant(w)) throw std::invalid_argument("f0_member needs a dominant weight, got " + w.to_string());
    if (mode == EligibilityMode::strict && defect(w, p) != 0) return false;
    if (cache) return cache->irreducible(p, w);
    return even_irreducible(w, p).irreducible;
}

namespace {

// Some pair needs more intermediate indices than exist between its ends.
bool has_short_pair(const Weight& w, Int p) {
    const std::size_t n = w.rank();
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (decompose_cpb(d_interval(w, u, v), p).b > static_cast<Int>(v - u - 1)) return true;
    return false;
}

bool is_two_level(const Weight& w) {
    const std::size_t n = w.rank();
    if (w.entry(1) - w.entry(n) != 1) return false;
    return is_dominant(w);
}

// Leading block of value a, then entries no lower than a - i, with i <= (p-1)/2.
bool is_flat_head(const Weight& w, Int p) {
    const std::size_t n = w.rank();
    const Int a = w.entry(1);
    std::size_t run = 1;
    while (run < n && w.entry(run + 1) == a) ++run;
    const Int need = std::max<Int>(a - w.entry(n), static_cast<Int>(n - run));
    return need <= (p - 1) / 2 && need <= static_cast<Int>(n - 1);
}

// A constant run k..l with d_{1,k} < p and d_{l,n} < p, and every pair with
// b > 0 covered by one of the closed-form witnesses available in that setting.
bool has_short_plateau_cover(const Weight& w, Int p) {
    const std::size_t n = w.rank();
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1 && d_interval(w, 1, k) >= p) break;
        std::size_t l = k;
        while (l < n && w.entry(l + 1) == w.entry(k)) ++l;
        if (l < n && d_interval(w, l, n) >= p) continue;
        bool covered = true;
        for (std::size_t u = 1; u <= n && covered; ++u) {
            for (std::size_t v = u + 1; v <= n && covered; ++v) {
                const CpbDecomposition cpb = decompose_cpb(d_interval(w, u, v), p);
                if (cpb.b == 0 || cpb.s > 0) continue;
                bool ok = false;
                for (std::size_t t = std::max(l + 1, u + 1); t <= n && !ok; ++t)
                    ok = d_interval(w, u, t) % p == 0;
                const Int head = cpb.c;
                const Int tail = checked_mul(cpb.b, p);
                for (std::size_t r = u + 1; r < v && !ok; ++r) {
                    const Int d = d_interval(w, u, r);
                    ok = d == head || d == tail;
                }
                covered = ok;
            }
        }
        if (covered) return true;
    }
    return false;
}

// With a = w_start, the smallest i such that w_start = ... = w_(n-i) = a and
// w_n >= a - i, provided i <= (p-1)/2.
std::optional<std::size_t> plateau_depth(const Weight& w, std::size_t start, Int p) {
    const std::size_t n = w.rank();
    const Int a = w.entry(start);
    std::size_t end = start;
    while (end < n && w.entry(end + 1) == a) ++end;
    const Int i = std::max<Int>(a - w.entry(n), static_cast<Int>(n - end));
    if (i > (p - 1) / 2 || i > static_cast<Int>(n - start)) return std::nullopt;
    return static_cast<std::size_t>(i);
}

bool avoids_one_mod_p(const Weight& w, Int p, std::size_t u, std::size_t from) {
    for (std::size_t v = std::max(from, u + 1); v <= w.rank(); ++v)
        if (floor_mod(d_interval(w, u, v), p) == 1) return false;
    return true;
}

// (a+1) a ... a, tail >= a - i, defect 0, d_{1,v} != 1 mod p past the plateau.
bool is_raised_first(const Weight& w, Int p) {
    if (w.entry(1) != w.entry(2) + 1) return false;
    const auto i = plateau_depth(w, 2, p);
    if (!i || defect(w, p) != 0) return false;
    return avoids_one_mod_p(w, p, 1, w.rank() - *i + 1);
}

// (a+2)(a+1) a ... a, tail >= a - i, p > 3, defect 0, and both first rows avoid 1 mod p.
bool is_staircase_head(const Weight& w, Int p) {
    if (p <= 3 || w.rank() < 3) return false;
    if (w.entry(1) != w.entry(3) + 2 || w.entry(2) != w.entry(3) + 1) return false;
    const auto i = plateau_depth(w, 3, p);
    if (!i || defect(w, p) != 0) return false;
    const std::size_t from = w.rank() - *i + 1;
    return avoids_one_mod_p(w, p, 1, from) && avoids_one_mod_p(w, p, 2, from);
}

// (a+1)(a+1) a ... a, tail >= a - i, and d_{2,v} != 1 mod p past the plateau.
bool is_raised_pair(const Weight& w, Int p) {
    if (w.rank() < 3) return false;
    if (w.entry(1) != w.entry(2) || w.entry(2) != w.entry(3) + 1) return false;
    const auto i = plateau_depth(w, 3, p);
    if (!i) return false;
    return avoids_one_mod_p(w, p, 2, w.rank() - *i + 1);
}

// (a+2)(a+1)^(1+2j) a^m with m >= 1 and 2 + 2j < p - 1. At 2 + 2j = p - 1
// the pair (1, p) has no index at distance p from 1.
bool is_odd_shoulder(const Weight& w, Int p) {
    const std::size_t n = w.rank();
    const Int a = w.entry(n);
    if (w.entry(1) != a + 2) return false;
    std::size_t k = 2;
    while (k <= n && w.entry(k) == a + 1) ++k;
    const std::size_t ones = k - 2;
    if (ones % 2 == 0 || k > n) return false;
    for (std::size_t x = k; x <= n; ++x)
        if (w.entry(x) != a) return false;
    return static_cast<Int>(ones + 2) < p;
}

}  // namespace

std::optional<bool> fast_f0_screen(const Weight& w, Int p) {
    require_odd_prime(p);
    if (!is_dominant(w)) throw std::invalid_argument("fast_f0_screen needs a dominant weight, got " + w.to_string());
    if (has_short_pair(w, p)) return false;
    if (d_interval(w, 1, w.rank()) <= p) return true;
    if (is_two_level(w)) return true;
    if (is_flat_head(w, p)) return true;
    if (has_short_plateau_cover(w, p)) return true;
    if (is_raised_first(w, p) || is_staircase_head(w, p) || is_raised_pair(w, p)) return true;
    if (is_odd_shoulder(w, p)) return true;
    return std::nullopt;
}

std::vector<Weight> good_filtration_factors(const Weight& w) {
    std::vector<Weight> out;
    for (std::size_t i = 1; i <= w.rank(); ++i)
        for (std::size_t j = i + 1; j <= w.rank(); ++j) {
            Weight x = w.shifted(i, 1).shifted(j, 1);
            if (is_dominant(x)) out.push_back(std::move(x));
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace perilink
