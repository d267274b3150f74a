#pragma once

#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "perilink/weight.hpp"

namespace perilink {

// d = c p^s + b p^(s+1) with 0 < c < p.
struct CpbDecomposition {
    Int c = 0;
    int s = 0;
    Int b = 0;
    friend bool operator==(const CpbDecomposition&, const CpbDecomposition&) = default;
};

CpbDecomposition decompose_cpb(Int d, Int p);

// Chain condition for the pair u < v: with d_{u,v} = c p^s + b p^(s+1) and
// b > 0, there must be indices u = i_0 < i_1 < ... < i_b < i_(b+1) = v with
// d_{i_r,i_(r+1)} = p^(s+1) either for every r in 0..b-1 or for every r in 1..b.
bool star_condition(const Weight& w, Int p, std::size_t u, std::size_t v);

struct IrreducibilityVerdict {
    bool irreducible = true;
    std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
    friend bool operator==(const IrreducibilityVerdict&, const IrreducibilityVerdict&) = default;
};

// Exhaustive check of the chain condition on every pair; throws
// std::invalid_argument for non-dominant input.
IrreducibilityVerdict even_irreducible(const Weight& w, Int p);

enum class EligibilityMode { nonstrict, strict };

// Thread-safe memo of even_irreducible keyed by (p, weight), with an optional
// JSON-lines backing file.
class IrreducibilityCache {
public:
    std::optional<bool> lookup(Int p, const Weight& w) const;
    void insert(Int p, const Weight& w, bool irreducible);
    bool irreducible(Int p, const Weight& w);
    std::size_t size() const;

    // Returns the number of records read; a missing file reads as empty.
    std::size_t load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

private:
    struct Key {
        Int p;
        Weight w;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept { return WeightHash{}(k.w) ^ static_cast<std::size_t>(k.p); }
    };
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, bool, KeyHash> table_;
};

// Jantzen condition, plus defect 0 when strict. Throws for non-dominant input.
bool f0_member(const Weight& w, Int p, EligibilityMode mode = EligibilityMode::nonstrict,
               IrreducibilityCache* cache = nullptr);

// Closed-form screen over known weight shapes. A returned value always equals
// even_irreducible(w, p).irreducible; nullopt means no shape matched.
std::optional<bool> fast_f0_screen(const Weight& w, Int p);

// w + e_i + e_j over i < j, keeping dominant results; sorted.
std::vector<Weight> good_filtration_factors(const Weight& w);

}  // namespace perilink
