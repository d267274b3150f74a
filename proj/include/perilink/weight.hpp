#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace perilink {

using Int = std::int64_t;

// Raised whenever an intermediate value leaves the int64 range.
class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, int exponent);

// Remainder in [0, m) for m > 0.
Int floor_mod(Int a, Int m);

bool is_odd_prime(Int p);
// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(Int p);

// Integer vector of length n >= 2. Positions are 1-based in every public
// accessor that takes an index.
class Weight {
public:
    explicit Weight(std::vector<Int> entries);
    Weight(std::initializer_list<Int> entries);

    static Weight constant(std::size_t n, Int value);

    std::size_t rank() const { return entries_.size(); }
    Int entry(std::size_t i) const;
    std::span<const Int> entries() const { return entries_; }

    // Copy with `amount` added at position i.
    Weight shifted(std::size_t i, Int amount) const;
    // Copy with `amount` added at i and subtracted at j.
    Weight transferred(std::size_t i, std::size_t j, Int amount) const;

    std::string to_string() const;

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

private:
    std::vector<Int> entries_;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

bool is_dominant(const Weight& w);
Int degree(const Weight& w);
// d_{k,l} = w_k - w_l + (l - k) for 1 <= k < l <= n.
Int d_interval(const Weight& w, std::size_t k, std::size_t l);

// (w1 - wn, w1 - w(n-1), ..., w1 - w2); lexicographic order with the first
// coordinate most significant.
std::vector<Int> m_vector(const Weight& w);
std::strong_ordering m_compare(const Weight& a, const Weight& b);

// Dominance order: equal totals and every prefix sum of `lower` bounded by the
// matching prefix sum of `upper`.
bool dominance_leq(const Weight& lower, const Weight& upper);

// Weight (a^(n-i), a-1, a-2, ..., a-i) for 0 <= i <= n.
Weight omega(Int a, std::size_t i, std::size_t n);

struct OmegaShape {
    Int a = 0;
    std::size_t i = 0;
    friend bool operator==(const OmegaShape&, const OmegaShape&) = default;
};

// Recognises omega-shaped weights, returning the unique form with i <= n-1.
std::optional<OmegaShape> match_omega(const Weight& w);
// Rewrites the i = n form to the equivalent i = n-1 form; other shapes pass through.
OmegaShape canonicalize_omega(OmegaShape shape, std::size_t n);

struct Sector {
    int degree_parity = 0;
    int shifted_parity = 0;

    std::string_view name() const;
    friend bool operator==(const Sector&, const Sector&) = default;
    friend auto operator<=>(const Sector&, const Sector&) = default;
};

Sector sector_from_name(std::string_view name);

struct ParityWeight {
    Weight weight;
    int parity = 0;

    ParityWeight(Weight w, int eps);

    friend bool operator==(const ParityWeight&, const ParityWeight&) = default;
    friend auto operator<=>(const ParityWeight&, const ParityWeight&) = default;
    std::string to_string() const;
};

struct ParityWeightHash {
    std::size_t operator()(const ParityWeight& pw) const noexcept;
};

Sector sector(const ParityWeight& pw);

// Fixed representative of each sector: F00 (0^n,0), F01 (0^n,1),
// F10 (omega_{-1},1), F11 (omega_{-1},0).
ParityWeight canonical_representative(Sector s, std::size_t n);
ParityWeight canonical_representative_of(const ParityWeight& pw);

// Every dominant weight of rank n with lo <= w_n <= w_1 <= hi, in lexicographic order.
std::vector<Weight> dominant_weights_in_box(std::size_t n, Int lo, Int hi);

}  // namespace perilink
