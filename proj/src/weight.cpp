#include "perilink/weight.hpp"

#include <algorithm>
#include <sstream>

namespace perilink {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in multiplication");
    return r;
}

Int checked_pow(Int base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    Int r = 1;
    for (int e = 0; e < exponent; ++e) r = checked_mul(r, base);
    return r;
}

Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

bool is_odd_prime(Int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (Int q = 3; q <= p / q; q += 2)
        if (p % q == 0) return false;
    return true;
}

void require_odd_prime(Int p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

Weight::Weight(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) throw std::invalid_argument("weight rank must be at least 2");
}

Weight::Weight(std::initializer_list<Int> entries) : Weight(std::vector<Int>(entries)) {}

Weight Weight::constant(std::size_t n, Int value) { return Weight(std::vector<Int>(n, value)); }

Int Weight::entry(std::size_t i) const {
    if (i < 1 || i > entries_.size())
        throw std::out_of_range("weight index " + std::to_string(i) + " outside 1.." + std::to_string(entries_.size()));
    return entries_[i - 1];
}

Weight Weight::shifted(std::size_t i, Int amount) const {
    Weight out = *this;
    out.entries_.at(i - 1) = checked_add(entry(i), amount);
    return out;
}

Weight Weight::transferred(std::size_t i, std::size_t j, Int amount) const {
    Weight out = *this;
    out.entries_.at(i - 1) = checked_add(entry(i), amount);
    out.entries_.at(j - 1) = checked_sub(entry(j), amount);
    return out;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < entries_.size(); ++k) os << (k ? "," : "") << entries_[k];
    os << ')';
    return os.str();
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int x : w.entries()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool is_dominant(const Weight& w) {
    auto e = w.entries();
    return std::is_sorted(e.begin(), e.end(), std::greater<Int>());
}

Int degree(const Weight& w) {
    Int total = 0;
    for (Int x : w.entries()) total = checked_add(total, x);
    return total;
}

Int d_interval(const Weight& w, std::size_t k, std::size_t l) {
    if (!(1 <= k && k < l && l <= w.rank()))
        throw std::out_of_range("d_interval needs 1 <= k < l <= n");
    return checked_add(checked_sub(w.entry(k), w.entry(l)), static_cast<Int>(l - k));
}

std::vector<Int> m_vector(const Weight& w) {
    std::vector<Int> m;
    m.reserve(w.rank() - 1);
    for (std::size_t k = w.rank(); k >= 2; --k) m.push_back(checked_sub(w.entry(1), w.entry(k)));
    return m;
}

std::strong_ordering m_compare(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("m_compare on weights of different rank");
    return m_vector(a) <=> m_vector(b);
}

bool dominance_leq(const Weight& lower, const Weight& upper) {
    if (lower.rank() != upper.rank()) throw std::invalid_argument("dominance_leq on weights of different rank");
    Int sl = 0, su = 0;
    for (std::size_t k = 1; k <= lower.rank(); ++k) {
        sl = checked_add(sl, lower.entry(k));
        su = checked_add(su, upper.entry(k));
        if (sl > su) return false;
    }
    return sl == su;
}

Weight omega(Int a, std::size_t i, std::size_t n) {
    if (i > n) throw std::invalid_argument("omega needs 0 <= i <= n");
    std::vector<Int> e(n, a);
    for (std::size_t k = 1; k <= i; ++k) e[n - i + k - 1] = checked_sub(a, static_cast<Int>(k));
    return Weight(std::move(e));
}

std::optional<OmegaShape> match_omega(const Weight& w) {
    const std::size_t n = w.rank();
    const Int a = w.entry(1);
    const Int span = checked_sub(a, w.entry(n));
    if (span < 0 || span > static_cast<Int>(n - 1)) return std::nullopt;
    const auto i = static_cast<std::size_t>(span);
    if (w != omega(a, i, n)) return std::nullopt;
    return OmegaShape{a, i};
}

OmegaShape canonicalize_omega(OmegaShape shape, std::size_t n) {
    if (shape.i == n) return OmegaShape{checked_sub(shape.a, 1), n - 1};
    return shape;
}

std::string_view Sector::name() const {
    static constexpr std::string_view names[2][2] = {{"F00", "F01"}, {"F10", "F11"}};
    return names[degree_parity][shifted_parity];
}

Sector sector_from_name(std::string_view name) {
    for (int dp = 0; dp < 2; ++dp)
        for (int sp = 0; sp < 2; ++sp)
            if (Sector{dp, sp}.name() == name) return Sector{dp, sp};
    throw std::invalid_argument("unknown sector name " + std::string(name));
}

ParityWeight::ParityWeight(Weight w, int eps) : weight(std::move(w)), parity(eps) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("parity must be 0 or 1");
}

std::string ParityWeight::to_string() const { return weight.to_string() + "|" + std::to_string(parity); }

std::size_t ParityWeightHash::operator()(const ParityWeight& pw) const noexcept {
    return WeightHash{}(pw.weight) * 2 + static_cast<std::size_t>(pw.parity);
}

Sector sector(const ParityWeight& pw) {
    const Int deg = degree(pw.weight);
    if (floor_mod(deg, 2) == 0) {
        return Sector{0, static_cast<int>(floor_mod(pw.parity - deg / 2, 2))};
    }
    return Sector{1, static_cast<int>(floor_mod(pw.parity - (deg - 1) / 2, 2))};
}

ParityWeight canonical_representative(Sector s, std::size_t n) {
    if (s.degree_parity == 0) return ParityWeight(Weight::constant(n, 0), s.shifted_parity);
    return ParityWeight(omega(0, 1, n), 1 - s.shifted_parity);
}

ParityWeight canonical_representative_of(const ParityWeight& pw) {
    return canonical_representative(sector(pw), pw.weight.rank());
}

namespace {

void fill_dominant(std::vector<Int>& prefix, std::size_t n, Int lo, Int upper, std::vector<Weight>& out) {
    if (prefix.size() == n) {
        out.emplace_back(prefix);
        return;
    }
    for (Int x = upper; x >= lo; --x) {
        prefix.push_back(x);
        fill_dominant(prefix, n, lo, x, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Weight> dominant_weights_in_box(std::size_t n, Int lo, Int hi) {
    std::vector<Weight> out;
    if (n < 2 || lo > hi) return out;
    std::vector<Int> prefix;
    fill_dominant(prefix, n, lo, hi, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace perilink
