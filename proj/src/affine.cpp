#include "perilink/affine.hpp"

#include <algorithm>
#include <limits>

namespace perilink {

namespace {

// Exponent of p in x, or -1 for x == 0.
int valuation(Int x, Int p) {
    if (x == 0) return -1;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

void check_reflection(const Reflection& r, std::size_t n) {
    if (!(1 <= r.i && r.i < r.j && r.j <= n))
        throw std::out_of_range("reflection needs 1 <= i < j <= n");
}

int defect(const Weight& w, Int p) {
    require_odd_prime(p);
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 1; i < w.rank(); ++i) {
        const int v = valuation(checked_add(checked_sub(w.entry(i), w.entry(i + 1)), 1), p);
        if (v >= 0) best = std::min(best, v);
    }
    if (best == std::numeric_limits<int>::max()) throw std::domain_error("defect is unbounded for " + w.to_string());
    return best;
}

Weight dot_reflect(const Weight& w, const Reflection& r, Int p) {
    check_reflection(r, w.rank());
    const Int x = checked_sub(d_interval(w, r.i, r.j), checked_mul(r.k, p));
    return w.transferred(r.i, r.j, checked_sub(0, x));
}

bool even_linked(const Weight& a, const Weight& b, Int p) {
    if (a.rank() != b.rank()) throw std::invalid_argument("even_linked on weights of different rank");
    if (!is_dominant(a) || !is_dominant(b)) throw std::invalid_argument("even_linked needs dominant weights");
    const int d = defect(a, p);
    if (defect(b, p) != d) return false;
    const Int modulus = checked_pow(p, d + 1);
    auto residues = [&](const Weight& w) {
        std::vector<Int> r;
        for (std::size_t i = 1; i <= w.rank(); ++i)
            r.push_back(floor_mod(checked_sub(w.entry(i), static_cast<Int>(i)), modulus));
        std::sort(r.begin(), r.end());
        return r;
    };
    return residues(a) == residues(b);
}

Int default_excursion_cap(const Weight& w, Int p) {
    return checked_add(d_interval(w, 1, w.rank()), checked_mul(2, p));
}

std::vector<EvenNeighbor> even_neighbors(const Weight& w, Int p, Int cap) {
    require_odd_prime(p);
    if (cap < 0) cap = default_excursion_cap(w, p);
    std::vector<EvenNeighbor> out;
    const std::size_t n = w.rank();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            const Int d = d_interval(w, i, j);
            // k p ranges over [d - cap, d + cap]
            const Int k_lo = -floor_div(checked_sub(cap, d), p);
            const Int k_hi = floor_div(checked_add(d, cap), p);
            for (Int k = k_lo; k <= k_hi; ++k) {
                Reflection r{i, j, k};
                Weight image = dot_reflect(w, r, p);
                if (image != w && is_dominant(image) && even_linked(w, image, p)) out.push_back({std::move(image), r});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const EvenNeighbor& x, const EvenNeighbor& y) {
        if (x.weight != y.weight) return x.weight < y.weight;
        return x.reflection < y.reflection;
    });
    return out;
}

}  // namespace perilink
