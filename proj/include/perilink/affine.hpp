#pragma once

#include <utility>
#include <vector>

#include "perilink/weight.hpp"

namespace perilink {

// Affine reflection along e_i - e_j at level k*p, with 1 <= i < j <= n.
struct Reflection {
    std::size_t i = 0;
    std::size_t j = 0;
    Int k = 0;

    friend bool operator==(const Reflection&, const Reflection&) = default;
    friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

// Throws std::out_of_range unless 1 <= i < j <= n.
void check_reflection(const Reflection& r, std::size_t n);

// Largest d with w_i - w_(i+1) == -1 (mod p^d) for every 1 <= i < n.
// Throws std::domain_error when the congruence holds for every d, which only
// happens for weights increasing by one at each step.
int defect(const Weight& w, Int p);

// Dot action: x = d_{i,j}(w) - k*p is taken from position i and given to j.
Weight dot_reflect(const Weight& w, const Reflection& r, Int p);

// Same defect d, and the residues (w_i - i) mod p^(d+1) agree as multisets.
bool even_linked(const Weight& a, const Weight& b, Int p);

// Default bound on |d_{i,j} - k p| for generated reflections.
Int default_excursion_cap(const Weight& w, Int p);

struct EvenNeighbor {
    Weight weight;
    Reflection reflection;
};

// Dominant images of w under reflections with |d_{i,j}(w) - k p| <= cap,
// excluding w itself, sorted by (weight, reflection). cap < 0 selects the default.
// Images that fail even_linked are dropped: a reflection can change the
// defect, e.g. (2,0) -> (5,-3) at p = 3.
std::vector<EvenNeighbor> even_neighbors(const Weight& w, Int p, Int cap = -1);

}  // namespace perilink
