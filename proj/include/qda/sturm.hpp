#pragma once

#include <vector>

#include "qda/interval.hpp"
#include "qda/qf2.hpp"

namespace qda {

// Polynomials stored dense, coeff[i] multiplies x^i.
using PolyQ = std::vector<Rat>;
using PolyQ2 = std::vector<qf2>;

inline void poly_trim(PolyQ2& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline long poly_degree(const PolyQ2& p) { return static_cast<long>(p.size()) - 1; }

qf2 poly_eval(const PolyQ2& p, const qf2& x);
PolyQ2 poly_derivative(const PolyQ2& p);
// Remainder of a by b over the field (exact division by the leading coeff).
PolyQ2 poly_rem(PolyQ2 a, const PolyQ2& b);
PolyQ2 poly_gcd(PolyQ2 a, PolyQ2 b);
PolyQ2 squarefree_part(const PolyQ2& p);

/// Distinct real roots of p: exact rational ones plus disjoint certified
/// enclosures (width <= 2^-bits) for the rest. Rational-coefficient inputs
/// get a rational-root extraction pass first, so integer spectra come out
/// exact (width 0).
struct RootEnclosures {
    std::vector<Rat> exact;
    std::vector<DyadicInterval> intervals;
};

RootEnclosures isolate_real_roots(PolyQ2 p, unsigned long bits);

}  // namespace qda
