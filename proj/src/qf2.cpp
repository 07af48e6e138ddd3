#include "qda/qf2.hpp"

#include <algorithm>
#include <map>

namespace qda {

namespace {

// Two-term case: sign of c1*sqrt(m1) + c2*sqrt(m2), distinct m's.
int two_term_sign(const Rat& c1, const Int& m1, const Rat& c2, const Int& m2) {
    int s1 = sgn(c1), s2 = sgn(c2);
    if (s1 == 0) return s2;
    if (s2 == 0) return s1;
    if (s1 == s2) return s1;
    Rat lhs = c1 * c1 * Rat(m1), rhs = c2 * c2 * Rat(m2);
    if (lhs == rhs) return 0;
    return lhs > rhs ? s1 : s2;
}

}  // namespace

int sqrtsum_sign(std::vector<std::pair<Rat, Int>> terms, unsigned long max_bits, int depth) {
    // Normalize radicands and merge equal ones.
    std::map<Int, Rat> merged;
    for (auto& [c, m] : terms) {
        if (sgn(c) == 0) continue;
        auto [s, sf] = squarefree_decompose(m);
        merged[sf] += c * Rat(s);
    }
    std::vector<std::pair<Rat, Int>> t;
    for (auto& [m, c] : merged)
        if (sgn(c) != 0) t.emplace_back(c, m);

    if (t.empty()) return 0;
    if (t.size() == 1) return sgn(t[0].first);
    if (t.size() == 2) return two_term_sign(t[0].first, t[0].second, t[1].first, t[1].second);

    if (depth > 0) {
        // Split in half and compare squares; cross products keep radicands
        // squarefree through the recursion.
        size_t half = t.size() / 2;
        std::vector<std::pair<Rat, Int>> A(t.begin(), t.begin() + half),
            B(t.begin() + half, t.end());
        for (auto& [c, m] : B) c = -c;  // sign(A - (-B)) with B negated: A + B = A - (B')
        int sa = sqrtsum_sign(A, max_bits, depth - 1);
        int sb = sqrtsum_sign(B, max_bits, depth - 1);  // sign of -(tail)
        // Original sum = A - B' where B' = -tail has sign sb.
        if (sa == 0) return -sb;
        if (sb == 0) return sa;
        if (sa != sb) return sa;  // A and -B' strict opposite... A > 0 > B' means A - B' > 0
        // Same sign: compare squares of A and B'.
        auto square = [](const std::vector<std::pair<Rat, Int>>& v) {
            std::vector<std::pair<Rat, Int>> sq;
            for (size_t i = 0; i < v.size(); ++i) {
                sq.emplace_back(v[i].first * v[i].first * Rat(v[i].second), Int(1));
                for (size_t j = i + 1; j < v.size(); ++j)
                    sq.emplace_back(2 * v[i].first * v[j].first, v[i].second * v[j].second);
            }
            return sq;
        };
        auto diff = square(A);
        for (auto& [c, m] : square(B)) diff.emplace_back(-c, m);
        int sq_cmp = sqrtsum_sign(diff, max_bits, depth - 1);
        if (sq_cmp == 0) return 0;
        return sq_cmp > 0 ? sa : -sa;
    }

    // Interval fallback with escalating precision.
    for (unsigned long bits = 64; bits <= max_bits; bits *= 2) {
        DyadicInterval acc{Rat(0), Rat(0)};
        for (auto& [c, m] : t) acc = acc + DyadicInterval(c) * sqrt_enclosure(Rat(m), bits);
        if (auto s = acc.sign()) return *s;
    }
    throw undecidable_error("sqrtsum_sign: undecidable at precision cap");
}

}  // namespace qda
