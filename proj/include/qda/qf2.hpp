#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "qda/interval.hpp"
#include "qda/rational.hpp"

namespace qda {

constexpr unsigned long kDefaultMaxBits = 4096;

/// Sign of sum(coef_i * sqrt(m_i)) with m_i squarefree positive (m = 1 marks a
/// rational term). Decided by recursive squaring with sign case analysis; a
/// certified-interval fallback with escalating precision handles sums where
/// squaring stops making progress (three or more distinct roots feeding back
/// into themselves). Straddling zero at max_bits raises undecidable_error.
int sqrtsum_sign(std::vector<std::pair<Rat, Int>> terms,
                 unsigned long max_bits = kDefaultMaxBits, int depth = 4);

/// Element a + b*sqrt(d) of a real quadratic field (d squarefree >= 1 under
/// the real embedding sqrt(d) > 0; d == 1 forces b == 0). Rationals embed as
/// d == 1. All arithmetic and sign decisions are exact.
struct qf2 {
    Rat a, b;
    Int d;

    qf2() : a(0), b(0), d(1) {}
    qf2(Rat r) : a(std::move(r)), b(0), d(1) {}
    qf2(long v) : a(v), b(0), d(1) {}
    qf2(int v) : a(v), b(0), d(1) {}

    static qf2 make(Rat a, Rat b, Int d) {
        if (d <= 0) throw std::domain_error("qf2: d must be positive");
        qf2 x;
        x.a = std::move(a);
        if (sgn(b) == 0) {
            x.b = 0;
            x.d = 1;
            return x;
        }
        auto [s, m] = squarefree_decompose(d);
        x.b = b * Rat(s);
        x.d = m;
        if (x.d == 1) {
            x.a += x.b;
            x.b = 0;
        }
        return x;
    }

    /// b * sqrt(d) with d not assumed squarefree.
    static qf2 pure_sqrt(Rat coef, Int d) { return make(Rat(0), std::move(coef), std::move(d)); }

    bool is_rational() const { return sgn(b) == 0; }
    const Rat& rat() const {
        if (!is_rational()) throw std::domain_error("qf2: not rational");
        return a;
    }
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

    DyadicInterval enclosure(unsigned long bits = 96) const {
        if (is_rational()) return DyadicInterval(a);
        DyadicInterval root = sqrt_enclosure(Rat(d), bits);
        return DyadicInterval(a) + DyadicInterval(b) * root;
    }

    double to_double() const { return a.get_d() + b.get_d() * std::sqrt(d.get_d()); }
};

inline int qf2_sign(const qf2& x) {
    if (x.is_rational()) return sgn(x.a);
    if (sgn(x.a) == 0) return sgn(x.b);
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d.
    Rat lhs = x.a * x.a, rhs = x.b * x.b * Rat(x.d);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

namespace detail {
// Common field for a binary operation; throws when the result would leave
// every quadratic field we can represent.
inline Int merge_d(const qf2& x, const qf2& y) {
    if (x.is_rational()) return y.d;
    if (y.is_rational()) return x.d;
    if (x.d == y.d) return x.d;
    throw std::domain_error("qf2: mixed radicands");
}
}  // namespace detail

inline qf2 operator+(const qf2& x, const qf2& y) {
    Int d = detail::merge_d(x, y);
    return qf2::make(x.a + y.a, x.b + y.b, d);
}
inline qf2 operator-(const qf2& x) { return qf2::make(-x.a, -x.b, x.d); }
inline qf2 operator-(const qf2& x, const qf2& y) { return x + (-y); }

inline qf2 operator*(const qf2& x, const qf2& y) {
    if (x.is_rational() || y.is_rational() || x.d == y.d) {
        Int d = detail::merge_d(x, y);
        return qf2::make(x.a * y.a + x.b * y.b * Rat(d), x.a * y.b + x.b * y.a, d);
    }
    // Pure roots with distinct radicands stay representable: sqrt(d1)*sqrt(d2).
    if (sgn(x.a) == 0 && sgn(y.a) == 0) return qf2::pure_sqrt(x.b * y.b, x.d * y.d);
    throw std::domain_error("qf2: product leaves the field");
}

inline qf2 inv(const qf2& x) {
    if (x.is_zero()) throw std::domain_error("qf2: division by zero");
    if (x.is_rational()) return qf2(Rat(1) / x.a);
    Rat norm = x.a * x.a - x.b * x.b * Rat(x.d);
    if (sgn(norm) == 0) throw std::domain_error("qf2: zero field norm");  // impossible for squarefree d > 1
    return qf2::make(x.a / norm, -x.b / norm, x.d);
}
inline qf2 operator/(const qf2& x, const qf2& y) { return x * inv(y); }

inline qf2& operator+=(qf2& x, const qf2& y) { return x = x + y; }
inline qf2& operator-=(qf2& x, const qf2& y) { return x = x - y; }
inline qf2& operator*=(qf2& x, const qf2& y) { return x = x * y; }
inline qf2& operator/=(qf2& x, const qf2& y) { return x = x / y; }

/// Exact three-way comparison, radicands may differ.
inline int cmp_qf2(const qf2& x, const qf2& y, unsigned long max_bits = kDefaultMaxBits) {
    if (x.d == y.d || x.is_rational() || y.is_rational()) {
        Int d = detail::merge_d(x, y);
        return qf2_sign(qf2::make(x.a - y.a, x.b - y.b, d));
    }
    return sqrtsum_sign({{x.a - y.a, Int(1)}, {x.b, x.d}, {-y.b, y.d}}, max_bits);
}

inline bool operator==(const qf2& x, const qf2& y) { return cmp_qf2(x, y) == 0; }
inline bool operator!=(const qf2& x, const qf2& y) { return cmp_qf2(x, y) != 0; }
inline bool operator<(const qf2& x, const qf2& y) { return cmp_qf2(x, y) < 0; }
inline bool operator<=(const qf2& x, const qf2& y) { return cmp_qf2(x, y) <= 0; }
inline bool operator>(const qf2& x, const qf2& y) { return cmp_qf2(x, y) > 0; }
inline bool operator>=(const qf2& x, const qf2& y) { return cmp_qf2(x, y) >= 0; }

inline qf2 abs_qf2(const qf2& x) { return qf2_sign(x) < 0 ? -x : x; }

/// Largest integer <= a + b*sqrt(d). Double hint, exact fixup.
inline Int floor_qf2(const qf2& x) {
    if (x.is_rational()) return floor_rat(x.a);
    double hint = x.to_double();
    Int m(static_cast<long>(std::floor(hint)));
    // x - m >= 0 and x - (m+1) < 0, adjusted exactly.
    while (qf2_sign(x - qf2(Rat(m))) < 0) --m;
    while (qf2_sign(x - qf2(Rat(m + 1))) >= 0) ++m;
    return m;
}
inline Int ceil_qf2(const qf2& x) { return -floor_qf2(-x); }

inline std::string qf2_str(const qf2& x) {
    if (x.is_rational()) return rat_str(x.a);
    std::string root = "sqrt(" + x.d.get_str() + ")";
    std::string bpart = (x.b == 1 ? root : (x.b == -1 ? "-" + root : rat_str(x.b) + "*" + root));
    if (sgn(x.a) == 0) return bpart;
    return rat_str(x.a) + (sgn(x.b) > 0 ? " + " : " - ") +
           (x.b == 1 || x.b == -1 ? root : rat_str(abs(x.b)) + "*" + root);
}

/// Exact sqrt of a nonnegative rational as coef*sqrt(m), m squarefree.
inline qf2 sqrt_rat_exact(const Rat& r) {
    if (sgn(r) < 0) throw std::domain_error("sqrt of negative rational");
    if (sgn(r) == 0) return qf2(Rat(0));
    // sqrt(p/q) = sqrt(p*q)/q.
    Int pq = r.get_num() * r.get_den();
    auto [s, m] = squarefree_decompose(pq);
    return qf2::make(Rat(0), rat_from(s, r.get_den()), m);
}

/// Exact sqrt of a qf2 value when representable in some quadratic field:
/// rational squares and pure-root squares only.
inline std::optional<qf2> sqrt_qf2_exact(const qf2& x) {
    int s = qf2_sign(x);
    if (s < 0) throw std::domain_error("sqrt of negative value");
    if (s == 0) return qf2(Rat(0));
    if (x.is_rational()) {
        try {
            return sqrt_rat_exact(x.a);
        } catch (const std::domain_error&) {
            return std::nullopt;  // factorization out of reach
        }
    }
    // sqrt(b*sqrt(d)) is degree 4 unless b*sqrt(d) happens to be a square of
    // r + s*sqrt(d); only the easy rational case is attempted here.
    return std::nullopt;
}

}  // namespace qda
