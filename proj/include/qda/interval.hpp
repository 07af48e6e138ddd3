#pragma once

#include <algorithm>
#include <string>

#include "qda/errors.hpp"
#include "qda/rational.hpp"

namespace qda {

/// Closed interval [lo, hi] with rational endpoints. Used only for certified
/// enclosures of square roots, k-th roots and operator norms; exact values
/// travel as Rat/qf2 wherever possible.
struct DyadicInterval {
    Rat lo, hi;

    DyadicInterval() : lo(0), hi(0) {}
    DyadicInterval(Rat v) : lo(v), hi(v) {}
    DyadicInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::domain_error("interval with lo > hi");
    }

    Rat width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& r) const { return lo <= r && r <= hi; }
    bool straddles_zero() const { return sgn(lo) < 0 && sgn(hi) > 0; }

    /// Sign if decided by the enclosure, else nullopt.
    std::optional<int> sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        if (sgn(lo) == 0 && sgn(hi) == 0) return 0;
        return std::nullopt;
    }
};

inline DyadicInterval operator+(const DyadicInterval& x, const DyadicInterval& y) {
    return {x.lo + y.lo, x.hi + y.hi};
}
inline DyadicInterval operator-(const DyadicInterval& x) { return {-x.hi, -x.lo}; }
inline DyadicInterval operator-(const DyadicInterval& x, const DyadicInterval& y) {
    return x + (-y);
}
inline DyadicInterval operator*(const DyadicInterval& x, const DyadicInterval& y) {
    Rat a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}
inline DyadicInterval interval_abs(const DyadicInterval& x) {
    if (sgn(x.lo) >= 0) return x;
    if (sgn(x.hi) <= 0) return -x;
    return {Rat(0), std::max(-x.lo, x.hi)};
}
inline DyadicInterval interval_max(const DyadicInterval& x, const DyadicInterval& y) {
    return {std::max(x.lo, y.lo), std::max(x.hi, y.hi)};
}
inline DyadicInterval interval_min(const DyadicInterval& x, const DyadicInterval& y) {
    return {std::min(x.lo, y.lo), std::min(x.hi, y.hi)};
}
inline DyadicInterval interval_inv(const DyadicInterval& x) {
    if (sgn(x.lo) <= 0 && sgn(x.hi) >= 0) throw std::domain_error("interval_inv across zero");
    return {Rat(1) / x.hi, Rat(1) / x.lo};
}
inline DyadicInterval interval_div(const DyadicInterval& x, const DyadicInterval& y) {
    return x * interval_inv(y);
}
inline DyadicInterval interval_pow(DyadicInterval x, unsigned long e) {
    DyadicInterval r{Rat(1), Rat(1)};
    for (; e; e >>= 1) {
        if (e & 1) r = r * x;
        x = x * x;
    }
    return r;
}

/// Certified enclosure of sqrt(r): lo^2 <= r <= hi^2 and hi - lo <= 2^-bits,
/// with dyadic endpoints (perfect squares collapse to a point).
inline DyadicInterval sqrt_enclosure(const Rat& r, unsigned long bits) {
    if (sgn(r) < 0) throw std::domain_error("sqrt_enclosure of negative rational");
    if (sgn(r) == 0) return DyadicInterval(Rat(0));
    if (auto s = is_square(r)) return DyadicInterval(*s);
    // m = floor(sqrt(r * 4^bits)) gives [m, m+1] / 2^bits.
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2 * bits);
    Rat scaled = r * Rat(scale);
    Int fl = floor_rat(scaled);
    Int m;
    mpz_sqrt(m.get_mpz_t(), fl.get_mpz_t());
    while (Rat((m + 1) * (m + 1)) <= scaled) ++m;
    Int denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, bits);
    return {rat_from(m, denom), rat_from(m + 1, denom)};
}

inline DyadicInterval interval_sqrt(const DyadicInterval& x, unsigned long bits) {
    if (sgn(x.lo) < 0) throw std::domain_error("interval_sqrt of negative interval");
    return {sqrt_enclosure(x.lo, bits).lo, sqrt_enclosure(x.hi, bits).hi};
}

/// Enclosure of r^(1/k) for r >= 0 by dyadic bisection, width <= 2^-bits.
inline DyadicInterval root_enclosure(const Rat& r, unsigned long k, unsigned long bits) {
    if (k == 0) throw std::domain_error("zeroth root");
    if (sgn(r) < 0) throw std::domain_error("root_enclosure of negative rational");
    if (k == 1) return DyadicInterval(r);
    if (k == 2) return sqrt_enclosure(r, bits);
    if (sgn(r) == 0) return DyadicInterval(Rat(0));
    // Exact k-th root if r = (p/q)^k.
    {
        Int n, d;
        if (mpz_root(n.get_mpz_t(), r.get_num_mpz_t(), k) != 0 &&
            mpz_root(d.get_mpz_t(), r.get_den_mpz_t(), k) != 0)
            return DyadicInterval(rat_from(n, d));
    }
    Rat lo(0), hi = std::max(Rat(1), r);
    auto pow_k = [&](const Rat& x) {
        Rat p(1);
        for (unsigned long i = 0; i < k; ++i) p *= x;
        return p;
    };
    Rat target_width = rat_from(1, Int(1) << std::min<unsigned long>(bits, 62));
    if (bits > 62) {
        Int denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 2, bits);
        target_width = rat_from(1, denom);
    }
    while (hi - lo > target_width) {
        Rat mid = (lo + hi) / 2;
        if (pow_k(mid) <= r)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

inline DyadicInterval interval_root(const DyadicInterval& x, unsigned long k, unsigned long bits) {
    return {root_enclosure(x.lo, k, bits).lo, root_enclosure(x.hi, k, bits).hi};
}

inline std::string interval_str(const DyadicInterval& x) {
    if (x.is_point()) return rat_str(x.lo);
    return "[" + rat_str(x.lo) + ", " + rat_str(x.hi) + "]";
}

}  // namespace qda
