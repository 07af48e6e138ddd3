#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qda {

using Int = mpz_class;
using Rat = mpq_class;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat_from(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p". No decimal floats: exactness is part of the contract.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw parse_error("bad rational literal: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() <= 0) throw parse_error("nonpositive denominator: " + s);
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

/// Exact rational square root: s with s*s == r and s >= 0, when it exists.
inline std::optional<Rat> is_square(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (sgn(r) == 0) return Rat(0);
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return std::nullopt;
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    return rat_from(n, d);
}

/// p-adic valuation of a nonzero rational; v_p(num) - v_p(den).
inline long val_p(const Rat& r, const Int& p) {
    if (sgn(r) == 0) throw std::domain_error("valuation of zero");
    Int tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), r.get_num_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), r.get_den_mpz_t(), p.get_mpz_t()));
    return vn - vd;
}

/// |r|_p with the normalization |p|_p = 1/p. |0|_p = 0.
inline Rat abs_p(const Rat& r, const Int& p) {
    if (sgn(r) == 0) return Rat(0);
    long v = val_p(r, p);
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
    return v >= 0 ? rat_from(1, pk) : Rat(pk);
}

/// Primes dividing n (trial division; desk-scale inputs). Throws if a cofactor
/// above the trial bound remains composite-or-unknown.
inline std::vector<Int> prime_factors(Int n, unsigned long trial_bound = 1000000) {
    std::vector<Int> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (unsigned long p = 2; p <= trial_bound && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        if (n % p == 0) {
            out.emplace_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw std::domain_error("prime_factors: composite cofactor beyond trial bound");
        out.push_back(n);
    }
    return out;
}

/// n = s^2 * m with m squarefree; returns (s, m). Partial factorizations are
/// rejected the same way as prime_factors.
inline std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n <= 0) throw std::domain_error("squarefree_decompose: need n > 0");
    Int s = 1, m = 1, rest = n;
    for (unsigned long p = 2; Int(p) * p <= rest && p <= 1000000; p = (p == 2 ? 3 : p + 2)) {
        if (rest % p == 0) {
            unsigned long e = 0;
            while (rest % p == 0) { rest /= p; ++e; }
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), Int(p).get_mpz_t(), e / 2);
            s *= pk;
            if (e % 2) m *= p;
        }
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            s *= r;
        } else if (mpz_probab_prime_p(rest.get_mpz_t(), 40) != 0) {
            m *= rest;
        } else {
            throw std::domain_error("squarefree_decompose: cofactor beyond trial bound");
        }
    }
    return {s, m};
}

}  // namespace qda
