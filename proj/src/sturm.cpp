#include "qda/sturm.hpp"

#include <algorithm>

namespace qda {

qf2 poly_eval(const PolyQ2& p, const qf2& x) {
    qf2 acc(Rat(0));
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

PolyQ2 poly_derivative(const PolyQ2& p) {
    PolyQ2 d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * qf2(Rat(static_cast<long>(i))));
    poly_trim(d);
    return d;
}

PolyQ2 poly_rem(PolyQ2 a, const PolyQ2& b) {
    poly_trim(a);
    if (b.empty()) throw std::domain_error("poly_rem: division by zero polynomial");
    qf2 lead_inv = inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        qf2 f = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

PolyQ2 poly_gcd(PolyQ2 a, PolyQ2 b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        PolyQ2 r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        qf2 li = inv(a.back());
        for (auto& c : a) c *= li;
    }
    return a;
}

PolyQ2 squarefree_part(const PolyQ2& p) {
    PolyQ2 g = poly_gcd(p, poly_derivative(p));
    if (poly_degree(g) <= 0) return p;
    // Exact division p / g.
    PolyQ2 a = p, q(p.size() - g.size() + 1, qf2(Rat(0)));
    qf2 li = inv(g.back());
    while (a.size() >= g.size() && !a.empty()) {
        qf2 f = a.back() * li;
        size_t shift = a.size() - g.size();
        q[shift] = f;
        for (size_t i = 0; i < g.size(); ++i) a[shift + i] -= f * g[i];
        a.pop_back();
        poly_trim(a);
    }
    return q;
}

namespace {

// Rational upper bound on |c| for a qf2 coefficient.
Rat abs_bound(const qf2& c) {
    Rat r = abs(c.a);
    if (!c.is_rational()) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), c.d.get_mpz_t());
        r += abs(c.b) * Rat(s + 1);
    }
    return r;
}

std::vector<PolyQ2> sturm_chain(const PolyQ2& p) {
    std::vector<PolyQ2> chain{p, poly_derivative(p)};
    while (!chain.back().empty() && poly_degree(chain.back()) > 0) {
        PolyQ2 r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations(const std::vector<PolyQ2>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        if (q.empty()) continue;
        int s = qf2_sign(poly_eval(q, qf2(x)));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Rational roots of a rational-coefficient polynomial; deflates them out of p.
std::vector<Rat> extract_rational_roots(PolyQ2& p) {
    std::vector<Rat> roots;
    for (const auto& c : p)
        if (!c.is_rational()) return roots;
    // Root at 0.
    while (p.size() > 1 && p.front().is_zero()) {
        if (roots.empty() || roots.back() != 0) roots.emplace_back(0);
        p.erase(p.begin());
    }
    if (p.size() <= 1) return roots;
    // Scale to a primitive integer polynomial.
    Int den(1);
    for (const auto& c : p) {
        Int g, d = c.a.get_den();
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<Int> z;
    for (const auto& c : p) z.push_back(Rat(c.a * Rat(den)).get_num());
    std::vector<Int> num_divs, den_divs;
    try {
        auto divisors = [](const Int& n) {
            std::vector<Int> divs{Int(1)};
            for (const auto& pr : prime_factors(n)) {
                size_t cur = divs.size();
                Int pk = pr;
                Int m = abs(n);
                while (m % pr == 0) {
                    for (size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pk);
                    pk *= pr;
                    m /= pr;
                }
            }
            std::sort(divs.begin(), divs.end());
            divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
            return divs;
        };
        num_divs = divisors(z.front());
        den_divs = divisors(z.back());
    } catch (const std::domain_error&) {
        return roots;  // factorization out of reach; enclosures still certify
    }
    if (num_divs.size() * den_divs.size() > 20000) return roots;
    for (const auto& pn : num_divs)
        for (const auto& pd : den_divs)
            for (int s : {1, -1}) {
                Rat cand = rat_from(s * pn, pd);
                bool again = true;
                while (again && p.size() > 1 && poly_eval(p, qf2(cand)).is_zero()) {
                    if (roots.empty() || roots.back() != cand) roots.push_back(cand);
                    // Deflate by (x - cand).
                    PolyQ2 q(p.size() - 1, qf2(Rat(0)));
                    qf2 carry(Rat(0));
                    for (size_t i = p.size(); i-- > 1;) {
                        carry = p[i] + carry * qf2(cand);
                        q[i - 1] = carry;
                    }
                    p = std::move(q);
                    again = p.size() > 1;
                }
            }
    return roots;
}

}  // namespace

RootEnclosures isolate_real_roots(PolyQ2 p, unsigned long bits) {
    RootEnclosures out;
    poly_trim(p);
    if (poly_degree(p) <= 0) return out;
    p = squarefree_part(p);
    for (const Rat& r : extract_rational_roots(p)) out.exact.push_back(r);
    std::sort(out.exact.begin(), out.exact.end());
    poly_trim(p);
    if (poly_degree(p) <= 0) return out;

    Rat bound(1);
    for (size_t i = 0; i + 1 < p.size(); ++i)
        bound = std::max(bound, abs_bound(p[i] / p.back()));
    bound += 1;
    while (poly_eval(p, qf2(bound)).is_zero() || poly_eval(p, qf2(-bound)).is_zero()) bound += 1;

    auto chain = sturm_chain(p);
    Int denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, bits);
    Rat target = rat_from(1, denom);

    // (lo, hi] intervals with their Sturm counts.
    std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int count = variations(chain, lo) - variations(chain, hi);
        if (count <= 0) continue;
        if (count == 1) {
            // Refine a simple root by sign bisection.
            Rat a = lo, b = hi;
            int sa = qf2_sign(poly_eval(p, qf2(a)));
            while (b - a > target) {
                Rat mid = (a + b) / 2;
                int sm = qf2_sign(poly_eval(p, qf2(mid)));
                if (sm == 0) {
                    out.exact.push_back(mid);
                    goto next_interval;
                }
                if (sm == sa)
                    a = mid;
                else
                    b = mid;
            }
            out.intervals.emplace_back(a, b);
        next_interval:;
            continue;
        }
        Rat mid = (lo + hi) / 2;
        if (poly_eval(p, qf2(mid)).is_zero()) {
            out.exact.push_back(mid);
            // Nudge the split point off the root; roots are isolated, so a
            // small shift keeps counts exact.
            Rat eps = (hi - lo) / 1024;
            while (poly_eval(p, qf2(mid + eps)).is_zero() ||
                   poly_eval(p, qf2(mid - eps)).is_zero())
                eps /= 2;
            stack.emplace_back(lo, mid - eps);
            stack.emplace_back(mid + eps, hi);
        } else {
            stack.emplace_back(lo, mid);
            stack.emplace_back(mid, hi);
        }
    }
    std::sort(out.exact.begin(), out.exact.end());
    out.exact.erase(std::unique(out.exact.begin(), out.exact.end()), out.exact.end());
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const DyadicInterval& x, const DyadicInterval& y) { return x.lo < y.lo; });
    return out;
}

}  // namespace qda
