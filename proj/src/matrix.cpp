#include "qda/matrix.hpp"

namespace qda {

Rat det_bareiss(const Mat<Rat>& m) {
    if (m.rows != m.cols) throw std::domain_error("det of non-square matrix");
    size_t n = m.rows;
    if (n == 0) return Rat(1);
    Int scale(1);
    for (const auto& x : m.a) {
        Int d = x.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
        scale = scale / g * d;
    }
    Mat<Int> w(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat e = m(i, j) * Rat(scale);
            w(i, j) = e.get_num();  // exact integer after scaling
        }
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && w(piv, k) == 0) ++piv;
            if (piv == n) return Rat(0);
            for (size_t j = 0; j < n; ++j) std::swap(w(piv, j), w(k, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                w(i, j) = num / prev;  // exact division (Bareiss)
            }
        prev = w(k, k);
    }
    Int det_scaled = w(n - 1, n - 1) * sign;
    Int denom;
    mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), n);
    return rat_from(det_scaled, denom);
}

Mat<qf2> to_qf2(const Mat<Rat>& m) {
    Mat<qf2> out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = qf2(m.a[i]);
    return out;
}

std::vector<qf2> to_qf2(const std::vector<Rat>& v) {
    std::vector<qf2> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

}  // namespace qda
