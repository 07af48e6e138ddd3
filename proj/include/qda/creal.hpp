#pragma once

#include <functional>
#include <memory>

#include "qda/interval.hpp"
#include "qda/qf2.hpp"

namespace qda {

/// Certified real number: a small expression DAG evaluated to dyadic
/// enclosures at any requested precision. Values that stay inside a real
/// quadratic field carry an exact qf2 representation alongside, so
/// comparisons are decided exactly whenever the algebra allows and by
/// interval escalation (hard cap, then undecidable_error) otherwise.
class creal {
  public:
    struct node;  // opaque

    creal() : creal(Rat(0)) {}
    creal(Rat r);
    creal(qf2 v);
    creal(long v) : creal(Rat(v)) {}

    /// Leaf computed on demand (eigenvalue enclosures and the like).
    static creal from_fn(std::function<DyadicInterval(unsigned long)> fn,
                         std::optional<qf2> exact = std::nullopt);

    friend creal operator+(const creal& x, const creal& y);
    friend creal operator-(const creal& x, const creal& y);
    friend creal operator*(const creal& x, const creal& y);
    friend creal operator/(const creal& x, const creal& y);

    static creal sqrt(const creal& x);
    static creal root(const creal& x, unsigned long k);
    static creal pow(const creal& x, unsigned long e);
    static creal max(const creal& x, const creal& y);
    static creal min(const creal& x, const creal& y);
    static creal abs(const creal& x);

    DyadicInterval eval(unsigned long bits) const;
    const std::optional<qf2>& exact() const { return exact_; }

    /// Three-way comparison; 0 is only returned when equality is certain.
    int cmp(const creal& y, unsigned long max_bits = kDefaultMaxBits) const;
    bool leq(const creal& y, unsigned long max_bits = kDefaultMaxBits) const;
    bool less(const creal& y, unsigned long max_bits = kDefaultMaxBits) const;

    /// Exact string when available, else an enclosure at default precision.
    std::string str() const;

    double to_double() const;

  private:
    creal(std::shared_ptr<const node> n, std::optional<qf2> e)
        : node_(std::move(n)), exact_(std::move(e)) {}

    static creal make(int kind, const creal* x, const creal* y, std::optional<qf2> exact,
                      unsigned long arg = 0,
                      std::function<DyadicInterval(unsigned long)> fn = {});

    std::shared_ptr<const node> node_;
    std::optional<qf2> exact_;
};

}  // namespace qda
