#include "qda/creal.hpp"

namespace qda {

namespace {
enum kind_t {
    k_leaf_qf2,
    k_leaf_fn,
    k_add,
    k_sub,
    k_mul,
    k_div,
    k_sqrt,
    k_root,
    k_pow,
    k_max,
    k_min,
    k_abs,
};
}

struct creal::node {
    int kind;
    qf2 value;
    std::function<DyadicInterval(unsigned long)> fn;
    std::shared_ptr<const node> lhs, rhs;
    unsigned long arg = 0;
};

creal::creal(Rat r) : creal(qf2(std::move(r))) {}

creal::creal(qf2 v) {
    auto n = std::make_shared<node>();
    n->kind = k_leaf_qf2;
    n->value = v;
    node_ = std::move(n);
    exact_ = std::move(v);
}

creal creal::make(int kind, const creal* x, const creal* y, std::optional<qf2> exact,
                  unsigned long arg, std::function<DyadicInterval(unsigned long)> fn) {
    auto n = std::make_shared<node>();
    n->kind = kind;
    if (x) n->lhs = x->node_;
    if (y) n->rhs = y->node_;
    n->arg = arg;
    n->fn = std::move(fn);
    if (exact) {
        n->kind = k_leaf_qf2;
        n->value = *exact;
        n->lhs.reset();
        n->rhs.reset();
        n->fn = nullptr;
    }
    return creal(std::move(n), std::move(exact));
}

creal creal::from_fn(std::function<DyadicInterval(unsigned long)> fn, std::optional<qf2> exact) {
    return make(k_leaf_fn, nullptr, nullptr, std::move(exact), 0, std::move(fn));
}

namespace {
template <class F>
std::optional<qf2> try_exact(F&& f) {
    try {
        return f();
    } catch (const std::domain_error&) {
        return std::nullopt;  // left the quadratic field
    } catch (const undecidable_error&) {
        return std::nullopt;
    }
}
}  // namespace

creal operator+(const creal& x, const creal& y) {
    std::optional<qf2> e;
    if (x.exact() && y.exact()) e = try_exact([&] { return *x.exact() + *y.exact(); });
    return creal::make(k_add, &x, &y, std::move(e));
}
creal operator-(const creal& x, const creal& y) {
    std::optional<qf2> e;
    if (x.exact() && y.exact()) e = try_exact([&] { return *x.exact() - *y.exact(); });
    return creal::make(k_sub, &x, &y, std::move(e));
}
creal operator*(const creal& x, const creal& y) {
    std::optional<qf2> e;
    if (x.exact() && y.exact()) e = try_exact([&] { return *x.exact() * *y.exact(); });
    return creal::make(k_mul, &x, &y, std::move(e));
}
creal operator/(const creal& x, const creal& y) {
    std::optional<qf2> e;
    if (x.exact() && y.exact()) e = try_exact([&] { return *x.exact() / *y.exact(); });
    return creal::make(k_div, &x, &y, std::move(e));
}

creal creal::sqrt(const creal& x) {
    std::optional<qf2> e;
    if (x.exact()) {
        try {
            e = sqrt_qf2_exact(*x.exact());
        } catch (const std::domain_error&) {
        }
    }
    return make(k_sqrt, &x, nullptr, std::move(e));
}

creal creal::root(const creal& x, unsigned long k) {
    if (k == 0) throw std::domain_error("creal: zeroth root");
    if (k == 1) return x;
    if (k == 2) return sqrt(x);
    std::optional<qf2> e;
    if (x.exact() && x.exact()->is_rational()) {
        const Rat& r = x.exact()->rat();
        if (sgn(r) == 0) {
            e = qf2(Rat(0));
        } else if (sgn(r) > 0) {
            Int n, d;
            if (mpz_root(n.get_mpz_t(), r.get_num_mpz_t(), k) != 0 &&
                mpz_root(d.get_mpz_t(), r.get_den_mpz_t(), k) != 0)
                e = qf2(rat_from(n, d));
        }
    }
    return make(k_root, &x, nullptr, std::move(e), k);
}

creal creal::pow(const creal& x, unsigned long e) {
    std::optional<qf2> ex;
    if (x.exact())
        ex = try_exact([&] {
            qf2 acc(Rat(1));
            for (unsigned long i = 0; i < e; ++i) acc *= *x.exact();
            return acc;
        });
    return make(k_pow, &x, nullptr, std::move(ex), e);
}

creal creal::max(const creal& x, const creal& y) {
    std::optional<qf2> e;
    if (x.exact() && y.exact())
        e = try_exact(
            [&] { return cmp_qf2(*x.exact(), *y.exact()) >= 0 ? *x.exact() : *y.exact(); });
    return make(k_max, &x, &y, std::move(e));
}
creal creal::min(const creal& x, const creal& y) {
    std::optional<qf2> e;
    if (x.exact() && y.exact())
        e = try_exact(
            [&] { return cmp_qf2(*x.exact(), *y.exact()) <= 0 ? *x.exact() : *y.exact(); });
    return make(k_min, &x, &y, std::move(e));
}
creal creal::abs(const creal& x) {
    std::optional<qf2> e;
    if (x.exact()) e = try_exact([&] { return abs_qf2(*x.exact()); });
    return make(k_abs, &x, nullptr, std::move(e));
}

namespace {

DyadicInterval eval_node(const creal::node& n, unsigned long bits);

DyadicInterval eval_child(const std::shared_ptr<const creal::node>& c, unsigned long bits) {
    return eval_node(*c, bits);
}

DyadicInterval eval_node(const creal::node& n, unsigned long bits) {
    unsigned long inner = bits + 16;
    switch (n.kind) {
        case k_leaf_qf2:
            return n.value.enclosure(bits);
        case k_leaf_fn:
            return n.fn(bits);
        case k_add:
            return eval_child(n.lhs, inner) + eval_child(n.rhs, inner);
        case k_sub:
            return eval_child(n.lhs, inner) - eval_child(n.rhs, inner);
        case k_mul:
            return eval_child(n.lhs, inner) * eval_child(n.rhs, inner);
        case k_div:
            return interval_div(eval_child(n.lhs, inner), eval_child(n.rhs, inner));
        case k_sqrt:
            return interval_sqrt(eval_child(n.lhs, inner), bits);
        case k_root:
            return interval_root(eval_child(n.lhs, inner), n.arg, bits);
        case k_pow:
            return interval_pow(eval_child(n.lhs, inner), n.arg);
        case k_max:
            return interval_max(eval_child(n.lhs, inner), eval_child(n.rhs, inner));
        case k_min:
            return interval_min(eval_child(n.lhs, inner), eval_child(n.rhs, inner));
        case k_abs:
            return interval_abs(eval_child(n.lhs, inner));
    }
    throw std::logic_error("creal: bad node kind");
}

}  // namespace

DyadicInterval creal::eval(unsigned long bits) const {
    if (exact_) return exact_->enclosure(bits);
    return eval_node(*node_, bits);
}

int creal::cmp(const creal& y, unsigned long max_bits) const {
    if (exact_ && y.exact_) return cmp_qf2(*exact_, *y.exact_, max_bits);
    for (unsigned long bits = 64; bits <= max_bits; bits *= 2) {
        DyadicInterval a = eval(bits), b = y.eval(bits);
        if (a.hi < b.lo) return -1;
        if (a.lo > b.hi) return 1;
        if (a.is_point() && b.is_point() && a.lo == b.lo) return 0;
    }
    throw undecidable_error("creal comparison undecidable at precision cap");
}

bool creal::leq(const creal& y, unsigned long max_bits) const {
    if (exact_ && y.exact_) return cmp_qf2(*exact_, *y.exact_, max_bits) <= 0;
    for (unsigned long bits = 64; bits <= max_bits; bits *= 2) {
        DyadicInterval a = eval(bits), b = y.eval(bits);
        if (a.hi <= b.lo) return true;
        if (a.lo > b.hi) return false;
    }
    throw undecidable_error("creal comparison undecidable at precision cap");
}

bool creal::less(const creal& y, unsigned long max_bits) const {
    if (exact_ && y.exact_) return cmp_qf2(*exact_, *y.exact_, max_bits) < 0;
    for (unsigned long bits = 64; bits <= max_bits; bits *= 2) {
        DyadicInterval a = eval(bits), b = y.eval(bits);
        if (a.hi < b.lo) return true;
        if (a.lo >= b.hi) return false;
    }
    throw undecidable_error("creal comparison undecidable at precision cap");
}

std::string creal::str() const {
    if (exact_) return qf2_str(*exact_);
    return interval_str(eval(96));
}

double creal::to_double() const {
    if (exact_) return exact_->to_double();
    DyadicInterval iv = eval(64);
    return (iv.lo.get_d() + iv.hi.get_d()) / 2;
}

}  // namespace qda
