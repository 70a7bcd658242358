#pragma once

#include <stdexcept>
#include <vector>

namespace parkstat {

// Truncated formal power series in z over an exact coefficient ring C.
// `order` is the largest retained power; arithmetic on mixed orders truncates
// to the minimum and records it in the result.
template <class C>
struct TruncSeries {
    int order = 0;
    std::vector<C> a;

    TruncSeries() : order(0), a(1, C(0)) {}
    explicit TruncSeries(int n) : order(n), a(n + 1, C(0)) {
        if (n < 0) throw std::invalid_argument("TruncSeries: negative order");
    }

    static TruncSeries z(int n) {
        TruncSeries s(n);
        if (n >= 1) s.a[1] = C(1);
        return s;
    }

    static TruncSeries constant(int n, C v) {
        TruncSeries s(n);
        s.a[0] = std::move(v);
        return s;
    }

    const C& operator[](int i) const { return a[i]; }
    C& operator[](int i) { return a[i]; }

    TruncSeries truncated(int n) const {
        if (n >= order) return *this;
        TruncSeries s(n);
        for (int i = 0; i <= n; ++i) s.a[i] = a[i];
        return s;
    }

    TruncSeries operator+(const TruncSeries& o) const {
        int n = std::min(order, o.order);
        TruncSeries s(n);
        for (int i = 0; i <= n; ++i) s.a[i] = a[i] + o.a[i];
        return s;
    }

    TruncSeries operator-() const {
        TruncSeries s = *this;
        for (auto& v : s.a) v = -v;
        return s;
    }

    TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }

    TruncSeries operator*(const TruncSeries& o) const {
        int n = std::min(order, o.order);
        TruncSeries s(n);
        for (int i = 0; i <= n; ++i) {
            if (a[i] == C(0)) continue;
            for (int j = 0; i + j <= n; ++j) s.a[i + j] = s.a[i + j] + a[i] * o.a[j];
        }
        return s;
    }

    TruncSeries operator*(const C& v) const {
        TruncSeries s = *this;
        for (auto& x : s.a) x = x * v;
        return s;
    }

    bool operator==(const TruncSeries& o) const {
        int n = std::min(order, o.order);
        for (int i = 0; i <= n; ++i)
            if (!(a[i] == o.a[i])) return false;
        return true;
    }

    // index of the first differing coefficient, or -1 when equal (up to the
    // common order)
    int first_mismatch(const TruncSeries& o) const {
        int n = std::min(order, o.order);
        for (int i = 0; i <= n; ++i)
            if (!(a[i] == o.a[i])) return i;
        return -1;
    }

    // this(inner(z)); inner must have zero constant term
    TruncSeries compose(const TruncSeries& inner) const {
        if (!(inner.a[0] == C(0)))
            throw std::invalid_argument("TruncSeries::compose: inner constant term must vanish");
        int n = std::min(order, inner.order);
        TruncSeries in = inner.truncated(n);
        TruncSeries r = constant(n, C(0));
        for (int i = std::min(order, n); i >= 0; --i) {
            r = r * in;
            r.a[0] = r.a[0] + a[i];
        }
        return r;
    }

    TruncSeries derivative() const {
        if (order == 0) return TruncSeries(0);
        TruncSeries s(order - 1);
        for (int i = 1; i <= order; ++i) s.a[i - 1] = a[i] * C(i);
        return s;
    }

    // multiply by z^k; the result order grows by k (exact, nothing is lost)
    TruncSeries shifted(int k) const {
        TruncSeries s(order + k);
        for (int i = 0; i <= order; ++i) s.a[i + k] = a[i];
        return s;
    }

    // multiplicative inverse; requires unit constant term a[0] == 1
    TruncSeries inverse() const {
        if (!(a[0] == C(1)))
            throw std::invalid_argument("TruncSeries::inverse: constant term must be 1");
        TruncSeries s(order);
        s.a[0] = C(1);
        for (int m = 1; m <= order; ++m) {
            C acc(0);
            for (int k = 1; k <= m; ++k) acc = acc + a[k] * s.a[m - k];
            s.a[m] = -acc;
        }
        return s;
    }

    // compositional inverse Q with Q(this) = z; requires a[0] = 0 and a[1]
    // invertible (C a field)
    TruncSeries compositional_inverse() const {
        if (!(a[0] == C(0)))
            throw std::invalid_argument("compositional_inverse: constant term must vanish");
        if (a[1] == C(0))
            throw std::invalid_argument("compositional_inverse: linear coefficient must be invertible");
        int n = order;
        TruncSeries q(n);
        std::vector<TruncSeries> pow;  // this^k for k = 0..n
        pow.push_back(constant(n, C(1)));
        for (int k = 1; k <= n; ++k) pow.push_back(pow.back() * *this);
        for (int m = 1; m <= n; ++m) {
            C acc(0);
            for (int k = 1; k < m; ++k) acc = acc + q.a[k] * pow[k].a[m];
            C target = (m == 1) ? C(1) : C(0);
            q.a[m] = (target - acc) / pow[m].a[m];  // pow[m].a[m] = a[1]^m
        }
        return q;
    }
};

}  // namespace parkstat
