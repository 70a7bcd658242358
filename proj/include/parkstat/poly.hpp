#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "parkstat/numeric.hpp"

namespace parkstat {

// Dense univariate polynomial over a commutative ring C. Trailing zeros are
// trimmed; the zero polynomial has an empty coefficient vector.
template <class C>
struct Poly {
    std::vector<C> c;  // c[i] = coefficient of x^i

    Poly() = default;
    explicit Poly(C constant) {
        c.push_back(std::move(constant));
        trim();
    }
    explicit Poly(std::vector<C> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(C(1)); }
    static Poly x() { return Poly(std::vector<C>{C(0), C(1)}); }

    void trim() {
        while (!c.empty() && c.back() == C(0)) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    C coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return C(0);
        return c[i];
    }

    void set_coeff(int i, C v) {
        if (i >= static_cast<int>(c.size())) c.resize(i + 1, C(0));
        c[i] = std::move(v);
        trim();
    }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.c.resize(std::max(c.size(), o.c.size()), C(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
        r.trim();
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        Poly r;
        r.c.assign(c.size() + o.c.size() - 1, C(0));
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == C(0)) continue;
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        }
        r.trim();
        return r;
    }

    Poly operator*(const C& s) const {
        Poly r = *this;
        for (auto& v : r.c) v = v * s;
        r.trim();
        return r;
    }

    // multiply by x^k
    Poly shifted(int k) const {
        if (is_zero()) return Poly();
        Poly r;
        r.c.assign(c.size() + k, C(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
        return r;
    }

    Poly derivative() const {
        Poly r;
        for (int i = 1; i < static_cast<int>(c.size()); ++i) r.c.push_back(c[i] * C(i));
        r.trim();
        return r;
    }

    template <class T>
    T eval(const T& x0) const {
        T r(0);
        for (int i = degree(); i >= 0; --i) r = r * x0 + T(c[i]);
        return r;
    }

    Poly pow(int e) const {
        Poly r = one();
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return c < o.c; }
};

using IntPoly = Poly<BigInt>;

// gcd of the coefficients, nonnegative; 0 for the zero polynomial
BigInt poly_content(const IntPoly& p);
// p / content(p), normalized to positive leading coefficient
IntPoly primitive_part(const IntPoly& p);
// primitive-part Euclidean gcd, positive leading coefficient
IntPoly poly_gcd(IntPoly a, IntPoly b);
// exact quotient; throws std::invalid_argument when b does not divide a
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

std::string poly_to_string(const IntPoly& p, const std::string& var = "q");

}  // namespace parkstat
