#pragma once

#include <map>
#include <utility>

#include "parkstat/poly.hpp"
#include "parkstat/qrat.hpp"

namespace parkstat {

// Polynomial in q and t with integer coefficients, canonical sparse form.
struct BiPoly {
    std::map<std::pair<int, int>, BigInt> terms;  // (deg_q, deg_t) -> coeff

    BiPoly() = default;

    static BiPoly monomial(int dq, int dt, BigInt c) {
        BiPoly p;
        if (c != 0) p.terms[{dq, dt}] = std::move(c);
        return p;
    }

    void add_term(int dq, int dt, const BigInt& c) {
        if (c == 0) return;
        auto& slot = terms[{dq, dt}];
        slot += c;
        if (slot == 0) terms.erase({dq, dt});
    }

    BiPoly operator+(const BiPoly& o) const {
        BiPoly r = *this;
        for (const auto& [k, v] : o.terms) r.add_term(k.first, k.second, v);
        return r;
    }

    BiPoly operator*(const BiPoly& o) const {
        BiPoly r;
        for (const auto& [k1, v1] : terms)
            for (const auto& [k2, v2] : o.terms)
                r.add_term(k1.first + k2.first, k1.second + k2.second, v1 * v2);
        return r;
    }

    bool operator==(const BiPoly& o) const { return terms == o.terms; }

    // substitute a concrete integer for t
    IntPoly at_t(const BigInt& t0) const {
        IntPoly r;
        for (const auto& [k, v] : terms) {
            BigInt c = v * int_pow(t0, static_cast<unsigned long>(k.second));
            r.set_coeff(k.first, r.coeff(k.first) + c);
        }
        return r;
    }

    // view as a polynomial in t with coefficients in Q(q)
    Poly<QRat> as_t_poly() const {
        Poly<QRat> r;
        for (const auto& [k, v] : terms) {
            IntPoly mono;
            mono.set_coeff(k.first, v);
            r.set_coeff(k.second, r.coeff(k.second) + QRat(mono));
        }
        return r;
    }

    std::string str() const;
};

}  // namespace parkstat
