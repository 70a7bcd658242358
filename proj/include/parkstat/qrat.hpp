#pragma once

#include "parkstat/poly.hpp"

namespace parkstat {

// Exact rational function in q: a normalized quotient of integer polynomials
// with gcd(num, den) = 1 and a positive leading denominator coefficient.
struct QRat {
    IntPoly num;
    IntPoly den;

    QRat() : num(), den(IntPoly::one()) {}
    QRat(long v) : num(IntPoly(BigInt(v))), den(IntPoly::one()) {}
    QRat(const BigInt& v) : num(IntPoly(v)), den(IntPoly::one()) {}
    QRat(const BigRat& v);
    explicit QRat(IntPoly n) : num(std::move(n)), den(IntPoly::one()) {}
    QRat(IntPoly n, IntPoly d);

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den == IntPoly::one(); }

    QRat operator+(const QRat& o) const;
    QRat operator-() const;
    QRat operator-(const QRat& o) const { return *this + (-o); }
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    bool operator==(const QRat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    // evaluate at a rational point where the denominator does not vanish
    BigRat eval(const BigRat& q0) const;

    std::string str() const;

  private:
    void normalize();
};

}  // namespace parkstat
