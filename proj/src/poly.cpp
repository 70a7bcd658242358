#include "parkstat/poly.hpp"

#include <sstream>

#include "parkstat/qrat.hpp"

namespace parkstat {

BigInt poly_content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& v : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = poly_content(p);
    if (p.c.back() < 0) g = -g;
    IntPoly r = p;
    for (auto& v : r.c) v /= g;
    return r;
}

namespace {

// lead(b)^(deg a - deg b + 1) * a mod b, computed over the integers
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    int db = b.degree();
    BigInt lb = b.c.back();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        BigInt la = a.c.back();
        // a <- lb*a - la*x^shift*b
        IntPoly scaled = a * lb;
        IntPoly sub = b.shifted(shift) * la;
        a = scaled - sub;
    }
    return a;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return primitive_part(b) * poly_content(b);
    if (b.is_zero()) return primitive_part(a) * poly_content(a);
    BigInt cont;
    mpz_gcd(cont.get_mpz_t(), poly_content(a).get_mpz_t(), poly_content(b).get_mpz_t());
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = b;
        b = primitive_part(r);
    }
    return a * cont;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    IntPoly rem = a, quot;
    int db = b.degree();
    const BigInt& lb = b.c.back();
    quot.c.assign(a.degree() - db + 1 > 0 ? a.degree() - db + 1 : 0, BigInt(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        BigInt lr = rem.c.back();
        if (lr % lb != 0) throw std::invalid_argument("exact_div: not divisible");
        BigInt q = lr / lb;
        int shift = rem.degree() - db;
        quot.c[shift] = q;
        rem = rem - b.shifted(shift) * q;
    }
    if (!rem.is_zero()) throw std::invalid_argument("exact_div: not divisible");
    quot.trim();
    return quot;
}

std::string poly_to_string(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const BigInt& v = p.c[i];
        if (v == 0) continue;
        BigInt mag = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool show_coeff = (mag != 1) || (i == 0);
        if (show_coeff) os << mag.get_str();
        if (i > 0) {
            if (show_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QRat::QRat(const BigRat& v)
    : num(IntPoly(BigInt(v.get_num()))), den(IntPoly(BigInt(v.get_den()))) {
    normalize();
}

QRat::QRat(IntPoly n, IntPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::invalid_argument("QRat: zero denominator");
    normalize();
}

void QRat::normalize() {
    if (num.is_zero()) {
        den = IntPoly::one();
        return;
    }
    IntPoly g = poly_gcd(num, den);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    if (den.c.back() < 0) {
        num = -num;
        den = -den;
    }
}

QRat QRat::operator+(const QRat& o) const {
    return QRat(num * o.den + o.num * den, den * o.den);
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num = -r.num;
    return r;
}

QRat QRat::operator*(const QRat& o) const {
    if (is_zero() || o.is_zero()) return QRat();
    // cross-cancel first to keep the final gcd small
    IntPoly g1 = poly_gcd(num, o.den);
    IntPoly g2 = poly_gcd(o.num, den);
    return QRat(exact_div(num, g1) * exact_div(o.num, g2),
                exact_div(den, g2) * exact_div(o.den, g1));
}

QRat QRat::operator/(const QRat& o) const {
    if (o.is_zero()) throw std::invalid_argument("QRat: division by zero");
    return *this * QRat(o.den, o.num);
}

BigRat QRat::eval(const BigRat& q0) const {
    BigRat d = den.eval(q0);
    if (d == 0) throw std::invalid_argument("QRat::eval: denominator vanishes");
    BigRat r = num.eval(q0) / d;
    r.canonicalize();
    return r;
}

std::string QRat::str() const {
    if (is_polynomial()) return poly_to_string(num);
    return "(" + poly_to_string(num) + ")/(" + poly_to_string(den) + ")";
}

}  // namespace parkstat
