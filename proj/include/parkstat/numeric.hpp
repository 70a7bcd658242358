#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace parkstat {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// n!/prod(parts!); zero if any part is negative. Parts may include zeros.
BigInt multinomial(const std::vector<int>& parts);

BigInt catalan_number(int n);

// Fubini (ordered Bell) numbers via the binomial recurrence.
BigInt fubini_number(int n);

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

}  // namespace parkstat
