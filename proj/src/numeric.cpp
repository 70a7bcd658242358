#include "parkstat/numeric.hpp"

namespace parkstat {

BigInt multinomial(const std::vector<int>& parts) {
    long total = 0;
    for (int p : parts) {
        if (p < 0) return 0;
        total += p;
    }
    BigInt r = factorial(static_cast<unsigned long>(total));
    for (int p : parts) r /= factorial(static_cast<unsigned long>(p));
    return r;
}

BigInt catalan_number(int n) {
    if (n < 0) return 0;
    return binomial(2L * n, n) / BigInt(n + 1);
}

BigInt fubini_number(int n) {
    // Fub_n = sum_{j=1..n} C(n,j) Fub_{n-j}, Fub_0 = 1
    static std::vector<BigInt> cache{BigInt(1)};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        BigInt f = 0;
        for (int j = 1; j <= m; ++j) f += binomial(m, j) * cache[m - j];
        cache.push_back(f);
    }
    return n < 0 ? BigInt(0) : cache[n];
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) {
    BigRat c = v;
    c.canonicalize();
    return c.get_str();
}

}  // namespace parkstat
