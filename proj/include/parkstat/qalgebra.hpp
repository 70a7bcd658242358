#pragma once

#include <functional>

#include "parkstat/bipoly.hpp"
#include "parkstat/poly.hpp"
#include "parkstat/qrat.hpp"
#include "parkstat/report.hpp"
#include "parkstat/series.hpp"
#include "parkstat/words.hpp"

namespace parkstat {

// [n]_q = 1 + q + ... + q^{n-1}
IntPoly q_int(int n);
// [n]_q! = [n]_q [n-1]_q ... [1]_q
IntPoly q_factorial(int n);
// (q;q)_n = (1-q)(1-q^2)...(1-q^n) = (1-q)^n [n]_q!
IntPoly q_pochhammer(int n);

IntPoly q_binom(int n, int k);
IntPoly q_multinomial(int n, const WeakComposition& c);

// exp_q(z) = sum z^n/[n]_q!, Exp_q(z) = sum q^C(n,2) z^n/[n]_q!
TruncSeries<QRat> exp_q_series(int N);
TruncSeries<QRat> Exp_q_series(int N);

// coefficient table [{n, numerator, denominator}, ...] as JSON
std::string series_to_json(const TruncSeries<QRat>& s);

// Inversion generating polynomials. Both are computed two independent ways
// (brute-force enumeration and the structural identity) and cross-asserted.
IntPoly pf_q(int n);
IntPoly upf_q(int n);
// just the enumeration route, exposed for tests
IntPoly pf_q_bruteforce(int n);
IntPoly upf_q_bruteforce(int n);
// sum of q^{inv(w)} over an arbitrary word set
IntPoly inversion_polynomial(const std::vector<Word>& words);

// A_n^{inv,asc}(q,t) by enumeration of S_n
BiPoly a_inv_asc(int n);

using QPolyProvider = std::function<IntPoly(int)>;
using BiPolyProvider = std::function<BiPoly(int)>;

// sum PF_n(q) z^{n+1}/[n]_q! is the compositional inverse of z Exp_q(-z)
Report verify_pf_gf(int N, const QPolyProvider& pf_provider = pf_q);
// (2 - exp_q(z)) * sum UPF_n(q) z^n/[n]_q! = 1
Report verify_upf_gf(int N, const QPolyProvider& upf_provider = upf_q);
// A_n(q,2) = UPF_n(q)
Report verify_a_at_2(int n, const QPolyProvider& upf_provider = upf_q);
// (1 - t Exp_q(z(1-t))) (1 + sum t A_n(q,t) z^n/[n]_q!) = 1 - t, coefficients
// in t-polynomials over Q(q)
Report verify_stanley_gf(int N, const BiPolyProvider& a_provider = a_inv_asc);
// the q = 1 shadow: (z e^{-z})^{<-1>} = sum |PF_n| z^{n+1}/n! and
// (2 - e^z) sum Fub_n z^n/n! = 1, with counts drawn from pf_q/upf_q at q=1
Report verify_classical_gf(int N);

}  // namespace parkstat
