#pragma once

#include <map>

#include "parkstat/poly.hpp"
#include "parkstat/qrat.hpp"
#include "parkstat/report.hpp"
#include "parkstat/series.hpp"
#include "parkstat/words.hpp"

namespace parkstat {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

Partition partition_of(const WeakComposition& c);
int partition_weight(const Partition& p);

// Symmetric function in the complete-homogeneous basis: a finite map from
// partitions to coefficients. C is an exact coefficient ring (rationals, or
// polynomials in t over the rationals).
template <class C>
struct SymF {
    std::map<Partition, C> terms;  // no zero coefficients stored

    SymF() = default;
    SymF(long v) {
        if (!(C(v) == C(0))) terms[{}] = C(v);
    }

    static SymF unit() { return SymF(1); }

    static SymF h(int k) {
        if (k < 0) throw std::invalid_argument("SymF::h: negative index");
        SymF f;
        if (k == 0) return unit();
        f.terms[{k}] = C(1);
        return f;
    }

    static SymF h_term(Partition p, C coeff) {
        SymF f;
        if (!(coeff == C(0))) f.terms[std::move(p)] = std::move(coeff);
        return f;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Partition& p, const C& v) {
        if (v == C(0)) return;
        auto it = terms.find(p);
        if (it == terms.end()) {
            terms[p] = v;
        } else {
            it->second = it->second + v;
            if (it->second == C(0)) terms.erase(it);
        }
    }

    SymF operator+(const SymF& o) const {
        SymF r = *this;
        for (const auto& [p, v] : o.terms) r.add_term(p, v);
        return r;
    }

    SymF operator-() const {
        SymF r = *this;
        for (auto& [p, v] : r.terms) v = -v;
        return r;
    }

    SymF operator-(const SymF& o) const { return *this + (-o); }

    // h-basis product: concatenate and re-sort partition parts
    SymF operator*(const SymF& o) const {
        SymF r;
        for (const auto& [p1, v1] : terms)
            for (const auto& [p2, v2] : o.terms) {
                Partition p = p1;
                p.insert(p.end(), p2.begin(), p2.end());
                std::sort(p.rbegin(), p.rend());
                r.add_term(p, v1 * v2);
            }
        return r;
    }

    SymF operator*(const C& s) const {
        SymF r;
        for (const auto& [p, v] : terms) r.add_term(p, v * s);
        return r;
    }

    bool operator==(const SymF& o) const { return terms == o.terms; }
    bool operator!=(const SymF& o) const { return !(*this == o); }

    bool homogeneous_of(int n) const {
        for (const auto& [p, v] : terms)
            if (partition_weight(p) != n) return false;
        return true;
    }
};

using SymFQ = SymF<BigRat>;          // rational coefficients
using TPoly = Poly<BigRat>;          // polynomials in t over the rationals
using SymFT = SymF<TPoly>;           // t-graded coefficients
using SymSeries = TruncSeries<SymFQ>;

SymFQ h_of(const WeakComposition& c);
// e_n expanded in the h-basis via sum_{i=0..n} (-1)^i e_i h_{n-i} = 0
SymFQ e_in_h(int n);

// Frobenius image of an S_n-invariant word set: sum of h_{con(w)} over the
// weakly increasing members. Verifies invariance (closure under adjacent
// position swaps) and throws when it fails.
SymFQ frobenius_of_word_set(const std::vector<Word>& words, int n);

// Parking-function symmetric function; computed three ways (word orbits,
// increasing forests, the h-recursion) with agreement asserted.
SymFQ pf_symfunc(int n);
// UPF_n(x) = sum over compositions c of n of h_c
SymFQ upf_symfunc(int n);
// graded versions: t tracks area
SymFT upf_symfunc_graded(int n);
SymFT pf_symfunc_graded(int n);

// the t = 1 specialization
SymFQ specialize_t1(const SymFT& f);

// stable principal specialization ps(h_lambda) = prod 1/(q;q)_{lambda_i}
QRat ps(const SymFQ& f);

// H(z) = sum h_n z^n and z E(-z), as series with SymF coefficients
SymSeries h_series(int N);
SymSeries z_E_minus(int N);

using SymProvider = std::function<SymFQ(int)>;
using SymTProvider = std::function<SymFT(int)>;

// the three constructions of PF_n(x) agree
Report verify_pf_sym_routes(int n);
// (z E(-z)) composed with sum PF_n(x) z^{n+1} gives back z
Report verify_pf_sym_gf(int N, const SymProvider& provider = pf_symfunc);
// (2 - H(z)) * sum UPF_n(x) z^n = 1
Report verify_upf_sym_gf(int N, const SymProvider& provider = upf_symfunc);
// ([2]_t - H(tz)) * sum UPF_n(x,t) z^n = t
Report verify_upf_graded_gf(int N, const SymTProvider& provider = upf_symfunc_graded);
// (q;q)_n ps(Frobenius image) equals the brute-force inversion polynomial;
// when a claimed polynomial is supplied (e.g. pf_q(n)) it must match too
Report verify_ps_inversion(const std::vector<Word>& words, int n, const std::string& label,
                           const std::optional<IntPoly>& claimed = std::nullopt);
// same, for the UPF module whose Frobenius image is sum_c h_c
Report verify_ps_inversion_upf(int n, const std::optional<IntPoly>& claimed = std::nullopt);

std::string symf_to_string(const SymFQ& f);
std::string symf_to_string(const SymFT& f);
std::string symf_to_json(const SymFQ& f, int n);
std::string symf_to_json(const SymFT& f, int n);

}  // namespace parkstat
