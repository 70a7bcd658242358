#include "parkstat/symfunc.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "parkstat/forests.hpp"
#include "parkstat/parking.hpp"
#include "parkstat/qalgebra.hpp"

namespace parkstat {

Partition partition_of(const WeakComposition& c) {
    Partition p;
    for (int v : c) {
        if (v < 0) throw std::invalid_argument("partition_of: negative part");
        if (v > 0) p.push_back(v);
    }
    std::sort(p.rbegin(), p.rend());
    return p;
}

int partition_weight(const Partition& p) {
    int n = 0;
    for (int v : p) n += v;
    return n;
}

SymFQ h_of(const WeakComposition& c) {
    return SymFQ::h_term(partition_of(c), BigRat(1));
}

SymFQ e_in_h(int n) {
    if (n < 0) throw std::invalid_argument("e_in_h: negative index");
    static std::vector<SymFQ> cache{SymFQ::unit()};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        // e_m = (-1)^{m+1} sum_{i=0}^{m-1} (-1)^i e_i h_{m-i}
        SymFQ acc;
        for (int i = 0; i < m; ++i) {
            SymFQ term = cache[i] * SymFQ::h(m - i);
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        cache.push_back(m % 2 == 0 ? -acc : acc);
    }
    return cache[n];
}

namespace {

bool word_set_is_invariant(const std::set<Word>& words, int n) {
    for (const auto& w : words)
        for (int i = 1; i < n; ++i)
            if (!words.count(adjacent_swap(w, i))) return false;
    return true;
}

SymFQ pf_symfunc_orbits(int n) {
    SymFQ f;
    for_each_pf(n, [&](const Word& a) {
        if (std::is_sorted(a.begin(), a.end())) f.add_term(partition_of(content(a)), BigRat(1));
    });
    return f;
}

SymFQ pf_symfunc_forests(int n) {
    SymFQ f;
    for_each_increasing_forest(n, [&](const Forest& g) {
        f.add_term(partition_of(parental_content(g)), BigRat(1));
    });
    return f;
}

// PF_n(x) = sum_{k} h_k sum_{c in WComp(n-k,k)} prod PF_{c_i}(x)
SymFQ pf_symfunc_recursion(int n, const std::vector<SymFQ>& smaller) {
    if (n == 0) return SymFQ::unit();
    SymFQ total;
    for (int k = 1; k <= n; ++k) {
        SymFQ hk = SymFQ::h(k);
        for (const auto& c : weak_compositions(n - k, k)) {
            SymFQ term = hk;
            for (int part : c) term = term * smaller[part];
            total = total + term;
        }
    }
    return total;
}

const std::vector<SymFQ>& pf_symfunc_cache(int n) {
    static std::vector<SymFQ> cache;
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        SymFQ rec = pf_symfunc_recursion(m, cache);
        if (rec != pf_symfunc_orbits(m))
            throw std::logic_error("pf_symfunc: recursion disagrees with the orbit construction");
        if (rec != pf_symfunc_forests(m))
            throw std::logic_error("pf_symfunc: recursion disagrees with the forest construction");
        cache.push_back(rec);
    }
    return cache;
}

}  // namespace

SymFQ frobenius_of_word_set(const std::vector<Word>& words, int n) {
    std::set<Word> set(words.begin(), words.end());
    if (!word_set_is_invariant(set, n))
        throw std::invalid_argument("frobenius_of_word_set: word set is not S_n-invariant");
    SymFQ f;
    for (const auto& w : set) {
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("frobenius_of_word_set: length mismatch");
        if (std::is_sorted(w.begin(), w.end())) f.add_term(partition_of(content(w)), BigRat(1));
    }
    return f;
}

SymFQ pf_symfunc(int n) {
    if (n < 0) throw std::invalid_argument("pf_symfunc: negative n");
    return pf_symfunc_cache(n)[n];
}

SymFQ upf_symfunc(int n) {
    if (n < 0) throw std::invalid_argument("upf_symfunc: negative n");
    SymFQ f;
    for (const auto& c : compositions(n)) f.add_term(partition_of(c), BigRat(1));
    return f;
}

SymFT upf_symfunc_graded(int n) {
    if (n < 0) throw std::invalid_argument("upf_symfunc_graded: negative n");
    // route 1: sum_c t^{n - l(c)} h_c
    SymFT by_comp;
    for (const auto& c : compositions(n)) {
        TPoly tpow;
        tpow.set_coeff(n - static_cast<int>(c.size()), BigRat(1));
        by_comp.add_term(partition_of(c), tpow);
    }
    // route 2: sum over weakly increasing UPFs of t^{area} h_{block sizes}
    SymFT by_area;
    for_each_upf(n, [&](const Word& a) {
        if (!std::is_sorted(a.begin(), a.end())) return;
        TPoly tpow;
        tpow.set_coeff(static_cast<int>(area(a)), BigRat(1));
        by_area.add_term(partition_of(block_structure(a).sizes), tpow);
    });
    if (!(by_comp == by_area))
        throw std::logic_error("upf_symfunc_graded: composition and area constructions disagree");
    return by_comp;
}

SymFT pf_symfunc_graded(int n) {
    if (n < 0) throw std::invalid_argument("pf_symfunc_graded: negative n");
    SymFT f;
    for_each_pf(n, [&](const Word& a) {
        if (!std::is_sorted(a.begin(), a.end())) return;
        // area depends only on the entry sum, hence constant on the orbit
        TPoly tpow;
        tpow.set_coeff(static_cast<int>(area(a)), BigRat(1));
        f.add_term(partition_of(content(a)), tpow);
    });
    return f;
}

SymFQ specialize_t1(const SymFT& f) {
    SymFQ r;
    for (const auto& [p, poly] : f.terms) r.add_term(p, poly.eval(BigRat(1)));
    return r;
}

QRat ps(const SymFQ& f) {
    QRat r;
    for (const auto& [p, v] : f.terms) {
        IntPoly den = IntPoly::one();
        for (int part : p) den = den * q_pochhammer(part);
        r = r + QRat(v) * QRat(IntPoly::one(), den);
    }
    return r;
}

SymSeries h_series(int N) {
    SymSeries s(N);
    for (int m = 0; m <= N; ++m) s[m] = SymFQ::h(m);
    return s;
}

SymSeries z_E_minus(int N) {
    SymSeries s(N);
    for (int m = 1; m <= N; ++m) {
        SymFQ e = e_in_h(m - 1);
        s[m] = (m - 1) % 2 == 0 ? e : -e;
    }
    return s;
}

Report verify_pf_sym_routes(int n) {
    Report r("pf-sym-routes", n);
    SymFQ orbits = pf_symfunc_orbits(n);
    SymFQ forests = pf_symfunc_forests(n);
    SymFQ rec = pf_symfunc_recursion(n, pf_symfunc_cache(n > 0 ? n - 1 : 0));
    r.check("orbit route = forest route", orbits == forests, symf_to_string(orbits),
            symf_to_string(forests));
    r.check("orbit route = h-recursion", orbits == rec, symf_to_string(orbits),
            symf_to_string(rec));
    r.check("homogeneous of degree n", orbits.homogeneous_of(n));
    return r;
}

namespace {

std::string coeff_label(int i) { return "z^" + std::to_string(i); }

}  // namespace

Report verify_pf_sym_gf(int N, const SymProvider& provider) {
    if (N < 1) throw std::invalid_argument("verify_pf_sym_gf: N must be positive");
    Report r("pf-sym-gf", N);
    SymSeries A(N);
    for (int m = 1; m <= N; ++m) {
        A[m] = provider(m - 1);
        if (!A[m].homogeneous_of(m - 1)) {
            r.check(coeff_label(m) + " degree bookkeeping", false);
            return r;
        }
    }
    SymSeries got = z_E_minus(N).compose(A);
    SymSeries want = SymSeries::z(N);
    for (int i = 0; i <= N; ++i) {
        bool same = got[i] == want[i];
        if (!same || i == N)
            r.check(coeff_label(i), same, symf_to_string(got[i]), symf_to_string(want[i]));
    }
    return r;
}

Report verify_upf_sym_gf(int N, const SymProvider& provider) {
    if (N < 0) throw std::invalid_argument("verify_upf_sym_gf: N must be nonnegative");
    Report r("upf-sym-gf", N);
    SymSeries U(N), D(N);
    for (int m = 0; m <= N; ++m) {
        U[m] = provider(m);
        D[m] = (m == 0) ? SymFQ::unit() : -SymFQ::h(m);  // 2 - H(z)
    }
    SymSeries got = D * U;
    SymSeries want = SymSeries::constant(N, SymFQ::unit());
    for (int i = 0; i <= N; ++i) {
        bool same = got[i] == want[i];
        if (!same || i == N)
            r.check(coeff_label(i), same, symf_to_string(got[i]), symf_to_string(want[i]));
    }
    return r;
}

Report verify_upf_graded_gf(int N, const SymTProvider& provider) {
    if (N < 0) throw std::invalid_argument("verify_upf_graded_gf: N must be nonnegative");
    Report r("upf-graded-gf", N);
    TPoly t = TPoly::x();
    using S = TruncSeries<SymFT>;
    S U(N), D(N);
    for (int m = 0; m <= N; ++m) {
        U[m] = provider(m);
        if (m == 0) {
            D[m] = SymFT::h_term({}, t);  // [2]_t - H(0) = (1+t) - 1 = t
        } else {
            TPoly tm;
            tm.set_coeff(m, BigRat(-1));
            D[m] = SymFT::h_term({m}, tm);  // -t^m h_m
        }
    }
    S got = D * U;
    S want = S::constant(N, SymFT::h_term({}, t));
    for (int i = 0; i <= N; ++i) {
        bool same = got[i] == want[i];
        if (!same || i == N)
            r.check(coeff_label(i), same, symf_to_string(got[i]), symf_to_string(want[i]));
    }
    return r;
}

Report verify_ps_inversion(const std::vector<Word>& words, int n, const std::string& label,
                           const std::optional<IntPoly>& claimed) {
    Report r("ps-inversion[" + label + "]", n);
    SymFQ frob;
    try {
        frob = frobenius_of_word_set(words, n);
    } catch (const std::invalid_argument& e) {
        r.fail_precondition(e.what());
        return r;
    }
    QRat lhs = QRat(q_pochhammer(n)) * ps(frob);
    QRat rhs(inversion_polynomial(words));
    r.check("(q;q)_n ps(F) = inversion polynomial", lhs == rhs, lhs.str(), rhs.str());
    if (claimed)
        r.check("inversion polynomial matches the claimed one", lhs == QRat(*claimed), lhs.str(),
                poly_to_string(*claimed));
    return r;
}

Report verify_ps_inversion_upf(int n, const std::optional<IntPoly>& claimed) {
    Report r("ps-inversion[upf]", n);
    QRat lhs = QRat(q_pochhammer(n)) * ps(upf_symfunc(n));
    QRat rhs(inversion_polynomial(enumerate_upf(n)));
    r.check("(q;q)_n ps(UPF_n(x)) = UPF_n(q)", lhs == rhs, lhs.str(), rhs.str());
    if (claimed)
        r.check("matches the claimed polynomial", lhs == QRat(*claimed), lhs.str(),
                poly_to_string(*claimed));
    return r;
}

namespace {

std::string tpoly_str(const TPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        BigRat v = p.coeff(i);
        if (v == 0) continue;
        bool neg = v < 0;
        BigRat mag = neg ? BigRat(-v) : v;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool show = (mag != 1) || (i == 0);
        if (show) os << to_string(mag);
        if (i > 0) {
            if (show) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

template <class C, class CoeffStr>
std::string symf_str_impl(const SymF<C>& f, CoeffStr coeff_str) {
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, v] : f.terms) {
        std::string coeff = coeff_str(v);
        if (!first) os << " + ";
        first = false;
        if (p.empty()) {
            os << coeff;
            continue;
        }
        if (coeff != "1") {
            bool wrap = coeff.find(' ') != std::string::npos;
            os << (wrap ? "(" : "") << coeff << (wrap ? ")" : "") << "*";
        }
        os << "h[";
        for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
        os << "]";
    }
    return os.str();
}

template <class C, class CoeffStr>
std::string symf_json_impl(const SymF<C>& f, int n, CoeffStr coeff_str) {
    nlohmann::json j;
    j["n"] = n;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, v] : f.terms) {
        nlohmann::json t;
        t["partition"] = p;
        t["coeff"] = coeff_str(v);
        arr.push_back(t);
    }
    j["terms"] = arr;
    return j.dump();
}

}  // namespace

std::string symf_to_string(const SymFQ& f) {
    return symf_str_impl(f, [](const BigRat& v) { return to_string(v); });
}

std::string symf_to_string(const SymFT& f) {
    return symf_str_impl(f, [](const TPoly& v) { return tpoly_str(v); });
}

std::string symf_to_json(const SymFQ& f, int n) {
    return symf_json_impl(f, n, [](const BigRat& v) { return to_string(v); });
}

std::string symf_to_json(const SymFT& f, int n) {
    return symf_json_impl(f, n, [](const TPoly& v) { return tpoly_str(v); });
}

}  // namespace parkstat
